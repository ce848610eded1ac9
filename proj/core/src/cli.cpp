#include "feqs/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "feqs/cayley_io.hpp"
#include "feqs/characters.hpp"
#include "feqs/corpus.hpp"
#include "feqs/equations.hpp"
#include "feqs/families.hpp"
#include "feqs/suites.hpp"
#include "feqs/version.hpp"
#include "json_util.hpp"

namespace feqs {

namespace {

using detail::Json;

struct GlobalOpts {
    double epsilon = 1e-9;
    std::string format = "text";
    std::uint64_t seed = 0;

    NumericPolicy policy() const { return {epsilon}; }
    bool json() const { return format == "json"; }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct EquationKind {
    Sign sign = Sign::Plus;
    bool weighted = false;   // takes --measure
    bool unit_dirac = false; // takes --z0
    bool fixed_g_one = false;
    bool sigma_id_only = false;
};

EquationKind equation_kind(const std::string& eq) {
    if (eq == "kw") return {Sign::Plus, true, false, false, false};
    if (eq == "vvw") return {Sign::Minus, true, false, false, false};
    if (eq == "wilson") return {Sign::Plus, false, false, false, false};
    if (eq == "van1") return {Sign::Minus, false, false, false, false};
    if (eq == "kannappan") return {Sign::Plus, false, true, false, false};
    if (eq == "vanvleck") return {Sign::Minus, false, true, false, false};
    if (eq == "jensen") return {Sign::Plus, false, true, true, false};
    if (eq == "symmetrized") return {Sign::Plus, false, true, false, true};
    throw std::runtime_error("unknown equation '" + eq + "'");
}

EquationSpec make_spec(const Semigroup& s, const EquationKind& kind, const std::string& sigma_spec,
                       const std::string& measure_arg, const std::string& z0_arg) {
    const Automorphism sigma = parse_sigma_spec(s, sigma_spec);
    if (kind.sigma_id_only && !sigma.is_identity())
        throw std::runtime_error("this equation requires --sigma id");
    std::optional<DiracCombination> mu;
    if (kind.weighted) {
        if (measure_arg.empty()) throw std::runtime_error("this equation requires --measure");
        const std::string text =
            measure_arg.front() == '{' ? measure_arg : slurp(measure_arg);
        mu = parse_measure_json(s, text);
        const MeasureCheck check = validate_measure(s, *mu);
        if (!check.ok())
            throw std::runtime_error("invalid measure: atom " + s.name_of(check.z) +
                                     (check.status == MeasureCheck::Status::NonCentralAtom
                                          ? " is not central"
                                          : " is duplicated or the measure is empty"));
    } else if (kind.unit_dirac) {
        if (z0_arg.empty()) throw std::runtime_error("this equation requires --z0");
        const auto z0 = s.element_by_name(z0_arg);
        if (!z0) throw std::runtime_error("unknown element '" + z0_arg + "'");
        const DiracCombination d = DiracCombination::dirac(*z0);
        if (!validate_measure(s, d).ok())
            throw std::runtime_error("element '" + z0_arg + "' is not central");
        mu = d;
    } else {
        if (!measure_arg.empty() || !z0_arg.empty())
            throw std::runtime_error("this equation takes neither --measure nor --z0");
    }
    return EquationSpec(s, kind.sign, sigma, std::move(mu));
}

Json complex_json(Complex v) { return Json{{"re", v.real()}, {"im", v.imag()}}; }

Json match_json(const FamilyMatch& match) {
    Json j;
    j["family"] = to_string(match.tag);
    Json tags = Json::array();
    for (FamilyTag t : match.all_tags) tags.push_back(to_string(t));
    j["all_families"] = std::move(tags);
    if (match.character >= 0) j["character"] = match.character;
    Json params = Json::object();
    for (const auto& [name, value] : match.params) params[name] = complex_json(value);
    j["params"] = std::move(params);
    if (match.phi.size() > 0) j["phi"] = render_cfunction(match.phi);
    j["fit_residual"] = match.fit_residual;
    return j;
}

int cmd_validate(const GlobalOpts& g, const std::string& file, std::ostream& out) {
    const std::string text = slurp(file);
    // surface the counterexample rather than the constructor's exception
    try {
        const Semigroup s = parse_cayley(text);
        if (g.json()) {
            out << Json{{"ok", true}, {"order", s.order()}}.dump() << "\n";
        } else {
            out << "ok: associative, order " << s.order() << "\n";
        }
        return 0;
    } catch (const ParseError& e) {
        if (g.json())
            out << Json{{"ok", false}, {"error", e.what()}}.dump() << "\n";
        else
            out << "invalid: " << e.what() << "\n";
        return 1;
    }
}

int cmd_info(const GlobalOpts& g, const std::string& file, std::ostream& out) {
    const Semigroup s = load_cayley_file(file);
    const auto center = compute_center(s);
    const auto idem = idempotents(s);
    const auto neutral = find_neutral(s);
    const auto autos = enumerate_automorphisms(s);
    const auto chars = enumerate_multiplicative(s);

    auto name_list = [&](const std::vector<ElementId>& xs) {
        std::string text;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) text += ",";
            text += s.name_of(xs[i]);
        }
        return text;
    };

    if (g.json()) {
        Json doc;
        doc["order"] = s.order();
        doc["center"] = Json::array();
        for (ElementId z : center) doc["center"].push_back(s.name_of(z));
        doc["idempotents"] = Json::array();
        for (ElementId z : idem) doc["idempotents"].push_back(s.name_of(z));
        doc["neutral"] = neutral ? Json(s.name_of(*neutral)) : Json(nullptr);
        doc["automorphisms"] = Json::array();
        for (const auto& a : autos)
            doc["automorphisms"].push_back(
                Json{{"perm", render_sigma_spec(a)}, {"involutive", a.involutive}});
        doc["characters"] = Json::array();
        for (size_t i = 0; i < chars.size(); ++i)
            doc["characters"].push_back(Json{{"index", i},
                                             {"exact", chars[i].to_string()},
                                             {"values", render_cfunction(chars[i].materialized)}});
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "order: " << s.order() << "\n";
    out << "center: {" << name_list(center) << "}\n";
    out << "idempotents: {" << name_list(idem) << "}\n";
    out << "neutral: " << (neutral ? s.name_of(*neutral) : "none") << "\n";
    out << "automorphisms (" << autos.size() << "):\n";
    for (const auto& a : autos)
        out << "  " << render_sigma_spec(a) << (a.involutive ? "  [involutive]" : "") << "\n";
    out << "characters (" << chars.size() << "):\n";
    for (size_t i = 0; i < chars.size(); ++i)
        out << "  [" << i << "] " << chars[i].to_string() << "  =  "
            << render_cfunction(chars[i].materialized) << "\n";
    return 0;
}

CFunction resolve_g(const EquationSpec& spec, const std::vector<Character>& chars,
                    const std::string& g_arg) {
    const Semigroup& s = spec.binding();
    std::string family_json;
    if (g_arg.rfind("family:", 0) == 0)
        family_json = g_arg.substr(7);
    else if (!g_arg.empty() && g_arg.front() == '@')
        family_json = slurp(g_arg.substr(1));
    if (!family_json.empty()) {
        const SolutionFamily fam = parse_family_json(s, chars, family_json);
        return build_family(spec, fam, NumericPolicy{}).g;
    }
    CFunction g = parse_cfunction(g_arg);
    if (g.size() != s.order()) throw std::runtime_error("--g has the wrong number of values");
    return g;
}

int cmd_solve(const GlobalOpts& g, const std::string& eq, const std::string& file,
              const std::string& sigma_spec, const std::string& measure_arg,
              const std::string& z0_arg, const std::string& g_arg, std::ostream& out) {
    const Semigroup s = load_cayley_file(file);
    const EquationKind kind = equation_kind(eq);
    const EquationSpec spec = make_spec(s, kind, sigma_spec, measure_arg, z0_arg);
    const std::vector<Character> chars = enumerate_multiplicative(s);

    CFunction gfun;
    if (kind.fixed_g_one) {
        if (!g_arg.empty()) throw std::runtime_error("jensen fixes g = 1; drop --g");
        gfun = CFunction::ones(s.order());
    } else {
        if (g_arg.empty()) throw std::runtime_error("solve requires --g");
        gfun = resolve_g(spec, chars, g_arg);
    }

    const auto basis = nullspace(assemble_linear_system(spec, gfun), g.policy());
    Json doc;
    doc["command"] = "solve";
    doc["eq"] = eq;
    doc["g"] = render_cfunction(gfun);
    doc["nullspace_dim"] = basis.size();
    doc["basis"] = Json::array();
    for (const auto& f : basis) {
        Json item;
        item["f"] = render_cfunction(f);
        item["residual"] = residual_max(spec, f, gfun);
        try {
            item["classification"] =
                match_json(classify(spec, f, gfun, chars, NumericPolicy{10.0 * g.epsilon}));
        } catch (const NotASolution& e) {
            item["classification"] = Json{{"error", e.what()}};
        }
        doc["basis"].push_back(std::move(item));
    }
    if (g.json()) {
        out << doc.dump(2) << "\n";
    } else {
        out << "nullspace dimension: " << basis.size() << "\n";
        for (const auto& item : doc["basis"]) {
            out << "  f = " << item["f"].get<std::string>() << "\n";
            if (item["classification"].contains("family"))
                out << "    family: " << item["classification"]["family"].get<std::string>()
                    << "  fit_residual: " << item["classification"]["fit_residual"].get<double>()
                    << "\n";
        }
    }
    return 0;
}

int cmd_classify(const GlobalOpts& g, const std::string& eq, const std::string& file,
                 const std::string& sigma_spec, const std::string& measure_arg,
                 const std::string& z0_arg, const std::string& f_arg, const std::string& g_arg,
                 std::ostream& out) {
    const Semigroup s = load_cayley_file(file);
    const EquationKind kind = equation_kind(eq);
    const EquationSpec spec = make_spec(s, kind, sigma_spec, measure_arg, z0_arg);
    const std::vector<Character> chars = enumerate_multiplicative(s);

    const CFunction f = parse_cfunction(f_arg);
    const CFunction gfun = kind.fixed_g_one ? CFunction::ones(s.order()) : parse_cfunction(g_arg);
    if (f.size() != s.order() || gfun.size() != s.order())
        throw std::runtime_error("--f/--g have the wrong number of values");

    const double res = residual_max(spec, f, gfun);
    Json doc;
    doc["command"] = "classify";
    doc["eq"] = eq;
    doc["residual_max"] = res;
    int code = 0;
    if (res > g.epsilon) {
        doc["classification"] = Json{{"error", "not a solution"}};
        code = 1;
    } else {
        const FamilyMatch match = classify(spec, f, gfun, chars, g.policy());
        doc["classification"] = match_json(match);
        if (!match.classified()) code = 1;
    }
    if (g.json())
        out << doc.dump(2) << "\n";
    else if (code == 0)
        out << "residual_max: " << res << "\nfamily: "
            << doc["classification"]["family"].get<std::string>() << "\n";
    else
        out << "residual_max: " << res << "\nnot classified\n";
    return code;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, const std::string& corpus_arg,
               const std::string& command_echo, std::ostream& out) {
    const std::vector<CorpusEntry> corpus =
        corpus_arg == "builtin" ? builtin_corpus() : load_corpus_dir(corpus_arg);
    SuiteOptions options;
    options.policy = g.policy();
    options.seed = g.seed;
    Report report = run_suite(suite, corpus, options);
    report.command = command_echo;
    report.corpus = corpus_arg;
    out << (g.json() ? render_report_json(report) : render_report_text(report));
    return report.all_passed() ? 0 : 1;
}

int cmd_gen(const GlobalOpts& g, int order, bool dedup, std::ostream& out) {
    const auto semis = generate_semigroups(order, dedup);
    if (g.json()) {
        Json doc = Json::array();
        for (const auto& s : semis) {
            Json flat = Json::array();
            for (int x = 0; x < s.order(); ++x)
                for (int y = 0; y < s.order(); ++y) flat.push_back(s.at(x, y));
            doc.push_back(std::move(flat));
        }
        out << doc.dump() << "\n";
        return 0;
    }
    for (const auto& s : semis) {
        for (int x = 0; x < s.order(); ++x)
            for (int y = 0; y < s.order(); ++y) {
                if (x || y) out << ' ';
                out << s.at(x, y);
            }
        out << "\n";
    }
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-semigroup functional equation workbench"};
    app.set_version_flag("--version", kVersion);

    GlobalOpts g;
    app.add_option("--epsilon", g.epsilon, "numeric tolerance (max-abs norm)")
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
    app.require_subcommand(1);

    std::string file, eq, sigma_spec = "id", measure_arg, z0_arg, f_arg, g_arg;
    std::string suite = "all", corpus_arg = "builtin";
    int order = 1;
    bool dedup = false;

    CLI::App* validate = app.add_subcommand("validate", "check a .cayley file");
    validate->add_option("file", file, "cayley table file")->required();

    CLI::App* info = app.add_subcommand("info", "structure of a semigroup");
    info->add_option("file", file, "cayley table file")->required();

    auto add_eq_options = [&](CLI::App* cmd) {
        cmd->add_option("--eq", eq,
                        "equation: kw|vvw|wilson|van1|kannappan|vanvleck|jensen|symmetrized")
            ->required();
        cmd->add_option("--sigma", sigma_spec, "involutive automorphism: id or image list");
        cmd->add_option("--measure", measure_arg, "measure JSON (inline or file path)");
        cmd->add_option("--z0", z0_arg, "central element for the unit-atom variants");
        cmd->add_option("file", file, "cayley table file")->required();
    };

    CLI::App* solve = app.add_subcommand("solve", "nullspace of the equation for fixed g");
    add_eq_options(solve);
    solve->add_option("--g", g_arg, "g: function literal, family:<json>, or @file");

    CLI::App* classify_cmd = app.add_subcommand("classify", "map a solution pair to its family");
    add_eq_options(classify_cmd);
    classify_cmd->add_option("--f", f_arg, "f values")->required();
    classify_cmd->add_option("--g", g_arg, "g values");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite id or 'all'");
    verify->add_option("--corpus", corpus_arg, "'builtin' or a directory of .cayley files");

    CLI::App* gen = app.add_subcommand("gen", "enumerate semigroups of a given order");
    gen->add_option("--order", order, "order (1..3)")->required();
    gen->add_flag("--dedup", dedup, "one representative per isomorphism class");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::string command_echo = "feqs";
    for (const auto& a : args) command_echo += " " + a;

    try {
        if (validate->parsed()) return cmd_validate(g, file, out);
        if (info->parsed()) return cmd_info(g, file, out);
        if (solve->parsed())
            return cmd_solve(g, eq, file, sigma_spec, measure_arg, z0_arg, g_arg, out);
        if (classify_cmd->parsed())
            return cmd_classify(g, eq, file, sigma_spec, measure_arg, z0_arg, f_arg, g_arg, out);
        if (verify->parsed()) return cmd_verify(g, suite, corpus_arg, command_echo, out);
        if (gen->parsed()) return cmd_gen(g, order, dedup, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace feqs

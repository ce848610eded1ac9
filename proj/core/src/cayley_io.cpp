#include "feqs/cayley_io.hpp"

#include <fstream>
#include <sstream>

namespace feqs {

namespace {

struct Line {
    std::string text;
    int number;  // 1-based position in the file
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back({line, number});
    }
    return out;
}

}  // namespace

Semigroup parse_cayley(const std::string& text) {
    const std::vector<Line> lines = significant_lines(text);
    if (lines.empty()) throw ParseError("cayley: missing order line", 1, 1);

    std::istringstream head(lines[0].text);
    long n = 0;
    if (!(head >> n) || n < 1)
        throw ParseError("cayley: expected a positive order", lines[0].number, 1);
    std::string trailing;
    if (head >> trailing)
        throw ParseError("cayley: unexpected token after order", lines[0].number,
                         static_cast<int>(lines[0].text.find(trailing)) + 1);
    if (static_cast<size_t>(n) + 1 > lines.size())
        throw ParseError("cayley: expected " + std::to_string(n) + " table rows",
                         lines.back().number, 1);

    CayleyTable table(n, std::vector<ElementId>(n));
    for (long x = 0; x < n; ++x) {
        const Line& row = lines[x + 1];
        // tokenize by hand so errors can name their column
        std::vector<std::pair<std::string, int>> tokens;
        for (size_t i = 0; i < row.text.size();) {
            if (std::isspace(static_cast<unsigned char>(row.text[i]))) {
                ++i;
                continue;
            }
            const size_t start = i;
            while (i < row.text.size() && !std::isspace(static_cast<unsigned char>(row.text[i])))
                ++i;
            tokens.emplace_back(row.text.substr(start, i - start), static_cast<int>(start) + 1);
        }
        if (static_cast<long>(tokens.size()) != n)
            throw ParseError("cayley: row " + std::to_string(x) + " needs " + std::to_string(n) +
                                 " entries",
                             row.number, static_cast<int>(row.text.size()) + 1);
        for (long y = 0; y < n; ++y) {
            const auto& [tok, col] = tokens[y];
            long v = -1;
            try {
                size_t used = 0;
                v = std::stol(tok, &used);
                if (used != tok.size()) v = -1;
            } catch (...) {
                v = -1;
            }
            if (v < 0 && tok.find_first_not_of("0123456789-") != std::string::npos)
                throw ParseError("cayley: expected an integer, got '" + tok + "'", row.number, col);
            if (v < 0 || v >= n)
                throw ParseError("cayley: entry " + tok + " out of range", row.number, col);
            table[x][y] = static_cast<ElementId>(v);
        }
    }

    std::vector<std::string> names;
    size_t next = static_cast<size_t>(n) + 1;
    if (next < lines.size()) {
        const Line& tail = lines[next];
        if (tail.text.rfind("names:", 0) != 0)
            throw ParseError("cayley: expected \"names:\" line or end of file", tail.number, 1);
        std::string tok;
        const std::string body = tail.text.substr(6);
        for (size_t i = 0; i <= body.size(); ++i) {
            if (i == body.size() || body[i] == ',') {
                const size_t a = tok.find_first_not_of(" \t\r");
                const size_t b = tok.find_last_not_of(" \t\r");
                if (a == std::string::npos)
                    throw ParseError("cayley: empty element name", tail.number,
                                     static_cast<int>(i) + 7);
                names.push_back(tok.substr(a, b - a + 1));
                tok.clear();
            } else {
                tok += body[i];
            }
        }
        if (static_cast<long>(names.size()) != n)
            throw ParseError("cayley: expected " + std::to_string(n) + " names", tail.number, 7);
        if (next + 1 < lines.size())
            throw ParseError("cayley: unexpected content after names", lines[next + 1].number, 1);
    }

    const AssocCheck check = validate_associativity(table);
    if (check.status == AssocCheck::Status::Counterexample)
        throw ParseError("cayley: table is not associative at (" + std::to_string(check.x) + "," +
                             std::to_string(check.y) + "," + std::to_string(check.z) + ")",
                         lines[1].number, 1);
    return Semigroup(std::move(table), std::move(names));
}

std::string render_cayley(const Semigroup& s) {
    std::ostringstream out;
    out << s.order() << "\n";
    for (int x = 0; x < s.order(); ++x) {
        for (int y = 0; y < s.order(); ++y) {
            if (y) out << ' ';
            out << s.at(x, y);
        }
        out << "\n";
    }
    if (s.has_names()) {
        out << "names: ";
        for (int i = 0; i < s.order(); ++i) {
            if (i) out << ',';
            out << s.names()[i];
        }
        out << "\n";
    }
    return out.str();
}

Semigroup load_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cayley(buf.str());
}

}  // namespace feqs

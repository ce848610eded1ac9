#pragma once

#include <string>

#include "feqs/parse_error.hpp"
#include "feqs/semigroup.hpp"

namespace feqs {

/// Cayley table text format (".cayley"):
///   line 1: the order n
///   lines 2..n+1: n space-separated 0-based products (row x holds x*0 .. x*(n-1))
///   optional line "names: a,b,c"
///   "#" starts a comment line; blank lines are ignored
/// parse_cayley(render_cayley(S)) reproduces S exactly.
Semigroup parse_cayley(const std::string& text);

std::string render_cayley(const Semigroup& s);

Semigroup load_cayley_file(const std::string& path);

}  // namespace feqs

#pragma once

#include <string>

#include "pinnacle/lattice.hpp"
#include "pinnacle/perm.hpp"
#include "pinnacle/pinnacle_set.hpp"

namespace pinnacle {

// accepted set spellings: "{4,7,9}", "[4,7,9]", "4,7,9"; "{}" is empty
PinnacleSet parse_set(const std::string& text);

// accepted permutation spellings: compact digit word "813254679" (letters
// are single digits, so n <= 9) or a comma list "8,1,3,...", braced or not
Permutation parse_permutation(const std::string& text);

// accepted path spellings: step letters "UDDUUDU" or a comma list of +-1
LatticePath parse_path(const std::string& text);

std::string format_set(const PinnacleSet& S);
std::string format_permutation(const Permutation& w); // digit word when n <= 9
std::string format_path(const LatticePath& P);

} // namespace pinnacle

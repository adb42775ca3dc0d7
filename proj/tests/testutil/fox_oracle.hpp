#pragma once

// Independent brute-force Fox calculus: plain letter lists, dense integer
// Laurent coefficients, cofactor determinants. Kept deliberately apart from
// the core implementation so the knot fixtures it produces check that path
// rather than echo it.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fox_oracle {

using Letters = std::vector<std::pair<int, int>>;  // (generator, +-1)
using Poly = std::map<std::int64_t, std::int64_t>;  // exponent -> coefficient

Letters parse(const std::string& word);  // capitals are inverses

// Alexander polynomial of a deficiency-one presentation with all generators
// sent to t (Wirtinger-style): determinant of the Fox Jacobian with one
// column removed, normalized to lowest exponent 0 and positive lowest term
Poly alexander(int ngens, const std::vector<Letters>& relators);

std::string to_string(const Poly& p);

}  // namespace fox_oracle

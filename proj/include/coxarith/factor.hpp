#pragma once

#include <utility>
#include <vector>

#include "coxarith/polynomial.hpp"

namespace coxarith {

/* Monic irreducible factors over Q with multiplicities, sorted by degree
 * then coefficients. Constant input yields an empty list. */
std::vector<std::pair<Polynomial, int>> factor(const Polynomial& p);

/* Monic irreducible factors of a squarefree polynomial. */
std::vector<Polynomial> irreducible_factors(const Polynomial& squarefree);

bool is_irreducible(const Polynomial& p);

}  // namespace coxarith

#pragma once

#include <vector>

#include "abl/nf.hpp"
#include "abl/poly.hpp"

namespace abl {

// factorization over F_p into monic irreducibles with multiplicities,
// canonically ordered (degree, then coefficient-lexicographic)
std::vector<std::pair<Poly, int>> factor_mod_p(const Poly& f, const Int& p);

// factorization over Q into irreducible primitive integer polynomials
// (Zassenhaus: Hensel lifting plus exhaustive recombination; desk scale)
std::vector<std::pair<Poly, int>> factor_over_Q(const Poly& f);

bool is_irreducible_over_Q(const Poly& f);

// desk-scale degree guard for relative factorizations, deg(f) * [K:Q]
long factor_degree_bound();

// complete factorization over the number field K by the norm-resultant
// method, monic irreducible factors with multiplicities
std::vector<std::pair<NfPoly, int>> factor_over_field(const Poly& f, const NfCtx& K);

// does f (rational coefficients) have a root in K?
bool has_root_in_field(const Poly& f, const NfCtx& K);
std::vector<NfElem> roots_in_field(const Poly& f, const NfCtx& K);

}  // namespace abl

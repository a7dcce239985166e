#pragma once

#include <vector>

#include "abl/numeric.hpp"

namespace abl {

// The finite field F_p[y]/(u). For the prime field take u = y (deg 1, y = 0).
struct FqCtx {
    Int p;
    std::vector<Int> u;  // monic, coefficients in [0,p)
    long deg() const { return static_cast<long>(u.size()) - 1; }
    Int q() const { return pow_ui(p, deg()); }

    static FqCtx prime_field(const Int& p);
    // extension of degree m: searches for a monic irreducible of degree m over F_p
    static FqCtx extension(const Int& p, long m);
};

// element: coefficient vector of length ctx.deg(), entries in [0,p)
using Fq = std::vector<Int>;

Fq fq_zero(const FqCtx& k);
Fq fq_one(const FqCtx& k);
Fq fq_from_int(const FqCtx& k, const Int& a);
bool fq_is_zero(const Fq& a);
Fq fq_add(const FqCtx& k, const Fq& a, const Fq& b);
Fq fq_sub(const FqCtx& k, const Fq& a, const Fq& b);
Fq fq_neg(const FqCtx& k, const Fq& a);
Fq fq_mul(const FqCtx& k, const Fq& a, const Fq& b);
Fq fq_inv(const FqCtx& k, const Fq& a);
Fq fq_pow(const FqCtx& k, Fq a, Int e);
// all elements, lexicographic order (used for deterministic small scans)
std::vector<Fq> fq_all_elements(const FqCtx& k);

// polynomials over F_q, lowest degree first, no trailing zeros
using FqPoly = std::vector<Fq>;

FqPoly fqp_normalize(FqPoly f);
FqPoly fqp_from_ints(const FqCtx& k, const std::vector<Int>& coeffs);
long fqp_degree(const FqPoly& f);  // -1 for zero
bool fqp_is_zero(const FqPoly& f);
FqPoly fqp_one(const FqCtx& k);
FqPoly fqp_x(const FqCtx& k);
FqPoly fqp_add(const FqCtx& k, const FqPoly& a, const FqPoly& b);
FqPoly fqp_sub(const FqCtx& k, const FqPoly& a, const FqPoly& b);
FqPoly fqp_mul(const FqCtx& k, const FqPoly& a, const FqPoly& b);
std::pair<FqPoly, FqPoly> fqp_divrem(const FqCtx& k, const FqPoly& a, const FqPoly& b);
FqPoly fqp_mod(const FqCtx& k, const FqPoly& a, const FqPoly& b);
FqPoly fqp_gcd(const FqCtx& k, FqPoly a, FqPoly b);  // monic
FqPoly fqp_monic(const FqCtx& k, const FqPoly& f);
FqPoly fqp_derivative(const FqCtx& k, const FqPoly& f);
FqPoly fqp_powmod(const FqCtx& k, FqPoly base, Int e, const FqPoly& m);
Fq fqp_eval(const FqCtx& k, const FqPoly& f, const Fq& x);
int fqp_cmp(const FqPoly& a, const FqPoly& b);  // degree then lex, for canonical output

// complete factorization into monic irreducibles with multiplicities,
// canonically ordered (degree, then coefficient-lexicographic)
std::vector<std::pair<FqPoly, int>> fqp_factor(const FqCtx& k, const FqPoly& f);

bool fqp_is_irreducible(const FqCtx& k, const FqPoly& f);

}  // namespace abl

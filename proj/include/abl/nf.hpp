#pragma once

#include <vector>

#include "abl/poly.hpp"

namespace abl {

// Arithmetic context for K = Q[t]/(F), F monic irreducible over Q.  Elements
// are dense rational coordinate vectors in the power basis 1, t, ..., t^(d-1).
struct NfCtx {
    Poly F;

    explicit NfCtx(Poly defining);
    long degree() const { return F.degree(); }
};

using NfElem = std::vector<Rat>;

NfElem nf_zero(const NfCtx& K);
NfElem nf_one(const NfCtx& K);
NfElem nf_from_rat(const NfCtx& K, const Rat& a);
NfElem nf_gen(const NfCtx& K);  // the class of t
bool nf_is_zero(const NfElem& a);
bool nf_is_rational(const NfElem& a);
NfElem nf_add(const NfCtx& K, const NfElem& a, const NfElem& b);
NfElem nf_sub(const NfCtx& K, const NfElem& a, const NfElem& b);
NfElem nf_neg(const NfCtx& K, const NfElem& a);
NfElem nf_mul(const NfCtx& K, const NfElem& a, const NfElem& b);
NfElem nf_inv(const NfCtx& K, const NfElem& a);
NfElem nf_smul(const NfCtx& K, const NfElem& a, const Rat& s);

// polynomials over K, lowest degree first, no trailing zeros
struct NfPoly {
    std::vector<NfElem> c;

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

NfPoly nfp_normalize(const NfCtx& K, NfPoly f);
NfPoly nfp_from_rational(const NfCtx& K, const Poly& f);  // coefficients become constants
NfPoly nfp_one(const NfCtx& K);
NfPoly nfp_add(const NfCtx& K, const NfPoly& a, const NfPoly& b);
NfPoly nfp_sub(const NfCtx& K, const NfPoly& a, const NfPoly& b);
NfPoly nfp_mul(const NfCtx& K, const NfPoly& a, const NfPoly& b);
std::pair<NfPoly, NfPoly> nfp_divrem(const NfCtx& K, const NfPoly& a, const NfPoly& b);
NfPoly nfp_mod(const NfCtx& K, const NfPoly& a, const NfPoly& b);
NfPoly nfp_gcd(const NfCtx& K, NfPoly a, NfPoly b);  // monic
NfPoly nfp_monic(const NfCtx& K, const NfPoly& f);
NfPoly nfp_derivative(const NfCtx& K, const NfPoly& f);
NfElem nfp_eval(const NfCtx& K, const NfPoly& f, const NfElem& x);
bool nfp_eq(const NfPoly& a, const NfPoly& b);
int nfp_cmp(const NfPoly& a, const NfPoly& b);
std::string nfp_str(const NfPoly& f, const std::string& var = "x",
                    const std::string& gen = "t");

}  // namespace abl

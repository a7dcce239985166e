#include "abl/nf.hpp"

#include <algorithm>
#include <sstream>

namespace abl {

NfCtx::NfCtx(Poly defining) : F(std::move(defining)) {
    if (F.degree() < 1 || !F.is_monic() || !F.has_integer_coeffs())
        throw input_error("defining polynomial must be monic integral of positive degree");
}

NfElem nf_zero(const NfCtx& K) { return NfElem(K.degree(), Rat(0)); }

NfElem nf_one(const NfCtx& K) {
    NfElem a(K.degree(), Rat(0));
    a[0] = 1;
    return a;
}

NfElem nf_from_rat(const NfCtx& K, const Rat& q) {
    NfElem a(K.degree(), Rat(0));
    a[0] = q;
    return a;
}

NfElem nf_gen(const NfCtx& K) {
    NfElem a(K.degree(), Rat(0));
    if (K.degree() == 1) {
        a[0] = -K.F.coeff(0);
    } else {
        a[1] = 1;
    }
    return a;
}

bool nf_is_zero(const NfElem& a) {
    for (auto& q : a)
        if (q != 0) return false;
    return true;
}

bool nf_is_rational(const NfElem& a) {
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

NfElem nf_add(const NfCtx& K, const NfElem& a, const NfElem& b) {
    NfElem r(K.degree());
    for (long i = 0; i < K.degree(); ++i) r[i] = a[i] + b[i];
    return r;
}

NfElem nf_sub(const NfCtx& K, const NfElem& a, const NfElem& b) {
    NfElem r(K.degree());
    for (long i = 0; i < K.degree(); ++i) r[i] = a[i] - b[i];
    return r;
}

NfElem nf_neg(const NfCtx& K, const NfElem& a) {
    NfElem r(K.degree());
    for (long i = 0; i < K.degree(); ++i) r[i] = -a[i];
    return r;
}

NfElem nf_smul(const NfCtx& K, const NfElem& a, const Rat& s) {
    NfElem r(K.degree());
    for (long i = 0; i < K.degree(); ++i) r[i] = a[i] * s;
    return r;
}

NfElem nf_mul(const NfCtx& K, const NfElem& a, const NfElem& b) {
    long d = K.degree();
    std::vector<Rat> prod(std::max<long>(1, 2 * d - 1), Rat(0));
    for (long i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
    }
    for (long i = 2 * d - 2; i >= d; --i) {
        if (prod[i] == 0) continue;
        Rat c = prod[i];
        for (long j = 0; j < d; ++j) prod[i - d + j] -= c * K.F.coeff(j);
        prod[i] = 0;
    }
    prod.resize(d);
    return prod;
}

NfElem nf_inv(const NfCtx& K, const NfElem& a) {
    if (nf_is_zero(a)) throw input_error("inverse of zero field element");
    Poly r0 = K.F, r1 = Poly(std::vector<Rat>(a.begin(), a.end()));
    Poly s0 = Poly::zero(), s1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divrem(r1);
        Poly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0) throw input_error("non-invertible element (reducible modulus?)");
    Poly inv = s0 * (1 / r0.coeff(0));
    NfElem out = nf_zero(K);
    for (long i = 0; i <= inv.degree() && i < K.degree(); ++i) out[i] = inv.coeff(i);
    return out;
}

NfPoly nfp_normalize(const NfCtx& K, NfPoly f) {
    (void)K;
    while (!f.c.empty() && nf_is_zero(f.c.back())) f.c.pop_back();
    return f;
}

NfPoly nfp_from_rational(const NfCtx& K, const Poly& f) {
    NfPoly r;
    for (long i = 0; i <= f.degree(); ++i) r.c.push_back(nf_from_rat(K, f.coeff(i)));
    return nfp_normalize(K, std::move(r));
}

NfPoly nfp_one(const NfCtx& K) {
    NfPoly r;
    r.c.push_back(nf_one(K));
    return r;
}

NfPoly nfp_add(const NfCtx& K, const NfPoly& a, const NfPoly& b) {
    NfPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), nf_zero(K));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] = nf_add(K, r.c[i], a.c[i]);
        if (i < b.c.size()) r.c[i] = nf_add(K, r.c[i], b.c[i]);
    }
    return nfp_normalize(K, std::move(r));
}

NfPoly nfp_sub(const NfCtx& K, const NfPoly& a, const NfPoly& b) {
    NfPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), nf_zero(K));
    for (size_t i = 0; i < r.c.size(); ++i) {
        NfElem x = (i < a.c.size()) ? a.c[i] : nf_zero(K);
        NfElem y = (i < b.c.size()) ? b.c[i] : nf_zero(K);
        r.c[i] = nf_sub(K, x, y);
    }
    return nfp_normalize(K, std::move(r));
}

NfPoly nfp_mul(const NfCtx& K, const NfPoly& a, const NfPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    NfPoly r;
    r.c.resize(a.c.size() + b.c.size() - 1, nf_zero(K));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (nf_is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = nf_add(K, r.c[i + j], nf_mul(K, a.c[i], b.c[j]));
    }
    return nfp_normalize(K, std::move(r));
}

std::pair<NfPoly, NfPoly> nfp_divrem(const NfCtx& K, const NfPoly& a, const NfPoly& b) {
    if (b.is_zero()) throw input_error("division by zero polynomial over K");
    NfElem lcinv = nf_inv(K, b.c.back());
    NfPoly rem = a;
    long db = b.degree();
    NfPoly quo;
    quo.c.resize(std::max<long>(0, a.degree() - db + 1), nf_zero(K));
    for (long i = a.degree(); i >= db; --i) {
        if (nf_is_zero(rem.c[i])) continue;
        NfElem q = nf_mul(K, rem.c[i], lcinv);
        quo.c[i - db] = q;
        for (long j = 0; j <= db; ++j)
            rem.c[i - db + j] = nf_sub(K, rem.c[i - db + j], nf_mul(K, q, b.c[j]));
    }
    return {nfp_normalize(K, std::move(quo)), nfp_normalize(K, std::move(rem))};
}

NfPoly nfp_mod(const NfCtx& K, const NfPoly& a, const NfPoly& b) {
    return nfp_divrem(K, a, b).second;
}

NfPoly nfp_monic(const NfCtx& K, const NfPoly& f) {
    if (f.is_zero()) return f;
    NfElem s = nf_inv(K, f.c.back());
    NfPoly r = f;
    for (auto& c : r.c) c = nf_mul(K, c, s);
    return r;
}

NfPoly nfp_gcd(const NfCtx& K, NfPoly a, NfPoly b) {
    while (!b.is_zero()) {
        NfPoly r = nfp_mod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return nfp_monic(K, a);
}

NfPoly nfp_derivative(const NfCtx& K, const NfPoly& f) {
    NfPoly r;
    if (f.c.size() <= 1) return r;
    r.c.resize(f.c.size() - 1, nf_zero(K));
    for (size_t i = 1; i < f.c.size(); ++i) r.c[i - 1] = nf_smul(K, f.c[i], Rat((long)i));
    return nfp_normalize(K, std::move(r));
}

NfElem nfp_eval(const NfCtx& K, const NfPoly& f, const NfElem& x) {
    NfElem acc = nf_zero(K);
    for (long i = f.degree(); i >= 0; --i) acc = nf_add(K, nf_mul(K, acc, x), f.c[i]);
    return acc;
}

bool nfp_eq(const NfPoly& a, const NfPoly& b) { return a.c == b.c; }

int nfp_cmp(const NfPoly& a, const NfPoly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size() ? -1 : 1;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
    }
    return 0;
}

std::string nfp_str(const NfPoly& f, const std::string& var, const std::string& gen) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = f.degree(); i >= 0; --i) {
        if (nf_is_zero(f.c[i])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(";
        bool inner = true;
        for (long j = static_cast<long>(f.c[i].size()) - 1; j >= 0; --j) {
            if (f.c[i][j] == 0) continue;
            if (!inner) os << " + ";
            inner = false;
            os << f.c[i][j].get_str();
            if (j > 0) os << "*" << gen;
            if (j > 1) os << "^" << j;
        }
        if (inner) os << "0";
        os << ")";
        if (i > 0) os << "*" << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace abl

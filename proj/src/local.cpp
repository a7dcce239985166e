#include "abl/local.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "abl/fq.hpp"

namespace abl {

long precision_cap() {
    if (const char* env = std::getenv("ABL_PRECISION_CAP")) {
        long v = std::atol(env);
        if (v >= 16) return v;
    }
    return 4096;
}

namespace {

// structural failure of the first-order analysis (not cured by precision)
struct wild_error : precision_error {
    using precision_error::precision_error;
};

constexpr long kMinWork = 6;

// ---------------------------------------------------------------------------
// W = Z_p[y]/(u), an unramified coefficient ring at precision p^M.
// Elements are coefficient vectors of length dim() with entries in [0, p^M).
// The base Q_p is dim 1 with u = y.
// ---------------------------------------------------------------------------
struct Unr {
    Int p;
    long M;
    Int pM;
    std::vector<Int> u;  // monic, small integer lift of an irreducible mod p
    FqCtx kbar;

    long dim() const { return static_cast<long>(u.size()) - 1; }

    static Unr base(const Int& p, long M) {
        Unr w;
        w.p = p;
        w.M = M;
        w.pM = pow_ui(p, M);
        w.u = {Int(0), Int(1)};
        w.kbar = FqCtx::prime_field(p);
        return w;
    }

    static Unr extension_of(const Unr& W, long rel_degree) {
        Unr w;
        w.p = W.p;
        w.M = W.M;
        w.pM = W.pM;
        w.kbar = FqCtx::extension(W.p, W.dim() * rel_degree);
        w.u.clear();
        for (auto& c : w.kbar.u) w.u.push_back(c);
        return w;
    }
};

using WEl = std::vector<Int>;
using WPol = std::vector<WEl>;

WEl w_zero(const Unr& W) { return WEl(W.dim(), Int(0)); }

WEl w_one(const Unr& W) {
    WEl r(W.dim(), Int(0));
    r[0] = 1;
    return r;
}

bool w_is_zero(const WEl& a) {
    for (auto& c : a)
        if (c != 0) return false;
    return true;
}

WEl w_add(const Unr& W, const WEl& a, const WEl& b) {
    WEl r(W.dim());
    for (long i = 0; i < W.dim(); ++i) r[i] = mod(a[i] + b[i], W.pM);
    return r;
}

WEl w_sub(const Unr& W, const WEl& a, const WEl& b) {
    WEl r(W.dim());
    for (long i = 0; i < W.dim(); ++i) r[i] = mod(a[i] - b[i], W.pM);
    return r;
}

WEl w_neg(const Unr& W, const WEl& a) {
    WEl r(W.dim());
    for (long i = 0; i < W.dim(); ++i) r[i] = mod(-a[i], W.pM);
    return r;
}

WEl w_mul(const Unr& W, const WEl& a, const WEl& b) {
    long d = W.dim();
    std::vector<Int> prod(std::max<long>(1, 2 * d - 1), Int(0));
    for (long i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
    }
    for (long i = 2 * d - 2; i >= d; --i) {
        if (prod[i] == 0) continue;
        Int c = prod[i];
        for (long j = 0; j < d; ++j) prod[i - d + j] -= c * W.u[j];
        prod[i] = 0;
    }
    WEl r(d);
    for (long i = 0; i < d; ++i) r[i] = mod(prod[i], W.pM);
    return r;
}

WEl w_smul(const Unr& W, const WEl& a, const Int& s) {
    WEl r(W.dim());
    for (long i = 0; i < W.dim(); ++i) r[i] = mod(a[i] * s, W.pM);
    return r;
}

// min p-adic valuation over coordinates; W.M when zero at precision
long w_val(const Unr& W, const WEl& a) {
    long v = W.M;
    for (auto& c : a)
        if (c != 0) v = std::min(v, valuation(c, W.p));
    return v;
}

Fq w_reduce(const Unr& W, const WEl& a) {
    Fq r(W.dim());
    for (long i = 0; i < W.dim(); ++i) r[i] = mod(a[i], W.p);
    return r;
}

WEl w_lift(const Unr& W, const Fq& a) {
    WEl r(W.dim());
    for (long i = 0; i < W.dim(); ++i) r[i] = a[i];
    return r;
}

bool w_is_unit(const Unr& W, const WEl& a) { return !fq_is_zero(w_reduce(W, a)); }

WEl w_inv(const Unr& W, const WEl& a) {
    if (!w_is_unit(W, a)) throw input_error("inverse of non-unit in W");
    WEl z = w_lift(W, fq_inv(W.kbar, w_reduce(W, a)));
    long steps = 1;
    for (long acc = 1; acc < W.M; acc *= 2) ++steps;
    WEl two = w_zero(W);
    two[0] = 2;
    for (long s = 0; s < steps; ++s) {
        WEl az = w_mul(W, a, z);
        z = w_mul(W, z, w_sub(W, two, az));
    }
    return z;
}

// exact division by p^k (requires all coordinates divisible)
WEl w_div_p(const Unr& W, const WEl& a, long k) {
    if (k == 0) return a;
    Int pk = pow_ui(W.p, k);
    WEl r(W.dim());
    for (long i = 0; i < W.dim(); ++i) {
        if (a[i] % pk != 0) throw precision_error("non-exact division by p^k");
        r[i] = a[i] / pk;
    }
    return r;
}

WPol wp_normalize(WPol f) {
    while (!f.empty() && w_is_zero(f.back())) f.pop_back();
    return f;
}

long wp_degree(const WPol& f) { return static_cast<long>(f.size()) - 1; }

WPol wp_mul(const Unr& W, const WPol& a, const WPol& b) {
    if (a.empty() || b.empty()) return {};
    WPol r(a.size() + b.size() - 1, w_zero(W));
    for (size_t i = 0; i < a.size(); ++i) {
        if (w_is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = w_add(W, r[i + j], w_mul(W, a[i], b[j]));
    }
    return wp_normalize(std::move(r));
}

WPol wp_add(const Unr& W, const WPol& a, const WPol& b) {
    WPol r(std::max(a.size(), b.size()), w_zero(W));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = w_add(W, r[i], a[i]);
        if (i < b.size()) r[i] = w_add(W, r[i], b[i]);
    }
    return wp_normalize(std::move(r));
}

WPol wp_sub(const Unr& W, const WPol& a, const WPol& b) {
    WPol r(std::max(a.size(), b.size()), w_zero(W));
    for (size_t i = 0; i < r.size(); ++i) {
        WEl x = (i < a.size()) ? a[i] : w_zero(W);
        WEl y = (i < b.size()) ? b[i] : w_zero(W);
        r[i] = w_sub(W, x, y);
    }
    return wp_normalize(std::move(r));
}

long wp_content_val(const Unr& W, const WPol& f) {
    long v = W.M;
    for (auto& c : f) v = std::min(v, w_val(W, c));
    return v;
}

FqPoly wp_reduce(const Unr& W, const WPol& f) {
    FqPoly r;
    r.reserve(f.size());
    for (auto& c : f) r.push_back(w_reduce(W, c));
    return fqp_normalize(std::move(r));
}

WPol wp_lift(const Unr& W, const FqPoly& f) {
    WPol r;
    r.reserve(f.size());
    for (auto& c : f) r.push_back(w_lift(W, c));
    return r;
}

// f(x + c)
WPol wp_shift(const Unr& W, const WPol& f, const WEl& c) {
    WPol acc;
    for (long i = wp_degree(f); i >= 0; --i) {
        WPol next(acc.size() + 1, w_zero(W));
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] = w_add(W, next[j + 1], acc[j]);
            next[j] = w_add(W, next[j], w_mul(W, acc[j], c));
        }
        next[0] = w_add(W, next[0], f[i]);
        acc = std::move(next);
    }
    return wp_normalize(std::move(acc));
}

WEl wp_eval(const Unr& W, const WPol& f, const WEl& x) {
    WEl acc = w_zero(W);
    for (long i = wp_degree(f); i >= 0; --i) acc = w_add(W, w_mul(W, acc, x), f[i]);
    return acc;
}

WPol wp_derivative(const Unr& W, const WPol& f) {
    if (f.size() <= 1) return {};
    WPol r(f.size() - 1, w_zero(W));
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = w_smul(W, f[i], Int(i));
    return wp_normalize(std::move(r));
}

// division by a monic divisor
std::pair<WPol, WPol> wp_divrem(const Unr& W, const WPol& a, const WPol& b) {
    long db = wp_degree(b);
    if (db < 0) throw input_error("division by zero W-polynomial");
    WPol rem = a;
    WPol quo(std::max<long>(0, wp_degree(a) - db + 1), w_zero(W));
    for (long i = wp_degree(a); i >= db; --i) {
        WEl q = rem[i];
        if (w_is_zero(q)) continue;
        quo[i - db] = q;
        for (long j = 0; j <= db; ++j) rem[i - db + j] = w_sub(W, rem[i - db + j], w_mul(W, q, b[j]));
    }
    return {wp_normalize(std::move(quo)), wp_normalize(std::move(rem))};
}

// ---------------------------------------------------------------------------
// Exact determinants over Z[y]/(u): lifts of W-elements are exact integers,
// so fraction-free elimination stays exact; only the final reduction mod p^M
// reintroduces the precision limit.
// ---------------------------------------------------------------------------
using ZEl = std::vector<Int>;  // integer polynomial mod u, length dim

ZEl z_mul(const std::vector<Int>& u, const ZEl& a, const ZEl& b) {
    long d = static_cast<long>(u.size()) - 1;
    std::vector<Int> prod(std::max<long>(1, 2 * d - 1), Int(0));
    for (long i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
    }
    for (long i = 2 * d - 2; i >= d; --i) {
        if (prod[i] == 0) continue;
        Int c = prod[i];
        for (long j = 0; j < d; ++j) prod[i - d + j] -= c * u[j];
        prod[i] = 0;
    }
    prod.resize(d);
    return prod;
}

ZEl z_sub(const ZEl& a, const ZEl& b) {
    ZEl r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool z_is_zero(const ZEl& a) {
    for (auto& c : a)
        if (c != 0) return false;
    return true;
}

// exact division a / b in Z[y]/(u); valid under the Bareiss invariant
ZEl z_exact_div(const std::vector<Int>& u, const ZEl& a, const ZEl& b) {
    long d = static_cast<long>(u.size()) - 1;
    if (d == 1) {
        if (b[0] == 0 || a[0] % b[0] != 0) throw precision_error("bareiss division failure");
        return {a[0] / b[0]};
    }
    // solve x * b = a over Q in the basis 1, y, ..., y^(d-1)
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d + 1));
    ZEl ypow = b;
    for (long j = 0; j < d; ++j) {
        for (long i = 0; i < d; ++i) m[i][j] = Rat(ypow[i]);
        ZEl next(d, Int(0));
        for (long i = 0; i < d; ++i) {
            if (i + 1 < d)
                next[i + 1] += ypow[i];
            else
                for (long t = 0; t < d; ++t) next[t] -= ypow[i] * u[t];
        }
        ypow = next;
    }
    for (long i = 0; i < d; ++i) m[i][d] = Rat(a[i]);
    for (long col = 0, row = 0; col < d && row < d; ++col) {
        long piv = -1;
        for (long r = row; r < d; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw precision_error("singular system in z_exact_div");
        std::swap(m[piv], m[row]);
        for (long r = 0; r < d; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat s = m[r][col] / m[row][col];
            for (long c = col; c <= d; ++c) m[r][c] -= s * m[row][c];
        }
        ++row;
    }
    ZEl x(d, Int(0));
    for (long i = 0; i < d; ++i) {
        Rat xi = m[i][d] / m[i][i];
        if (xi.get_den() != 1) throw precision_error("non-integral bareiss quotient");
        x[i] = xi.get_num();
    }
    return x;
}

// Bareiss determinant of an n x n matrix over Z[y]/(u)
ZEl z_det(const std::vector<Int>& u, std::vector<std::vector<ZEl>> m) {
    long n = static_cast<long>(m.size());
    long d = static_cast<long>(u.size()) - 1;
    ZEl prev(d, Int(0));
    prev[0] = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (z_is_zero(m[k][k])) {
            long piv = -1;
            for (long r = k + 1; r < n; ++r)
                if (!z_is_zero(m[r][k])) {
                    piv = r;
                    break;
                }
            if (piv < 0) return ZEl(d, Int(0));
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                ZEl t = z_sub(z_mul(u, m[i][j], m[k][k]), z_mul(u, m[i][k], m[k][j]));
                m[i][j] = z_exact_div(u, t, prev);
            }
            m[i][k] = ZEl(d, Int(0));
        }
        prev = m[k][k];
    }
    ZEl det = m[n - 1][n - 1];
    if (sign < 0)
        for (auto& c : det) c = -c;
    return det;
}

// resultant of two W-polynomials, exact from integer lifts, valid mod p^M
WEl wp_resultant(const Unr& W, const WPol& a, const WPol& b) {
    long da = wp_degree(a), db = wp_degree(b);
    if (da < 0 || db < 0) return w_zero(W);
    long n = da + db;
    if (n == 0) return w_one(W);
    std::vector<std::vector<ZEl>> m(n, std::vector<ZEl>(n, ZEl(W.dim(), Int(0))));
    for (long i = 0; i < db; ++i)
        for (long j = 0; j <= da; ++j) m[i][i + j] = a[da - j];
    for (long i = 0; i < da; ++i)
        for (long j = 0; j <= db; ++j) m[db + i][i + j] = b[db - j];
    ZEl det = z_det(W.u, m);
    WEl r(W.dim());
    for (long i = 0; i < W.dim(); ++i) r[i] = mod(det[i], W.pM);
    return r;
}

// ---------------------------------------------------------------------------
// Newton polygon of a W-polynomial (valuations in p-units).
// ---------------------------------------------------------------------------
struct Seg {
    long num;   // slope = -num/den, reduced, den >= 1
    long den;
    long xlen;  // horizontal length
};

std::vector<Seg> wp_polygon(const Unr& W, const WPol& f, long mu) {
    std::vector<std::pair<long, long>> pts;
    for (long j = 0; j <= wp_degree(f); ++j) {
        long v = w_val(W, f[j]);
        if (v >= mu) continue;
        pts.push_back({j, v});
    }
    if (pts.empty() || pts.back().first != wp_degree(f))
        throw precision_error("leading coefficient not certified");
    std::vector<std::pair<long, long>> hull;
    for (auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            long long cross = (long long)(b.first - a.first) * (pt.second - a.second) -
                              (long long)(b.second - a.second) * (pt.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    for (auto& pr : hull)
        if (pr.second > mu - 2) throw precision_error("newton polygon vertex beyond precision");
    std::vector<Seg> segs;
    for (size_t i = 1; i < hull.size(); ++i) {
        long dx = hull[i].first - hull[i - 1].first;
        long dv = hull[i - 1].second - hull[i].second;
        if (dv == 0) {
            segs.push_back({0, 1, dx});
        } else {
            long g = mpz_get_si(gcd(Int(dx), Int(dv)).get_mpz_t());
            segs.push_back({dv / g, dx / g, dx});
        }
    }
    return segs;
}

// ---------------------------------------------------------------------------
// Two-factor Hensel lifting with slack: f ~ g0*h0, v(Res(g0,h0)) = rho,
// error valuation lambda > 2*rho.  All polynomials monic.
// ---------------------------------------------------------------------------
struct LiftOut {
    WPol g, h;
    long prec;
};

std::optional<LiftOut> slack_hensel(const Unr& W, const WPol& f, WPol g0, long mu) {
    long dg = wp_degree(g0);
    long n = wp_degree(f);
    long dh = n - dg;
    if (dg < 1 || dh < 1) return std::nullopt;
    // cofactor by division: a Newton-quality initial approximation
    auto [h0, rem] = wp_divrem(W, f, g0);
    if (wp_degree(h0) != dh) return std::nullopt;

    auto error_of = [&](const WPol& g, const WPol& h) { return wp_sub(W, f, wp_mul(W, g, h)); };
    WPol e = std::move(rem);
    long lambda = wp_content_val(W, e);

    // Bezout matrix: columns x^i g0 (i < dh) then x^j h0 (j < dg); its
    // determinant agrees with Res(g0, h0) up to sign
    auto build = [&](const WPol& g, const WPol& h) {
        std::vector<std::vector<ZEl>> m(n, std::vector<ZEl>(n, ZEl(W.dim(), Int(0))));
        for (long i = 0; i < dh; ++i)
            for (long j = 0; j <= dg; ++j) m[i + j][i] = g[j];
        for (long i = 0; i < dg; ++i)
            for (long j = 0; j <= dh; ++j) m[i + j][dh + i] = h[j];
        return m;
    };
    auto base = build(g0, h0);
    ZEl den = z_det(W.u, base);
    WEl denw(W.dim());
    for (long i = 0; i < W.dim(); ++i) denw[i] = mod(den[i], W.pM);
    long rho = w_val(W, denw);
    if (2 * rho + 2 >= mu || lambda <= 2 * rho) return std::nullopt;
    WEl den_unit_inv = w_inv(W, w_div_p(W, denw, rho));

    int rounds = 0;
    while (lambda < mu && rounds++ < 64) {
        std::vector<WEl> x(n, w_zero(W));
        bool okall = true;
        for (long col = 0; col < n && okall; ++col) {
            auto mc = base;
            for (long r = 0; r < n; ++r)
                mc[r][col] = (r <= wp_degree(e)) ? e[r] : ZEl(W.dim(), Int(0));
            ZEl detc = z_det(W.u, mc);
            WEl w(W.dim());
            for (long i = 0; i < W.dim(); ++i) w[i] = mod(detc[i], W.pM);
            if (!w_is_zero(w) && w_val(W, w) < rho) {
                okall = false;
                break;
            }
            x[col] = w_mul(W, w_div_p(W, w, rho), den_unit_inv);
        }
        if (!okall) return std::nullopt;
        WPol sigma(x.begin(), x.begin() + dh);
        WPol tau(x.begin() + dh, x.end());
        g0 = wp_add(W, g0, wp_normalize(std::move(tau)));
        h0 = wp_add(W, h0, wp_normalize(std::move(sigma)));
        WPol e2 = error_of(g0, h0);
        long l2 = wp_content_val(W, e2);
        if (l2 <= lambda) return std::nullopt;
        e = std::move(e2);
        lambda = l2;
        base = build(g0, h0);
        den = z_det(W.u, base);
        for (long i = 0; i < W.dim(); ++i) denw[i] = mod(den[i], W.pM);
        long rho2 = w_val(W, denw);
        if (rho2 != rho) {
            rho = rho2;
            if (2 * rho + 2 >= mu || lambda <= 2 * rho) return std::nullopt;
        }
        den_unit_inv = w_inv(W, w_div_p(W, denw, rho));
    }
    if (lambda < mu) return std::nullopt;
    long prec = mu - rho;
    if (prec < kMinWork) return std::nullopt;
    return LiftOut{std::move(g0), std::move(h0), prec};
}

// ---------------------------------------------------------------------------
// The factorization recursion over an unramified base.
// ---------------------------------------------------------------------------
struct WFactor {
    WPol g;
    long prec;
    long e, f;  // relative to the base W
};

std::vector<WFactor> factor_rec(const Unr& W, WPol h, long mu, int depth);

WPol lift_power(const Unr& W, const FqPoly& phi, int k) {
    FqPoly pw = fqp_one(W.kbar);
    for (int i = 0; i < k; ++i) pw = fqp_mul(W.kbar, pw, phi);
    return wp_lift(W, pw);
}

std::vector<WFactor> split_coprime(const Unr& W, const WPol& h, long mu,
                                   const std::vector<std::pair<FqPoly, int>>& fac, int depth) {
    WPol g0 = lift_power(W, fac[0].first, fac[0].second);
    auto lifted = slack_hensel(W, h, g0, mu);
    if (!lifted) throw precision_error("coprime hensel split failed");
    auto out = factor_rec(W, lifted->g, lifted->prec, depth + 1);
    auto rest = factor_rec(W, lifted->h, lifted->prec, depth + 1);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

FqPoly segment_residual(const Unr& W, const WPol& h, long mu, const Seg& s) {
    long l = wp_degree(h);
    long lp = s.xlen / s.den;
    long v0 = lp * s.num;
    FqPoly A(lp + 1, fq_zero(W.kbar));
    for (long j = 0; j <= lp; ++j) {
        long idx = j * s.den;
        long want = v0 - j * s.num;
        if (idx > l) throw precision_error("residual index out of range");
        long v = w_val(W, h[idx]);
        if (v < want) throw precision_error("coefficient below newton segment");
        if (v > want) continue;
        A[j] = w_reduce(W, w_div_p(W, h[idx], want));
    }
    return fqp_normalize(std::move(A));
}

WPol residual_pseudofactor(const Unr& W, const FqPoly& P, const Seg& s) {
    long dP = fqp_degree(P);
    WPol g(dP * s.den + 1, w_zero(W));
    for (long j = 0; j <= dP; ++j) {
        WEl c = w_lift(W, P[j]);
        g[j * s.den] = w_smul(W, c, pow_ui(W.p, s.num * (dP - j)));
    }
    return wp_normalize(std::move(g));
}

// Frobenius of W over the degree-m0 subring: y -> lift of y^(p^m0)
WEl frobenius_image(const Unr& W, long m0) {
    Fq yb(W.dim(), Int(0));
    yb[1] = 1;
    Fq target = fq_pow(W.kbar, yb, pow_ui(W.p, m0));
    WEl r = w_lift(W, target);
    WPol up(W.u.size());
    for (size_t i = 0; i < W.u.size(); ++i) up[i] = w_smul(W, w_one(W), W.u[i]);
    WPol upd = wp_derivative(W, up);
    for (int it = 0; it < 64; ++it) {
        WEl val = wp_eval(W, up, r);
        if (w_val(W, val) >= W.M) break;
        r = w_sub(W, r, w_mul(W, val, w_inv(W, wp_eval(W, upd, r))));
    }
    return r;
}

WEl apply_subst(const Unr& W, const WEl& a, const WEl& img) {
    WEl acc = w_zero(W);
    for (long i = W.dim() - 1; i >= 0; --i) {
        acc = w_mul(W, acc, img);
        acc[0] = mod(acc[0] + a[i], W.pM);
    }
    return acc;
}

WEl embed_el(const Unr& W, const WEl& a0, const WEl& yhat) {
    WEl acc = w_zero(W);
    for (long i = static_cast<long>(a0.size()) - 1; i >= 0; --i) {
        acc = w_mul(W, acc, yhat);
        acc[0] = mod(acc[0] + a0[i], W.pM);
    }
    return acc;
}

// express a W-element in the subring generated by yhat (dimension m0)
WEl project_el(const Unr& W, const WEl& a, const std::vector<WEl>& yhat_pows, long m0, long mu) {
    long d = W.dim();
    Int pmu = pow_ui(W.p, mu);
    std::vector<std::vector<Int>> m(d, std::vector<Int>(m0 + 1, Int(0)));
    for (long j = 0; j < m0; ++j)
        for (long i = 0; i < d; ++i) m[i][j] = mod(yhat_pows[j][i], pmu);
    for (long i = 0; i < d; ++i) m[i][m0] = mod(a[i], pmu);
    std::vector<long> pivot_row(m0, -1);
    std::vector<bool> used(d, false);
    for (long col = 0; col < m0; ++col) {
        long piv = -1;
        for (long r = 0; r < d; ++r) {
            if (used[r]) continue;
            if (m[r][col] % W.p != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) throw precision_error("projection pivot failure");
        used[piv] = true;
        pivot_row[col] = piv;
        Int inv = invmod(m[piv][col], pmu);
        for (long c2 = 0; c2 <= m0; ++c2) m[piv][c2] = mod(m[piv][c2] * inv, pmu);
        for (long r = 0; r < d; ++r) {
            if (r == piv || m[r][col] == 0) continue;
            Int s = m[r][col];
            for (long c2 = 0; c2 <= m0; ++c2) m[r][c2] = mod(m[r][c2] - s * m[piv][c2], pmu);
        }
    }
    WEl z(m0, Int(0));
    for (long col = 0; col < m0; ++col) z[col] = m[pivot_row[col]][m0];
    Int tol = pow_ui(W.p, std::max<long>(1, mu - 2));
    for (long r = 0; r < d; ++r) {
        if (used[r]) continue;
        if (mod(m[r][m0], tol) != 0) throw precision_error("element not in subring");
    }
    return z;
}

std::vector<WFactor> factor_via_extension(const Unr& W, const WPol& h, long mu, long rel,
                                          int depth) {
    Unr Wx = Unr::extension_of(W, rel);
    long m0 = W.dim();
    WEl yhat;
    if (m0 == 1) {
        yhat = w_zero(Wx);
    } else {
        FqPoly ubar = fqp_from_ints(Wx.kbar, W.u);
        auto fac = fqp_factor(Wx.kbar, ubar);
        bool found = false;
        for (auto& pr : fac) {
            if (fqp_degree(pr.first) == 1) {
                yhat = w_lift(Wx, fq_neg(Wx.kbar, pr.first[0]));
                found = true;
                break;
            }
        }
        if (!found) throw precision_error("no embedding root found");
        WPol up(W.u.size());
        for (size_t i = 0; i < W.u.size(); ++i) up[i] = w_smul(Wx, w_one(Wx), W.u[i]);
        WPol upd = wp_derivative(Wx, up);
        for (int it = 0; it < 64; ++it) {
            WEl val = wp_eval(Wx, up, yhat);
            if (w_val(Wx, val) >= Wx.M) break;
            yhat = w_sub(Wx, yhat, w_mul(Wx, val, w_inv(Wx, wp_eval(Wx, upd, yhat))));
        }
    }
    std::vector<WEl> yhat_pows(m0, w_one(Wx));
    for (long j = 1; j < m0; ++j) yhat_pows[j] = w_mul(Wx, yhat_pows[j - 1], yhat);

    WPol hx;
    hx.reserve(h.size());
    for (auto& c : h) hx.push_back(embed_el(Wx, c, yhat));
    auto sub = factor_rec(Wx, hx, mu, depth + 1);

    WEl frob = frobenius_image(Wx, m0);
    auto sigma_pol = [&](const WPol& g) {
        WPol r;
        r.reserve(g.size());
        for (auto& c : g) r.push_back(apply_subst(Wx, c, frob));
        return r;
    };
    long mu_out = mu;
    for (auto& s : sub) mu_out = std::min(mu_out, s.prec);
    std::vector<bool> taken(sub.size(), false);
    std::vector<WFactor> out;
    for (size_t i = 0; i < sub.size(); ++i) {
        if (taken[i]) continue;
        std::vector<size_t> orbit{i};
        taken[i] = true;
        WPol cur = sigma_pol(sub[i].g);
        while (true) {
            long best = -1, bestval = -1;
            for (size_t j = 0; j < sub.size(); ++j) {
                if (wp_degree(sub[j].g) != wp_degree(cur)) continue;
                long v = wp_content_val(Wx, wp_sub(Wx, cur, sub[j].g));
                if (v > bestval) {
                    bestval = v;
                    best = static_cast<long>(j);
                }
            }
            if (best < 0 || bestval < mu_out / 2)
                throw precision_error("frobenius orbit matching failed");
            if (static_cast<size_t>(best) == i) break;
            if (taken[best]) throw precision_error("frobenius orbit inconsistency");
            taken[best] = true;
            orbit.push_back(best);
            cur = sigma_pol(sub[best].g);
        }
        WPol prod = {w_one(Wx)};
        for (auto j : orbit) prod = wp_mul(Wx, prod, sub[j].g);
        WPol down;
        down.reserve(prod.size());
        for (auto& c : prod) down.push_back(project_el(Wx, c, yhat_pows, m0, mu_out));
        WFactor wf;
        wf.g = wp_normalize(std::move(down));
        wf.prec = mu_out;
        wf.e = sub[i].e;
        wf.f = sub[i].f * static_cast<long>(orbit.size());
        out.push_back(std::move(wf));
    }
    return out;
}

void unshift_factors(const Unr& W, std::vector<WFactor>& fs, const WEl& c) {
    WEl negc = w_neg(W, c);
    for (auto& f : fs) f.g = wp_shift(W, f.g, negc);
}

std::vector<WFactor> factor_rec(const Unr& W, WPol h, long mu, int depth) {
    if (depth > 64) throw precision_error("recursion depth exceeded");
    if (mu < kMinWork) throw precision_error("working precision exhausted");
    h = wp_normalize(std::move(h));
    long l = wp_degree(h);
    if (l < 1) throw input_error("factor_rec on constant");
    if (l == 1) return {{h, mu, 1, 1}};

    FqPoly hbar = wp_reduce(W, h);
    if (fqp_degree(hbar) != l) throw precision_error("non-monic reduction");
    auto fac = fqp_factor(W.kbar, hbar);
    if (fac.size() >= 2) return split_coprime(W, h, mu, fac, depth);

    const FqPoly& phi = fac[0].first;
    int k = fac[0].second;
    long dphi = fqp_degree(phi);
    if (k == 1) return {{h, mu, 1, l}};  // unramified leaf
    if (dphi >= 2) return factor_via_extension(W, h, mu, dphi, depth);

    // phi linear: shift so the reduction becomes x^l
    WEl c = w_lift(W, fq_neg(W.kbar, phi[0]));
    WPol hs = wp_shift(W, h, c);
    auto segs = wp_polygon(W, hs, mu);
    if (segs.empty()) throw precision_error("empty polygon");

    if (segs.size() == 1) {
        const Seg& s = segs[0];
        if (s.num == 0) throw precision_error("flat polygon after shift");
        if (s.den == l) {
            std::vector<WFactor> out{{hs, mu, l, 1}};
            unshift_factors(W, out, c);
            return out;
        }
        if (s.den == 1) {
            long a = s.num;
            long drop = a * l;
            if (mu - drop < kMinWork) throw precision_error("scaling below working precision");
            WPol ht(hs.size());
            for (long j = 0; j <= l; ++j) ht[j] = w_div_p(W, hs[j], a * (l - j));
            auto subf = factor_rec(W, wp_normalize(std::move(ht)), mu - drop, depth + 1);
            for (auto& wf : subf) {
                long dg2 = wp_degree(wf.g);
                for (long j = 0; j <= dg2; ++j)
                    wf.g[j] = w_smul(W, wf.g[j], pow_ui(W.p, a * (dg2 - j)));
            }
            unshift_factors(W, subf, c);
            return subf;
        }
        FqPoly A = segment_residual(W, hs, mu, s);
        auto afac = fqp_factor(W.kbar, A);
        if (afac.size() >= 2) {
            FqPoly P1 = fqp_one(W.kbar);
            for (int m = 0; m < afac[0].second; ++m) P1 = fqp_mul(W.kbar, P1, afac[0].first);
            auto lifted = slack_hensel(W, hs, residual_pseudofactor(W, P1, s), mu);
            if (!lifted) throw precision_error("residual hensel split failed");
            auto out = factor_rec(W, lifted->g, lifted->prec, depth + 1);
            auto rest = factor_rec(W, lifted->h, lifted->prec, depth + 1);
            out.insert(out.end(), rest.begin(), rest.end());
            unshift_factors(W, out, c);
            return out;
        }
        long dpsi = fqp_degree(afac[0].first);
        if (afac[0].second == 1) {
            // Ore's regular case: irreducible with e = den, f = deg(psi)
            std::vector<WFactor> out{{hs, mu, s.den, dpsi}};
            unshift_factors(W, out, c);
            return out;
        }
        if (dpsi >= 2) {
            auto out = factor_via_extension(W, hs, mu, dpsi, depth);
            unshift_factors(W, out, c);
            return out;
        }
        throw wild_error(
            "wild ramification beyond first-order Newton polygon analysis "
            "(repeated linear residual on a fractional slope)");
    }

    // several segments: split at a vertex via pseudofactors
    for (size_t t = 0; t + 1 < segs.size(); ++t) {
        long i1 = 0;
        for (size_t r = 0; r <= t; ++r) i1 += segs[r].xlen;
        long v1 = w_val(W, hs[i1]);
        if (v1 >= mu) continue;
        WEl pivot_unit_inv = w_inv(W, w_div_p(W, hs[i1], v1));
        bool ok = true;
        WPol g0(i1 + 1, w_zero(W));
        g0[i1] = w_one(W);
        for (long j = 0; j < i1; ++j) {
            long vj = w_val(W, hs[j]);
            if (vj >= mu) continue;
            if (vj < v1) {
                ok = false;
                break;
            }
            g0[j] = w_mul(W, w_div_p(W, hs[j], v1), pivot_unit_inv);
        }
        if (!ok) continue;
        long mu_eff = mu - v1;
        if (mu_eff < kMinWork) continue;
        auto lifted = slack_hensel(W, hs, wp_normalize(std::move(g0)), mu_eff);
        if (!lifted) continue;
        auto out = factor_rec(W, lifted->g, lifted->prec, depth + 1);
        auto rest = factor_rec(W, lifted->h, lifted->prec, depth + 1);
        out.insert(out.end(), rest.begin(), rest.end());
        unshift_factors(W, out, c);
        return out;
    }
    throw precision_error("no convergent vertex split");
}

}  // namespace

// ---------------------------------------------------------------------------
// public API
// ---------------------------------------------------------------------------

NewtonPolygon newton_polygon(const Poly& f, const Int& p) {
    if (f.is_zero()) throw input_error("newton polygon of zero polynomial");
    if (!f.has_integer_coeffs()) throw input_error("newton polygon needs integer coefficients");
    if (!is_prime(p)) throw input_error("not a prime: " + p.get_str());
    auto coeffs = f.int_coeffs();
    std::vector<std::pair<long, Int>> pts;
    for (long j = 0; j < static_cast<long>(coeffs.size()); ++j) {
        if (coeffs[j] == 0) continue;
        pts.push_back({j, Int(valuation(coeffs[j], p))});
    }
    std::vector<std::pair<long, Int>> hull;
    for (auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            Int cross = Int(b.first - a.first) * (pt.second - a.second) -
                        (b.second - a.second) * Int(pt.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    NewtonPolygon np;
    for (size_t i = 1; i < hull.size(); ++i) {
        Rat slope =
            Rat(hull[i].second - hull[i - 1].second) / Rat(hull[i].first - hull[i - 1].first);
        np.segments.push_back({slope, hull[i].first - hull[i - 1].first});
    }
    return np;
}

PadicElement PadicElement::make(const Int& p, long M, const Int& v) {
    PadicElement e;
    e.prime = p;
    e.precision = M;
    e.value = mod(v, pow_ui(p, M));
    if (e.value != 0) e.valuation = abl::valuation(e.value, p);
    return e;
}

PadicFactorization padic_factor(const Poly& f_in, const Int& p, long initial_precision) {
    if (f_in.is_zero()) throw input_error("padic_factor of zero polynomial");
    if (!is_prime(p)) throw input_error("not a prime: " + p.get_str());
    Poly f = f_in.primitive();
    if (f.degree() < 1) throw input_error("padic_factor needs positive degree");
    auto coeffs = f.int_coeffs();
    if (coeffs.back() % p == 0)
        throw input_error("padic_factor requires p not dividing the leading coefficient");
    if (gcd(f, f.derivative()).degree() > 0)
        throw input_error("padic_factor requires a squarefree polynomial");

    Rat disc = discriminant(f);
    long vdisc = (disc == 0) ? 0 : valuation(disc, p);
    long M = std::max<long>(initial_precision, vdisc + 8);
    M = std::max<long>(M, 16);
    long cap = precision_cap();

    std::string lastmsg;
    while (M <= cap) {
        try {
            Unr W = Unr::base(p, M);
            WPol h;
            Int lcinv = invmod(mod(coeffs.back(), W.pM), W.pM);
            for (auto& cz : coeffs) h.push_back(WEl{mod(cz * lcinv, W.pM)});
            auto fs = factor_rec(W, wp_normalize(std::move(h)), M, 0);

            long prec = M;
            for (auto& wf : fs) prec = std::min(prec, wf.prec);
            PadicFactorization out;
            out.p = p;
            out.prec = prec;
            Int pprec = pow_ui(p, prec);
            long efsum = 0;
            for (auto& wf : fs) {
                LocalFactor lf;
                lf.prec = prec;
                lf.e = wf.e;
                lf.f = wf.f;
                for (auto& cw : wf.g) lf.g.push_back(mod(cw[0], pprec));
                if (static_cast<long>(lf.g.size()) - 1 != lf.e * lf.f)
                    throw precision_error("label/degree mismatch");
                efsum += lf.e * lf.f;
                out.factors.push_back(std::move(lf));
            }
            if (efsum != f.degree()) throw precision_error("degree sum mismatch");
            {
                // certification: product reproduces the monic input mod p^prec
                Unr Wp = Unr::base(p, prec);
                WPol prod = {w_one(Wp)};
                for (auto& lf : out.factors) {
                    WPol gp;
                    for (auto& cz : lf.g) gp.push_back(WEl{mod(cz, Wp.pM)});
                    prod = wp_mul(Wp, prod, gp);
                }
                Int lcinv2 = invmod(mod(coeffs.back(), Wp.pM), Wp.pM);
                for (long j = 0; j <= f.degree(); ++j) {
                    Int want = mod(coeffs[j] * lcinv2, Wp.pM);
                    Int got = (j < static_cast<long>(prod.size())) ? prod[j][0] : Int(0);
                    if (want != got) throw precision_error("product certification failed");
                }
            }
            std::sort(out.factors.begin(), out.factors.end(),
                      [](const LocalFactor& a, const LocalFactor& b) {
                          if (a.g.size() != b.g.size()) return a.g.size() < b.g.size();
                          if (a.e != b.e) return a.e < b.e;
                          return a.g < b.g;
                      });
            return out;
        } catch (const wild_error& we) {
            throw precision_error(std::string("undecided: ") + we.what());
        } catch (const precision_error& pe) {
            lastmsg = pe.what();
            M *= 2;
        }
    }
    throw precision_error("undecided at precision cap (" + std::to_string(cap) + "): " + lastmsg);
}

std::vector<PadicElement> padic_roots(const Poly& f, const Int& p) {
    auto fac = padic_factor(f, p);
    std::vector<PadicElement> roots;
    Int pprec = pow_ui(p, fac.prec);
    for (auto& lf : fac.factors) {
        if (lf.g.size() == 2)
            roots.push_back(PadicElement::make(p, fac.prec, mod(-lf.g[0], pprec)));
    }
    return roots;
}

// ---------------------------------------------------------------------------
// roots of h inside Q_p[x]/(g): digit-DFS with Hensel acceptance and
// certified pruning
// ---------------------------------------------------------------------------
namespace {

struct RCtx {
    Int p;
    long M;
    Int pM;
    std::vector<Int> g;
    long d;
};

using REl = std::vector<Int>;

REl r_mul(const RCtx& R, const REl& a, const REl& b) {
    std::vector<Int> prod(std::max<long>(1, 2 * R.d - 1), Int(0));
    for (long i = 0; i < R.d; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < R.d; ++j) prod[i + j] += a[i] * b[j];
    }
    for (long i = 2 * R.d - 2; i >= R.d; --i) {
        if (prod[i] == 0) continue;
        Int c = prod[i];
        for (long j = 0; j < R.d; ++j) prod[i - R.d + j] -= c * R.g[j];
        prod[i] = 0;
    }
    REl r(R.d);
    for (long i = 0; i < R.d; ++i) r[i] = mod(prod[i], R.pM);
    return r;
}

REl r_eval(const RCtx& R, const std::vector<Int>& hc, const REl& x) {
    REl acc(R.d, Int(0));
    for (long i = static_cast<long>(hc.size()) - 1; i >= 0; --i) {
        acc = r_mul(R, acc, x);
        acc[0] = mod(acc[0] + hc[i], R.pM);
    }
    return acc;
}

long r_coord_val(const RCtx& R, const REl& a) {
    long v = R.M;
    for (auto& c : a)
        if (c != 0) v = std::min(v, valuation(c, R.p));
    return v;
}

// valuation of the norm Res(g, a); returns R.M when zero at precision
long r_norm_val(const RCtx& R, const REl& a) {
    if (r_coord_val(R, a) >= R.M) return R.M;
    long da = R.d - 1;
    while (da > 0 && a[da] == 0) --da;
    if (da == 0) return R.d * std::min<long>(valuation(a[0], R.p), R.M);
    long n = R.d + da;
    std::vector<std::vector<ZEl>> m(n, std::vector<ZEl>(n, ZEl{Int(0)}));
    for (long i = 0; i < da; ++i)
        for (long j = 0; j <= R.d; ++j) m[i][i + j] = ZEl{R.g[R.d - j]};
    for (long i = 0; i < R.d; ++i)
        for (long j = 0; j <= da; ++j) m[da + i][i + j] = ZEl{a[da - j]};
    std::vector<Int> u{Int(0), Int(1)};
    ZEl det = z_det(u, m);
    Int dz = mod(det[0], R.pM);
    if (dz == 0) return R.M;
    return std::min<long>(valuation(dz, R.p), R.M);
}

}  // namespace

TriBool has_root_in_local_field(const Poly& h, const Int& p, const std::vector<Int>& g,
                                long prec) {
    if (!h.is_monic() || !h.has_integer_coeffs())
        throw input_error("root test needs a monic integer polynomial");
    long d = static_cast<long>(g.size()) - 1;
    if (d < 1) throw input_error("invalid local factor");
    RCtx R{p, prec, pow_ui(p, prec), g, d};

    long k = 0;
    if (d >= 2) {
        Poly gq = Poly::from_ints(g);
        Rat disc = discriminant(gq);
        if (disc == 0) throw precision_error("local factor discriminant vanishes at precision");
        long vd = valuation(disc, p);
        if (vd >= prec - 2) throw precision_error("local discriminant beyond precision");
        k = vd / 2;
    }

    auto hc = h.int_coeffs();
    long D = h.degree();
    std::vector<Int> H(D + 1), Hd(D);
    for (long j = 0; j <= D; ++j) H[j] = hc[j] * pow_ui(p, k * (D - j));
    for (long j = 1; j <= D; ++j) Hd[j - 1] = H[j] * j;

    long pz = mpz_get_si(p.get_mpz_t());
    long branch_space = 1;
    for (long i = 0; i < d; ++i) {
        branch_space *= pz;
        if (branch_space > 100000) throw size_error("local field too large for root scan");
    }

    struct Node {
        REl u;
        long level;
    };
    std::vector<Node> stack;
    {
        REl u0(d, Int(0));
        for (long t = 0; t < branch_space; ++t) {
            long x = t;
            for (long i = 0; i < d; ++i) {
                u0[i] = x % pz;
                x /= pz;
            }
            stack.push_back({u0, 1});
        }
    }
    long nodes = 0;
    long guard = prec - 2;
    while (!stack.empty()) {
        if (++nodes > 500000) throw precision_error("root scan node budget exhausted");
        Node nd = std::move(stack.back());
        stack.pop_back();
        REl val = r_eval(R, H, nd.u);
        if (r_coord_val(R, val) < nd.level) continue;
        long vH = r_norm_val(R, val);
        long vHd = r_norm_val(R, r_eval(R, Hd, nd.u));
        if (vH > 2 * vHd) {
            if (vH >= R.M && 2 * vHd >= R.M - 2)
                throw precision_error("hensel dominance not certified");
            return TriBool::yes;
        }
        if (nd.level >= guard) throw precision_error("root scan hit precision guard");
        Int pl = pow_ui(p, nd.level);
        REl child = nd.u;
        for (long t = 0; t < branch_space; ++t) {
            long x = t;
            for (long i = 0; i < d; ++i) {
                child[i] = mod(nd.u[i] + Int(x % pz) * pl, R.pM);
                x /= pz;
            }
            stack.push_back({child, nd.level + 1});
        }
    }
    return TriBool::no;
}

}  // namespace abl

#include "abl/fq.hpp"

#include <algorithm>
#include <random>

namespace abl {

FqCtx FqCtx::prime_field(const Int& p) {
    if (!is_prime(p)) throw input_error("not a prime: " + p.get_str());
    return FqCtx{p, {Int(0), Int(1)}};
}

FqCtx FqCtx::extension(const Int& p, long m) {
    if (!is_prime(p)) throw input_error("not a prime: " + p.get_str());
    if (m == 1) return prime_field(p);
    // deterministic scan for a monic irreducible of degree m
    std::vector<Int> u(m + 1, Int(0));
    u[m] = 1;
    FqCtx base = prime_field(p);
    while (true) {
        FqPoly cand = fqp_from_ints(base, u);
        if (fqp_is_irreducible(base, cand)) return FqCtx{p, u};
        // increment the coefficient vector like a base-p counter
        long i = 0;
        while (i < m) {
            u[i] += 1;
            if (u[i] < p) break;
            u[i] = 0;
            ++i;
        }
        if (i == m) throw input_error("no irreducible found (impossible)");
    }
}

Fq fq_zero(const FqCtx& k) {
    return Fq(k.deg(), Int(0));
}

Fq fq_one(const FqCtx& k) {
    Fq a(k.deg(), Int(0));
    a[0] = 1;
    return a;
}

Fq fq_from_int(const FqCtx& k, const Int& a) {
    Fq r(k.deg(), Int(0));
    r[0] = mod(a, k.p);
    return r;
}

bool fq_is_zero(const Fq& a) {
    for (auto& c : a)
        if (c != 0) return false;
    return true;
}

Fq fq_add(const FqCtx& k, const Fq& a, const Fq& b) {
    Fq r(k.deg());
    for (long i = 0; i < k.deg(); ++i) r[i] = mod(a[i] + b[i], k.p);
    return r;
}

Fq fq_sub(const FqCtx& k, const Fq& a, const Fq& b) {
    Fq r(k.deg());
    for (long i = 0; i < k.deg(); ++i) r[i] = mod(a[i] - b[i], k.p);
    return r;
}

Fq fq_neg(const FqCtx& k, const Fq& a) {
    Fq r(k.deg());
    for (long i = 0; i < k.deg(); ++i) r[i] = mod(-a[i], k.p);
    return r;
}

Fq fq_mul(const FqCtx& k, const Fq& a, const Fq& b) {
    long d = k.deg();
    std::vector<Int> prod(2 * d - 1, Int(0));
    for (long i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
    }
    // reduce mod u (monic)
    for (long i = 2 * d - 2; i >= d; --i) {
        if (prod[i] == 0) continue;
        Int c = prod[i];
        for (long j = 0; j < d; ++j) prod[i - d + j] -= c * k.u[j];
        prod[i] = 0;
    }
    Fq r(d);
    for (long i = 0; i < d; ++i) r[i] = mod(prod[i], k.p);
    return r;
}

Fq fq_inv(const FqCtx& k, const Fq& a) {
    if (fq_is_zero(a)) throw input_error("inverse of zero in F_q");
    if (k.deg() == 1) return Fq{invmod(a[0], k.p)};
    // extended Euclid in F_p[y] between u and a
    FqCtx base = FqCtx::prime_field(k.p);
    auto lift = [&](const std::vector<Int>& v) {
        FqPoly f;
        for (auto& c : v) f.push_back(Fq{mod(c, k.p)});
        return fqp_normalize(std::move(f));
    };
    FqPoly r0 = lift(k.u), r1 = lift(a);
    FqPoly s0, s1 = fqp_one(base);  // s0 = 0
    while (!fqp_is_zero(r1)) {
        auto [q, r2] = fqp_divrem(base, r0, r1);
        FqPoly s2 = fqp_sub(base, s0, fqp_mul(base, q, s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (fqp_degree(r0) != 0) throw input_error("non-invertible element (u reducible?)");
    Int c = invmod(r0[0][0], k.p);
    Fq out(k.deg(), Int(0));
    for (size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = mod(s0[i][0] * c, k.p);
    return out;
}

Fq fq_pow(const FqCtx& k, Fq a, Int e) {
    if (e < 0) {
        a = fq_inv(k, a);
        e = -e;
    }
    Fq r = fq_one(k);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fq_mul(k, r, a);
        a = fq_mul(k, a, a);
        e >>= 1;
    }
    return r;
}

std::vector<Fq> fq_all_elements(const FqCtx& k) {
    std::vector<Fq> out;
    Fq cur = fq_zero(k);
    while (true) {
        out.push_back(cur);
        long i = 0;
        while (i < k.deg()) {
            cur[i] += 1;
            if (cur[i] < k.p) break;
            cur[i] = 0;
            ++i;
        }
        if (i == k.deg()) break;
    }
    return out;
}

FqPoly fqp_normalize(FqPoly f) {
    while (!f.empty() && fq_is_zero(f.back())) f.pop_back();
    return f;
}

FqPoly fqp_from_ints(const FqCtx& k, const std::vector<Int>& coeffs) {
    FqPoly f;
    f.reserve(coeffs.size());
    for (auto& c : coeffs) f.push_back(fq_from_int(k, c));
    return fqp_normalize(std::move(f));
}

long fqp_degree(const FqPoly& f) {
    return static_cast<long>(f.size()) - 1;
}

bool fqp_is_zero(const FqPoly& f) {
    return f.empty();
}

FqPoly fqp_one(const FqCtx& k) {
    return {fq_one(k)};
}

FqPoly fqp_x(const FqCtx& k) {
    return {fq_zero(k), fq_one(k)};
}

FqPoly fqp_add(const FqCtx& k, const FqPoly& a, const FqPoly& b) {
    FqPoly r(std::max(a.size(), b.size()), fq_zero(k));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = fq_add(k, r[i], a[i]);
        if (i < b.size()) r[i] = fq_add(k, r[i], b[i]);
    }
    return fqp_normalize(std::move(r));
}

FqPoly fqp_sub(const FqCtx& k, const FqPoly& a, const FqPoly& b) {
    FqPoly r(std::max(a.size(), b.size()), fq_zero(k));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = fq_add(k, r[i], a[i]);
        if (i < b.size()) r[i] = fq_sub(k, r[i], b[i]);
    }
    return fqp_normalize(std::move(r));
}

FqPoly fqp_mul(const FqCtx& k, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly r(a.size() + b.size() - 1, fq_zero(k));
    for (size_t i = 0; i < a.size(); ++i) {
        if (fq_is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = fq_add(k, r[i + j], fq_mul(k, a[i], b[j]));
    }
    return fqp_normalize(std::move(r));
}

std::pair<FqPoly, FqPoly> fqp_divrem(const FqCtx& k, const FqPoly& a, const FqPoly& b) {
    if (b.empty()) throw input_error("F_q polynomial division by zero");
    FqPoly rem = a;
    long db = fqp_degree(b);
    Fq lcinv = fq_inv(k, b.back());
    FqPoly quo(std::max<long>(0, fqp_degree(a) - db + 1), fq_zero(k));
    for (long i = fqp_degree(a); i >= db; --i) {
        if (fq_is_zero(rem[i])) continue;
        Fq q = fq_mul(k, rem[i], lcinv);
        quo[i - db] = q;
        for (long j = 0; j <= db; ++j)
            rem[i - db + j] = fq_sub(k, rem[i - db + j], fq_mul(k, q, b[j]));
    }
    return {fqp_normalize(std::move(quo)), fqp_normalize(std::move(rem))};
}

FqPoly fqp_mod(const FqCtx& k, const FqPoly& a, const FqPoly& b) {
    return fqp_divrem(k, a, b).second;
}

FqPoly fqp_monic(const FqCtx& k, const FqPoly& f) {
    if (f.empty()) return f;
    Fq s = fq_inv(k, f.back());
    FqPoly r = f;
    for (auto& c : r) c = fq_mul(k, c, s);
    return r;
}

FqPoly fqp_gcd(const FqCtx& k, FqPoly a, FqPoly b) {
    while (!b.empty()) {
        FqPoly r = fqp_mod(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return fqp_monic(k, a);
}

FqPoly fqp_derivative(const FqCtx& k, const FqPoly& f) {
    if (f.size() <= 1) return {};
    FqPoly r(f.size() - 1, fq_zero(k));
    for (size_t i = 1; i < f.size(); ++i) {
        Fq c = f[i];
        for (auto& x : c) x = mod(x * Int(i), k.p);
        r[i - 1] = c;
    }
    return fqp_normalize(std::move(r));
}

FqPoly fqp_powmod(const FqCtx& k, FqPoly base, Int e, const FqPoly& m) {
    FqPoly r = fqp_one(k);
    base = fqp_mod(k, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fqp_mod(k, fqp_mul(k, r, base), m);
        base = fqp_mod(k, fqp_mul(k, base, base), m);
        e >>= 1;
    }
    return r;
}

Fq fqp_eval(const FqCtx& k, const FqPoly& f, const Fq& x) {
    Fq acc = fq_zero(k);
    for (long i = fqp_degree(f); i >= 0; --i) acc = fq_add(k, fq_mul(k, acc, x), f[i]);
    return acc;
}

int fqp_cmp(const FqPoly& a, const FqPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// ---- factorization ----

// squarefree decomposition in characteristic p; returns (g_i, i) with f = prod g_i^i
static std::vector<std::pair<FqPoly, int>> fqp_squarefree(const FqCtx& k, FqPoly f, int stride = 1) {
    std::vector<std::pair<FqPoly, int>> out;
    FqPoly fd = fqp_derivative(k, f);
    if (fqp_is_zero(fd)) {
        // f = g(x^p): take p-th roots of coefficients (c -> c^(q/p))
        long pz = mpz_get_si(k.p.get_mpz_t());
        Int root_exp = pow_ui(k.p, k.deg() - 1);
        FqPoly g;
        for (size_t i = 0; i < f.size(); i += pz) g.push_back(fq_pow(k, f[i], root_exp));
        auto inner = fqp_squarefree(k, fqp_normalize(std::move(g)), stride * pz);
        return inner;
    }
    FqPoly c = fqp_gcd(k, f, fd);
    FqPoly w = fqp_divrem(k, f, c).first;
    int i = 1;
    while (fqp_degree(w) > 0) {
        FqPoly y = fqp_gcd(k, w, c);
        FqPoly part = fqp_divrem(k, w, y).first;
        if (fqp_degree(part) > 0) out.push_back({fqp_monic(k, part), i * stride});
        w = y;
        c = fqp_divrem(k, c, y).first;
        ++i;
    }
    if (fqp_degree(c) > 0) {
        // remaining p-th power content
        long pz = mpz_get_si(k.p.get_mpz_t());
        Int root_exp = pow_ui(k.p, k.deg() - 1);
        FqPoly g;
        for (size_t j = 0; j < c.size(); j += pz) g.push_back(fq_pow(k, c[j], root_exp));
        for (auto& [h, m] : fqp_squarefree(k, fqp_normalize(std::move(g)), stride * pz))
            out.push_back({h, m});
    }
    return out;
}

// distinct-degree factorization of a squarefree monic f
static std::vector<std::pair<FqPoly, long>> fqp_ddf(const FqCtx& k, FqPoly f) {
    std::vector<std::pair<FqPoly, long>> out;
    FqPoly h = fqp_x(k);
    long d = 0;
    while (fqp_degree(f) > 0) {
        ++d;
        if (2 * d > fqp_degree(f)) {
            out.push_back({f, fqp_degree(f)});
            break;
        }
        h = fqp_powmod(k, h, k.q(), f);
        FqPoly g = fqp_gcd(k, fqp_sub(k, h, fqp_x(k)), f);
        if (fqp_degree(g) > 0) {
            out.push_back({g, d});
            f = fqp_divrem(k, f, g).first;
            h = fqp_mod(k, h, f);
        }
    }
    return out;
}

// deterministic PRNG seeded from the input so factorizations are reproducible
static uint64_t mix_seed(const FqCtx& k, const FqPoly& f) {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    auto fold = [&](const Int& z) {
        s ^= mpz_fdiv_ui(z.get_mpz_t(), 0x7fffffffull) + 0x9e3779b9ull + (s << 6) + (s >> 2);
    };
    fold(k.p);
    for (auto& c : k.u) fold(c);
    for (auto& e : f)
        for (auto& c : e) fold(c);
    return s;
}

// equal-degree splitting (Cantor-Zassenhaus) of squarefree f, all factors of degree d
static void fqp_edf(const FqCtx& k, const FqPoly& f, long d, std::mt19937_64& rng,
                    std::vector<FqPoly>& out) {
    if (fqp_degree(f) == d) {
        out.push_back(fqp_monic(k, f));
        return;
    }
    long n = fqp_degree(f);
    Int q = k.q();
    while (true) {
        // random polynomial of degree < n
        FqPoly r(n, fq_zero(k));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < k.deg(); ++j)
                r[i][j] = Int((unsigned long)(rng() % mpz_get_ui(k.p.get_mpz_t())));
        r = fqp_normalize(std::move(r));
        if (fqp_degree(r) < 1) continue;
        FqPoly g = fqp_gcd(k, r, f);
        if (fqp_degree(g) > 0 && fqp_degree(g) < n) {
            fqp_edf(k, g, d, rng, out);
            fqp_edf(k, fqp_divrem(k, f, g).first, d, rng, out);
            return;
        }
        FqPoly s;
        if (k.p == 2) {
            // trace map sum r^(2^i), i < d*deg(k)
            long bits = d * k.deg();
            FqPoly acc = fqp_mod(k, r, f), term = acc;
            for (long i = 1; i < bits; ++i) {
                term = fqp_mod(k, fqp_mul(k, term, term), f);
                acc = fqp_add(k, acc, term);
            }
            s = acc;
        } else {
            Int e = (pow_ui(q, d) - 1) / 2;
            s = fqp_powmod(k, r, e, f);
            s = fqp_sub(k, s, fqp_one(k));
        }
        g = fqp_gcd(k, s, f);
        if (fqp_degree(g) > 0 && fqp_degree(g) < n) {
            fqp_edf(k, g, d, rng, out);
            fqp_edf(k, fqp_divrem(k, f, g).first, d, rng, out);
            return;
        }
    }
}

std::vector<std::pair<FqPoly, int>> fqp_factor(const FqCtx& k, const FqPoly& f) {
    if (fqp_is_zero(f)) throw input_error("factor of zero polynomial");
    std::vector<std::pair<FqPoly, int>> out;
    if (fqp_degree(f) == 0) return out;
    std::mt19937_64 rng(mix_seed(k, f));
    FqPoly mf = fqp_monic(k, f);
    for (auto& [sqf, mult] : fqp_squarefree(k, mf)) {
        for (auto& [part, d] : fqp_ddf(k, sqf)) {
            std::vector<FqPoly> irr;
            fqp_edf(k, part, d, rng, irr);
            for (auto& g : irr) out.push_back({g, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int c = fqp_cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    return out;
}

bool fqp_is_irreducible(const FqCtx& k, const FqPoly& f) {
    long n = fqp_degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    // x^(q^n) == x mod f and gcd(x^(q^(n/r)) - x, f) == 1 for prime r | n
    FqPoly xp = fqp_x(k);
    FqPoly h = xp;
    std::vector<FqPoly> powers;  // h after i applications of q-power
    for (long i = 0; i < n; ++i) {
        h = fqp_powmod(k, h, k.q(), f);
        powers.push_back(h);
    }
    if (fqp_cmp(powers[n - 1], fqp_mod(k, xp, f)) != 0) return false;
    for (auto& [r, e] : factor_int(Int(n))) {
        long idx = n / mpz_get_si(r.get_mpz_t()) - 1;
        FqPoly g = fqp_gcd(k, fqp_sub(k, powers[idx], xp), f);
        if (fqp_degree(g) != 0) return false;
    }
    return true;
}

}  // namespace abl

#include "abl/factor.hpp"

#include <algorithm>
#include <cstdlib>

#include "abl/fq.hpp"

namespace abl {

namespace {

Poly from_fqp(const FqPoly& f, const Int& p) {
    std::vector<Rat> c;
    c.reserve(f.size());
    for (auto& e : f) c.emplace_back(e[0]);
    return Poly(std::move(c), p);
}

FqPoly to_fqp(const FqCtx& k, const Poly& f) {
    std::vector<Int> c;
    for (long i = 0; i <= f.degree(); ++i) {
        Rat q = f.coeff(i);
        if (q.get_den() != 1) {
            Int inv = invmod(Int(q.get_den()), k.p);
            c.push_back(mod(Int(q.get_num()) * inv, k.p));
        } else {
            c.push_back(mod(Int(q.get_num()), k.p));
        }
    }
    return fqp_from_ints(k, c);
}

}  // namespace

std::vector<std::pair<Poly, int>> factor_mod_p(const Poly& f, const Int& p) {
    if (!is_prime(p)) throw input_error("not a prime: " + p.get_str());
    if (f.is_zero()) throw input_error("factor of zero polynomial");
    FqCtx k = FqCtx::prime_field(p);
    auto fac = fqp_factor(k, to_fqp(k, f));
    std::vector<std::pair<Poly, int>> out;
    out.reserve(fac.size());
    for (auto& [g, m] : fac) out.push_back({from_fqp(g, p), m});
    return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus over Q
// ---------------------------------------------------------------------------
namespace {

// extended euclid for polynomials mod p: s*a + t*b = 1
void bezout_mod_p(const Poly& a, const Poly& b, const Int& p, Poly& s, Poly& t) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(Rat(1)).with_modulus(p), s1 = Poly(std::vector<Rat>{}, p);
    Poly t0 = Poly(std::vector<Rat>{}, p), t1 = Poly::constant(Rat(1)).with_modulus(p);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divrem(r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.degree() != 0) throw input_error("factors not coprime mod p");
    Rat inv(invmod(Int(r0.coeff(0).get_num()), p));
    s = s0 * inv;
    t = t0 * inv;
}

// quadratic Hensel step (von zur Gathen & Gerhard, Alg. 15.10), all monic
void hensel_step(const Poly& f, Poly& g, Poly& h, Poly& s, Poly& t, const Int& m) {
    Int m2 = m * m;
    auto up = [&](const Poly& q) { return q.lift_rational().with_modulus(m2); };
    Poly F = f.lift_rational().with_modulus(m2);
    Poly G = up(g), H = up(h), S = up(s), T = up(t);
    Poly e = F - G * H;
    auto [q, r] = (S * e).divrem(H);
    Poly G2 = G + T * e + q * G;
    Poly H2 = H + r;
    Poly b = S * G2 + T * H2 - Poly::constant(Rat(1)).with_modulus(m2);
    auto [cq, d] = (S * b).divrem(H2);
    Poly S2 = S - d;
    Poly T2 = T - T * b - cq * G2;
    g = G2; h = H2; s = S2; t = T2;
}

// lift a coprime monic factorization f = prod(parts) mod p to mod `modulus`;
// f carries exact (or sufficiently accurate) rational coefficients
void hensel_tree(const Poly& f, std::vector<Poly>& parts, const Int& p, const Int& modulus) {
    if (parts.size() <= 1) {
        if (!parts.empty()) parts[0] = f.lift_rational().with_modulus(modulus);
        return;
    }
    size_t half = parts.size() / 2;
    Poly g = Poly::constant(Rat(1)).with_modulus(p);
    for (size_t i = 0; i < half; ++i) g = g * parts[i].lift_rational().with_modulus(p);
    Poly h = Poly::constant(Rat(1)).with_modulus(p);
    for (size_t i = half; i < parts.size(); ++i) h = h * parts[i].lift_rational().with_modulus(p);
    Poly s, t;
    bezout_mod_p(g, h, p, s, t);
    Int m = p;
    while (m < modulus) {
        hensel_step(f.lift_rational(), g, h, s, t, m);
        m = m * m;
    }
    std::vector<Poly> left(parts.begin(), parts.begin() + half);
    std::vector<Poly> right(parts.begin() + half, parts.end());
    hensel_tree(g.lift_rational(), left, p, modulus);
    hensel_tree(h.lift_rational(), right, p, modulus);
    parts.clear();
    parts.insert(parts.end(), left.begin(), left.end());
    parts.insert(parts.end(), right.begin(), right.end());
}

// coefficients balanced into (-m/2, m/2]
Poly balance(const Poly& f, const Int& m) {
    std::vector<Rat> c;
    for (long i = 0; i <= f.degree(); ++i) {
        Int z = f.coeff(i).get_num();
        z = mod(z, m);
        if (2 * z > m) z -= m;
        c.emplace_back(z);
    }
    return Poly(std::move(c));
}

// factor a monic squarefree integer polynomial over Q into monic integer
// irreducibles
std::vector<Poly> factor_monic_squarefree(const Poly& h) {
    long n = h.degree();
    if (n == 1) return {h};
    // prime selection: squarefree reduction, fewest modular factors
    Int best_p = 0;
    std::vector<std::pair<Poly, int>> best_fac;
    int tried = 0;
    for (Int p = 3; tried < 5; p = next_prime(p)) {
        if (h.lc().get_num() % p == 0) continue;
        Rat disc = discriminant(h);
        if (Int(disc.get_num()) % p == 0) continue;
        auto fac = factor_mod_p(h, p);
        ++tried;
        if (best_p == 0 || fac.size() < best_fac.size()) {
            best_p = p;
            best_fac = fac;
        }
        if (best_fac.size() == 1) break;
    }
    if (best_p == 0) throw input_error("no usable prime found for factorization");
    if (best_fac.size() == 1) return {h};

    // Landau-Mignotte style bound on factor coefficients
    Rat norm2(0);
    for (long i = 0; i <= n; ++i) norm2 += h.coeff(i) * h.coeff(i);
    Int bound = 1;
    {
        Int nrm = Int(norm2.get_num());
        Int root;
        mpz_sqrt(root.get_mpz_t(), nrm.get_mpz_t());
        bound = (root + 1) * pow_ui(Int(2), n + 1);
    }
    Int target = 2 * bound + 1;
    Int modulus = best_p;
    while (modulus < target) modulus = modulus * modulus;

    std::vector<Poly> parts;
    for (auto& [g, m] : best_fac) parts.push_back(g);
    hensel_tree(h, parts, best_p, modulus);

    // exhaustive recombination
    std::vector<Poly> result;
    std::vector<int> alive(parts.size(), 1);
    Poly rem = h;
    size_t r = parts.size();
    bool progress = true;
    while (progress) {
        progress = false;
        size_t live = 0;
        std::vector<size_t> idx;
        for (size_t i = 0; i < parts.size(); ++i)
            if (alive[i]) {
                idx.push_back(i);
                ++live;
            }
        if (live == 0) break;
        for (size_t sz = 1; sz <= live / 2 && !progress; ++sz) {
            // iterate subsets of size sz by bitmask over the live indices
            if (live > 24) throw size_error("too many modular factors to recombine");
            for (unsigned long mask = 1; mask < (1ul << live) && !progress; ++mask) {
                if (__builtin_popcountl(mask) != sz) continue;
                Poly cand = Poly::constant(Rat(1)).with_modulus(modulus);
                for (size_t b = 0; b < live; ++b)
                    if (mask & (1ul << b)) cand = cand * parts[idx[b]];
                Poly zc = balance(cand, modulus);
                if (zc.divides(rem)) {
                    result.push_back(zc);
                    rem = (rem / zc).primitive();
                    for (size_t b = 0; b < live; ++b)
                        if (mask & (1ul << b)) alive[idx[b]] = 0;
                    progress = true;
                }
            }
        }
        if (!progress) break;
    }
    if (rem.degree() > 0) result.push_back(rem);
    (void)r;
    return result;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor_over_Q(const Poly& f_in) {
    if (f_in.is_zero()) throw input_error("factor of zero polynomial");
    if (f_in.degree() == 0) return {};
    Poly f = f_in.primitive();

    // squarefree decomposition (Yun)
    std::vector<std::pair<Poly, int>> sqf;
    {
        Poly a = f;
        Poly g = gcd(a, a.derivative());
        if (g.degree() == 0) {
            sqf.push_back({a, 1});
        } else {
            Poly c = (a / g).primitive();
            Poly d = (a.derivative() / g) - c.derivative();
            int i = 1;
            while (c.degree() > 0) {
                Poly y = gcd(c, d);
                if (y.degree() > 0) sqf.push_back({y.primitive(), i});
                Poly c2 = (c / y);
                d = (d / y) - c2.derivative();
                c = c2.primitive();
                ++i;
            }
        }
    }

    std::vector<std::pair<Poly, int>> out;
    for (auto& [part, mult] : sqf) {
        if (part.degree() < 1) continue;
        // monicize: q(x) = L^(n-1) part(x/L) is monic with integer coefficients
        Poly p = part.primitive();
        Int L = Int(p.lc().get_num());
        Poly monic = p;
        if (L != 1) {
            std::vector<Rat> c(p.degree() + 1);
            for (long i = 0; i < p.degree(); ++i)
                c[i] = p.coeff(i) * Rat(pow_ui(L, p.degree() - 1 - i));
            c[p.degree()] = 1;
            monic = Poly(std::move(c));
        }
        auto irr = factor_monic_squarefree(monic);
        for (auto& g : irr) {
            Poly back = g;
            if (L != 1) {
                // undo the root scaling: factor of p is primitive(g(Lx))
                std::vector<Rat> c;
                Rat pw(1);
                for (long i = 0; i <= g.degree(); ++i) {
                    c.push_back(g.coeff(i) * pw);
                    pw *= Rat(L);
                }
                back = Poly(std::move(c)).primitive();
            }
            out.push_back({back, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int c = Poly::cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible_over_Q(const Poly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_over_Q(f);
    return fac.size() == 1 && fac[0].second == 1;
}

long factor_degree_bound() {
    if (const char* env = std::getenv("ABL_DEGREE_BOUND")) {
        long v = std::atol(env);
        if (v >= 8) return v;
    }
    return 64;
}

// ---------------------------------------------------------------------------
// Trager's method over a number field
// ---------------------------------------------------------------------------
namespace {

Poly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
    Poly acc = Poly::zero();
    for (size_t i = 0; i < pts.size(); ++i) {
        Poly term = Poly::constant(pts[i].second);
        for (size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            Poly lin(std::vector<Rat>{-pts[j].first, Rat(1)});
            term = term * lin * Rat(1) * (1 / (pts[i].first - pts[j].first));
        }
        acc = acc + term;
    }
    return acc;
}

// Res_t(F(t), fsf(x - s t)) by interpolation in x
Poly trager_norm(const Poly& F, const Poly& fsf, long s) {
    long D = F.degree() * fsf.degree();
    std::vector<std::pair<Rat, Rat>> pts;
    for (long x0 = 0; static_cast<long>(pts.size()) < D + 1; ++x0) {
        // substitute x = x0: poly in t is fsf(x0 - s t)
        Poly arg(std::vector<Rat>{Rat(x0), Rat(-s)});
        Poly in_t = fsf.compose(arg);
        if (in_t.degree() != fsf.degree()) throw input_error("degenerate shift");
        pts.push_back({Rat(x0), resultant(F, in_t)});
    }
    return lagrange_interpolate(pts);
}

// N(x + s*theta) as a polynomial over K
NfPoly compose_shift(const NfCtx& K, const Poly& N, long s) {
    NfPoly lin;  // x + s*theta
    lin.c.push_back(nf_smul(K, nf_gen(K), Rat(s)));
    lin.c.push_back(nf_one(K));
    NfPoly acc;
    for (long i = N.degree(); i >= 0; --i) {
        acc = nfp_mul(K, acc, lin);
        NfPoly cst;
        cst.c.push_back(nf_from_rat(K, N.coeff(i)));
        acc = nfp_add(K, acc, cst);
    }
    return acc;
}

}  // namespace

std::vector<std::pair<NfPoly, int>> factor_over_field(const Poly& f, const NfCtx& K) {
    if (f.is_zero()) throw input_error("factor of zero polynomial");
    if (f.degree() * K.degree() > factor_degree_bound())
        throw size_error("degree bound exceeded in factor_over_field");
    std::vector<std::pair<NfPoly, int>> out;
    if (f.degree() == 0) return out;

    if (K.degree() == 1) {
        for (auto& [g, m] : factor_over_Q(f)) out.push_back({nfp_from_rational(K, g.monic()), m});
        return out;
    }

    Poly fsf = squarefree_part(f);
    NfPoly fK = nfp_from_rational(K, f);
    NfPoly fsfK = nfp_from_rational(K, fsf);

    // find a shift making the norm squarefree
    for (long trial = 1; trial <= 40; ++trial) {
        long s = (trial % 2 == 1) ? (trial + 1) / 2 : -(trial / 2);
        Poly N;
        try {
            N = trager_norm(K.F, fsf, s);
        } catch (const input_error&) {
            continue;
        }
        if (N.degree() < 1) continue;
        if (gcd(N, N.derivative()).degree() != 0) continue;
        auto nf = factor_over_Q(N);
        std::vector<NfPoly> factors;
        for (auto& [Ni, m] : nf) {
            NfPoly shifted = compose_shift(K, Ni, s);
            NfPoly g = nfp_gcd(K, fsfK, shifted);
            if (g.degree() >= 1) factors.push_back(g);
        }
        // multiplicities by repeated division of the full f
        NfPoly remf = fK;
        for (auto& g : factors) {
            int mult = 0;
            while (true) {
                auto [q, r] = nfp_divrem(K, remf, g);
                if (!r.is_zero()) break;
                remf = q;
                ++mult;
            }
            if (mult == 0) throw input_error("trager factor does not divide input");
            out.push_back({g, mult});
        }
        long degsum = 0;
        for (auto& [g, m] : out) degsum += g.degree() * m;
        if (degsum != f.degree()) throw input_error("trager degree bookkeeping failure");
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            int c = nfp_cmp(a.first, b.first);
            if (c != 0) return c < 0;
            return a.second < b.second;
        });
        return out;
    }
    throw input_error("no squarefree norm found (shift search exhausted)");
}

bool has_root_in_field(const Poly& f, const NfCtx& K) {
    auto fac = factor_over_field(f, K);
    for (auto& [g, m] : fac)
        if (g.degree() == 1) return true;
    return false;
}

std::vector<NfElem> roots_in_field(const Poly& f, const NfCtx& K) {
    std::vector<NfElem> roots;
    for (auto& [g, m] : factor_over_field(f, K)) {
        if (g.degree() != 1) continue;
        NfPoly mg = nfp_monic(K, g);
        roots.push_back(nf_neg(K, mg.c[0]));
    }
    return roots;
}

}  // namespace abl

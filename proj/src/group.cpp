#include "abl/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <set>

namespace abl {

long group_order_cap() {
    if (const char* env = std::getenv("ABL_GROUP_CAP")) {
        long v = std::atol(env);
        if (v >= 8) return v;
    }
    return 2048;
}

// ---------------------------------------------------------------------------
// construction and verification
// ---------------------------------------------------------------------------
void FiniteGroup::finish(bool trusted) {
    if (n_ < 1 || n_ > group_order_cap()) throw size_error("group order out of range");
    if (static_cast<long>(table_.size()) != n_ * n_) throw input_error("bad table size");
    for (auto x : table_)
        if (x < 0 || x >= n_) throw input_error("table entry out of range");
    // identity at 0
    for (int a = 0; a < n_; ++a)
        if (mul(0, a) != a || mul(a, 0) != a) throw input_error("index 0 is not an identity");
    // inverses
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] < 0) throw input_error("element without inverse");
    }
    if (trusted) return;
    if (n_ <= 512) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw input_error("table is not associative");
    } else {
        // Light's test on a generating set
        std::vector<int> gens;
        Subgroup H{0};
        while (static_cast<long>(H.size()) < n_) {
            int g = -1;
            for (int a = 0; a < n_; ++a)
                if (!std::binary_search(H.begin(), H.end(), a)) {
                    g = a;
                    break;
                }
            gens.push_back(g);
            H = closure(*this, gens);
        }
        for (int g : gens)
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b)
                    if (mul(mul(a, g), b) != mul(a, mul(g, b)))
                        throw input_error("table is not associative");
    }
}

FiniteGroup FiniteGroup::from_table(std::vector<int> table, long order, bool trusted) {
    FiniteGroup G;
    G.n_ = order;
    G.table_ = std::move(table);
    G.finish(trusted);
    return G;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(long n) {
    if (n < 1) throw input_error("cyclic group order must be positive");
    std::vector<int> t(n * n);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) t[a * n + b] = static_cast<int>((a + b) % n);
    return from_table(std::move(t), n, true);
}

FiniteGroup FiniteGroup::abelian(const std::vector<long>& orders) {
    FiniteGroup G = trivial();
    for (long d : orders) G = direct_product(G, cyclic(d));
    return G;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    long n = a.order() * b.order();
    if (n > group_order_cap()) throw size_error("direct product exceeds order cap");
    std::vector<int> t(n * n);
    auto idx = [&](int x, int y) { return x * static_cast<int>(b.order()) + y; };
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    t[idx(x1, y1) * n + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    return from_table(std::move(t), n, true);
}

FiniteGroup FiniteGroup::semidirect_cyclic(long n, long m, long t) {
    if (n < 1 || m < 1) throw input_error("bad semidirect orders");
    Int tm = powmod(Int(t), Int(m), Int(n));
    if (n > 1 && tm != mod(Int(1), Int(n)))
        throw input_error("t^m != 1 mod n in semidirect product");
    long N = n * m;
    if (N > group_order_cap()) throw size_error("semidirect product exceeds order cap");
    // elements (a, b) = y^a x^b with x^-1 y x = y^t, so (a,b)(c,d) = (a + c t^b, b+d)
    std::vector<long> tpow(m);
    tpow[0] = 1 % n;
    for (long b = 1; b < m; ++b) tpow[b] = mpz_get_si(mod(Int(tpow[b - 1]) * t, Int(n)).get_mpz_t());
    auto idx = [&](long a, long b) { return a * m + b; };
    std::vector<int> tab(N * N);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < m; ++b)
            for (long c = 0; c < n; ++c)
                for (long d = 0; d < m; ++d)
                    tab[idx(a, b) * N + idx(c, d)] =
                        static_cast<int>(idx((a + c * tpow[b]) % n, (b + d) % m));
    return from_table(std::move(tab), N, true);
}

FiniteGroup FiniteGroup::heisenberg(long p) {
    // upper unitriangular 3x3 matrices over F_p: (a, b, c) with
    // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b')
    long n = p * p * p;
    if (n > group_order_cap()) throw size_error("heisenberg group exceeds order cap");
    auto idx = [&](long a, long b, long c) { return (a * p + b) * p + c; };
    std::vector<int> t(n * n);
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c)
                for (long a2 = 0; a2 < p; ++a2)
                    for (long b2 = 0; b2 < p; ++b2)
                        for (long c2 = 0; c2 < p; ++c2)
                            t[idx(a, b, c) * n + idx(a2, b2, c2)] = static_cast<int>(
                                idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p));
    return from_table(std::move(t), n, true);
}

FiniteGroup FiniteGroup::quaternion8() {
    // x^2 = y^2, y^4 = 1, x^-1 y x = y^3
    return metacyclic_group(2, 4, 2, 3);
}

FiniteGroup FiniteGroup::metacyclic_group(long m, long n, long i, long t) {
    // <x, y | x^m = y^i, y^n = 1, x^-1 y x = y^t>
    std::vector<std::vector<int>> rels;
    std::vector<int> r1;  // x^m y^-i
    for (long k = 0; k < m; ++k) r1.push_back(1);
    for (long k = 0; k < i; ++k) r1.push_back(-2);
    rels.push_back(r1);
    std::vector<int> r2;  // y^n
    for (long k = 0; k < n; ++k) r2.push_back(2);
    rels.push_back(r2);
    std::vector<int> r3{-1, 2, 1};  // x^-1 y x y^-t
    for (long k = 0; k < t; ++k) r3.push_back(-2);
    rels.push_back(r3);
    return from_presentation(2, rels);
}

// ---------------------------------------------------------------------------
// Todd-Coxeter coset enumeration over the trivial subgroup
// ---------------------------------------------------------------------------
namespace {

struct TC {
    int K;  // generators
    std::vector<std::vector<int>> rel;  // relators as letter strings
    std::vector<std::array<long, 1>> dummy;
    std::vector<std::vector<long>> tab;  // [coset][letter], 0 = undefined; cosets from 1
    std::vector<long> rep;
    std::queue<long> dead;
    long cap;
    long live = 0;

    long find(long a) {
        while (rep[a] != a) {
            rep[a] = rep[rep[a]];
            a = rep[a];
        }
        return a;
    }

    long newcoset() {
        tab.push_back(std::vector<long>(2 * K, 0));
        rep.push_back(static_cast<long>(tab.size()) - 1);
        ++live;
        if (static_cast<long>(tab.size()) > cap)
            throw size_error("coset enumeration exceeded the coset cap");
        return static_cast<long>(tab.size()) - 1;
    }

    static int invl(int l) { return l ^ 1; }

    void merge(long a, long b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        rep[b] = a;
        --live;
        dead.push(b);
        process();
    }

    void process() {
        while (!dead.empty()) {
            long y = dead.front();
            dead.pop();
            for (int l = 0; l < 2 * K; ++l) {
                long u = tab[y][l];
                if (u == 0) continue;
                tab[y][l] = 0;
                if (tab[u][invl(l)] == y) tab[u][invl(l)] = 0;
                long fx = find(y);
                long fu = find(u);
                long w = tab[fx][l];
                if (w == 0) {
                    long z = tab[fu][invl(l)];
                    if (z == 0) {
                        tab[fx][l] = fu;
                        tab[fu][invl(l)] = fx;
                    } else {
                        // edge into fu already exists from z
                        long a = find(z), b = fx;
                        tab[fx][l] = fu;
                        if (a != b) {
                            if (a > b) std::swap(a, b);
                            rep[b] = a;
                            --live;
                            dead.push(b);
                        }
                    }
                } else {
                    long a = find(w), b = fu;
                    if (a != b) {
                        if (a > b) std::swap(a, b);
                        rep[b] = a;
                        --live;
                        dead.push(b);
                    }
                }
            }
        }
    }

    // HLT scan of relator w at coset alpha, filling gaps with new cosets
    bool scan_fill(long alpha, const std::vector<int>& w) {
        bool changed = false;
        while (true) {
            long f = find(alpha);
            size_t i = 0;
            while (i < w.size()) {
                long nx = tab[f][w[i]];
                if (nx == 0) break;
                f = find(nx);
                ++i;
            }
            if (i == w.size()) {
                if (f != find(alpha)) {
                    merge(f, alpha);
                    changed = true;
                }
                return changed;
            }
            long b = find(alpha);
            size_t j = w.size();
            while (j > i + 1) {
                long nx = tab[b][invl(w[j - 1])];
                if (nx == 0) break;
                b = find(nx);
                --j;
            }
            if (j == i + 1) {
                // single gap: deduction f --w[i]--> b
                long w0 = tab[f][w[i]];
                if (w0 != 0) {
                    merge(w0, b);
                } else {
                    long z = tab[b][invl(w[i])];
                    if (z != 0) {
                        merge(z, f);
                    } else {
                        tab[f][w[i]] = b;
                        tab[b][invl(w[i])] = f;
                    }
                }
                changed = true;
                return changed;
            }
            // wide gap: define one new coset and rescan
            long nc = newcoset();
            tab[f][w[i]] = nc;
            tab[nc][invl(w[i])] = f;
            changed = true;
        }
    }
};

}  // namespace

FiniteGroup FiniteGroup::from_presentation(int ngens, const std::vector<std::vector<int>>& relators,
                                           long coset_cap) {
    if (ngens < 1) throw input_error("presentation needs at least one generator");
    TC tc;
    tc.K = ngens;
    tc.cap = coset_cap;
    for (auto& r : relators) {
        std::vector<int> w;
        for (int s : r) {
            if (s == 0 || std::abs(s) > ngens) throw input_error("bad relator letter");
            w.push_back(s > 0 ? 2 * (s - 1) : 2 * (-s - 1) + 1);
        }
        if (!w.empty()) tc.rel.push_back(std::move(w));
    }
    tc.tab.push_back({});  // index 0 unused
    tc.rep.push_back(0);
    tc.newcoset();  // coset 1

    bool changed = true;
    while (changed) {
        changed = false;
        for (long a = 1; a < static_cast<long>(tc.tab.size()); ++a) {
            if (tc.find(a) != a) continue;
            for (auto& w : tc.rel)
                if (tc.scan_fill(a, w)) changed = true;
            if (tc.find(a) != a) continue;
            for (int l = 0; l < 2 * tc.K; ++l) {
                long aa = tc.find(a);
                if (tc.tab[aa][l] == 0) {
                    long nc = tc.newcoset();
                    tc.tab[aa][l] = nc;
                    tc.tab[nc][TC::invl(l)] = aa;
                    changed = true;
                }
            }
        }
        if (tc.live > group_order_cap())
            throw size_error("presented group exceeds the order cap");
    }

    // collect live cosets; coset(find(1)) = identity
    std::vector<long> lives;
    for (long a = 1; a < static_cast<long>(tc.tab.size()); ++a)
        if (tc.find(a) == a) lives.push_back(a);
    long n = static_cast<long>(lives.size());
    std::map<long, int> index;
    {
        long id = tc.find(1);
        index[id] = 0;
        int next = 1;
        for (long a : lives)
            if (a != id) index[a] = next++;
    }
    // BFS words from the identity over generator letters
    std::vector<std::vector<int>> words(n);
    std::vector<bool> seen(n, false);
    std::queue<long> bfs;
    bfs.push(tc.find(1));
    seen[0] = true;
    while (!bfs.empty()) {
        long a = bfs.front();
        bfs.pop();
        for (int l = 0; l < 2 * tc.K; ++l) {
            long b = tc.find(tc.tab[a][l]);
            if (b == 0) throw input_error("incomplete coset table");
            int ib = index[b];
            if (!seen[ib]) {
                seen[ib] = true;
                words[ib] = words[index[a]];
                words[ib].push_back(l);
                bfs.push(b);
            }
        }
    }
    // multiplication by tracing words
    std::vector<int> table(n * n);
    for (long a = 0; a < n; ++a) {
        long ca = lives[0];
        for (long x : lives)
            if (index[x] == a) ca = x;
        for (long b = 0; b < n; ++b) {
            long c = ca;
            for (int l : words[b]) c = tc.find(tc.tab[c][l]);
            table[a * n + b] = index[c];
        }
    }
    FiniteGroup G = from_table(std::move(table), n, false);
    // generator elements and defining words
    G.gens_.clear();
    for (int k = 0; k < ngens; ++k) {
        long c = tc.find(tc.tab[tc.find(1)][2 * k]);
        G.gens_.push_back(index[c]);
    }
    G.words_.resize(n);
    for (long a = 0; a < n; ++a) {
        std::vector<int> w;
        for (int l : words[a]) w.push_back((l % 2 == 0) ? (l / 2 + 1) : -(l / 2 + 1));
        G.words_[a] = std::move(w);
    }
    return G;
}

// ---------------------------------------------------------------------------
// basic element machinery
// ---------------------------------------------------------------------------
long FiniteGroup::element_order(int a) const {
    long k = 1;
    int x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

int FiniteGroup::power(int a, long k) const {
    long n = element_order(a);
    k %= n;
    if (k < 0) k += n;
    int r = 0;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

int FiniteGroup::conj(int a, int g) const { return mul(mul(inv(g), a), g); }

int FiniteGroup::comm(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool FiniteGroup::is_cyclic() const {
    for (int a = 0; a < n_; ++a)
        if (element_order(a) == n_) return true;
    return false;
}

long FiniteGroup::exponent() const {
    long e = 1;
    for (int a = 0; a < n_; ++a) e = mpz_get_si(lcm(Int(e), Int(element_order(a))).get_mpz_t());
    return e;
}

Subgroup closure(const FiniteGroup& G, std::vector<int> gens) {
    std::set<int> h{0};
    std::vector<int> work{0};
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int g : gens) {
            int y = G.mul(x, g);
            if (h.insert(y).second) work.push_back(y);
            int z = G.mul(x, G.inv(g));
            if (h.insert(z).second) work.push_back(z);
        }
    }
    return Subgroup(h.begin(), h.end());
}

Subgroup whole_group(const FiniteGroup& G) {
    Subgroup s(G.order());
    std::iota(s.begin(), s.end(), 0);
    return s;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
    for (int g = 0; g < G.order(); ++g)
        for (int h : H)
            if (!std::binary_search(H.begin(), H.end(), G.conj(h, g))) return false;
    return true;
}

std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& G) {
    std::set<Subgroup> out;
    for (int a = 0; a < G.order(); ++a) out.insert(closure(G, {a}));
    return {out.begin(), out.end()};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
    std::set<Subgroup> found;
    std::vector<Subgroup> queue;
    for (auto& c : cyclic_subgroups(G))
        if (found.insert(c).second) queue.push_back(c);
    while (!queue.empty()) {
        Subgroup h = queue.back();
        queue.pop_back();
        for (int g = 0; g < G.order(); ++g) {
            if (std::binary_search(h.begin(), h.end(), g)) continue;
            std::vector<int> gens = h;
            gens.push_back(g);
            Subgroup bigger = closure(G, gens);
            if (found.insert(bigger).second) queue.push_back(bigger);
        }
        if (found.size() > 20000) throw size_error("subgroup lattice too large");
    }
    std::vector<Subgroup> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

Subgroup center(const FiniteGroup& G) {
    Subgroup z;
    for (int a = 0; a < G.order(); ++a) {
        bool central = true;
        for (int b = 0; b < G.order() && central; ++b)
            if (G.mul(a, b) != G.mul(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return z;
}

Subgroup derived_subgroup(const FiniteGroup& G) {
    std::vector<int> gens;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b) gens.push_back(G.comm(a, b));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return closure(G, gens);
}

bool FiniteGroup::is_solvable() const {
    Subgroup cur = whole_group(*this);
    while (cur.size() > 1) {
        FiniteGroup H = subgroup_as_group(*this, cur);
        Subgroup dH = derived_subgroup(H);
        if (dH.size() == cur.size()) return false;
        // map back into the parent indexing
        Subgroup next;
        for (int i : dH) next.push_back(cur[i]);
        std::sort(next.begin(), next.end());
        cur = next;
    }
    return true;
}

FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H) {
    long n = static_cast<long>(H.size());
    std::map<int, int> idx;
    for (long i = 0; i < n; ++i) idx[H[i]] = static_cast<int>(i);
    if (H.empty() || H[0] != 0) throw input_error("subgroup must contain the identity");
    std::vector<int> t(n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            int prod = G.mul(H[i], H[j]);
            auto it = idx.find(prod);
            if (it == idx.end()) throw input_error("set is not closed under multiplication");
            t[i * n + j] = it->second;
        }
    return FiniteGroup::from_table(std::move(t), n, true);
}

std::pair<FiniteGroup, std::vector<int>> quotient(const FiniteGroup& G, const Subgroup& H) {
    if (!is_normal(G, H)) throw input_error("quotient by a non-normal subgroup");
    long n = G.order();
    std::vector<int> cosetrep(n, -1);  // element -> canonical (minimal) coset representative
    for (int a = 0; a < n; ++a) {
        if (cosetrep[a] >= 0) continue;
        int rep = a;
        std::vector<int> members;
        for (int h : H) members.push_back(G.mul(h, a));
        for (int m : members) rep = std::min(rep, m);
        for (int m : members) cosetrep[m] = rep;
    }
    // identity coset must get index 0
    std::map<int, int> idx;
    idx[cosetrep[0]] = 0;
    int next = 1;
    for (int a = 0; a < n; ++a)
        if (!idx.count(cosetrep[a])) idx[cosetrep[a]] = next++;
    long q = next;
    std::vector<int> t(q * q, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[idx[cosetrep[a]] * q + idx[cosetrep[b]]] = idx[cosetrep[G.mul(a, b)]];
    FiniteGroup Q = FiniteGroup::from_table(std::move(t), q, true);
    std::vector<int> qmap(n);
    for (int a = 0; a < n; ++a) qmap[a] = idx[cosetrep[a]];
    return {Q, qmap};
}

Subgroup sylow(const FiniteGroup& G, const Int& p) {
    if (!is_prime(p)) throw input_error("not a prime: " + p.get_str());
    Int n(G.order());
    if (mod(n, p) != 0) throw input_error("p does not divide the group order");
    long vp = valuation(n, p);
    Int target = pow_ui(p, vp);
    long pt = mpz_get_si(target.get_mpz_t());
    Subgroup P{0};
    while (static_cast<long>(P.size()) < pt) {
        // normalizer of P
        std::vector<int> N;
        for (int g = 0; g < G.order(); ++g) {
            bool norm = true;
            for (int h : P)
                if (!std::binary_search(P.begin(), P.end(), G.conj(h, g))) {
                    norm = false;
                    break;
                }
            if (norm) N.push_back(g);
        }
        bool extended = false;
        for (int g : N) {
            if (std::binary_search(P.begin(), P.end(), g)) continue;
            long og = G.element_order(g);
            // g should have p-power order modulo P; a p-power-order g suffices
            bool ppower = true;
            long o = og;
            while (o > 1) {
                if (mod(Int(o), p) != 0) {
                    ppower = false;
                    break;
                }
                o /= mpz_get_si(p.get_mpz_t());
            }
            if (!ppower) continue;
            std::vector<int> gens = P;
            gens.push_back(g);
            Subgroup bigger = closure(G, gens);
            long sz = static_cast<long>(bigger.size());
            bool is_p_power = true;
            long s = sz;
            while (s > 1) {
                if (s % mpz_get_si(p.get_mpz_t()) != 0) {
                    is_p_power = false;
                    break;
                }
                s /= mpz_get_si(p.get_mpz_t());
            }
            if (is_p_power && sz > static_cast<long>(P.size())) {
                P = bigger;
                extended = true;
                break;
            }
        }
        if (!extended) throw input_error("sylow construction stalled (bad table?)");
    }
    return P;
}

// ---------------------------------------------------------------------------
// metacyclic structure
// ---------------------------------------------------------------------------
std::optional<MetacyclicWitness> is_metacyclic(const FiniteGroup& G) {
    for (auto& C : cyclic_subgroups(G)) {
        if (!is_normal(G, C)) continue;
        auto [Q, qmap] = quotient(G, C);
        if (!Q.is_cyclic()) continue;
        // witness: a generator y of C and an x mapping to a generator of Q
        int y = 0;
        FiniteGroup Cg = subgroup_as_group(G, C);
        for (size_t i = 0; i < C.size(); ++i)
            if (Cg.element_order(static_cast<int>(i)) == static_cast<long>(C.size())) {
                y = C[i];
                break;
            }
        for (int x = 0; x < G.order(); ++x) {
            if (Q.element_order(qmap[x]) == Q.order()) return MetacyclicWitness{y, x};
        }
    }
    return std::nullopt;
}

std::vector<MetacyclicPresentation> metacyclic_presentations(const FiniteGroup& G) {
    if (!is_metacyclic(G)) throw input_error("group is not metacyclic");
    std::set<MetacyclicPresentation> out;
    for (auto& C : cyclic_subgroups(G)) {
        if (!is_normal(G, C)) continue;
        auto [Q, qmap] = quotient(G, C);
        if (!Q.is_cyclic()) continue;
        long n = static_cast<long>(C.size());
        long m = Q.order();
        // exponent table of C with respect to each generator y
        for (int y : C) {
            if (G.element_order(y) != n) continue;
            std::map<int, long> log;  // element of C -> exponent of y
            {
                int cur = 0;
                for (long k = 0; k < n; ++k) {
                    log[cur] = k;
                    cur = G.mul(cur, y);
                }
            }
            for (int x = 0; x < G.order(); ++x) {
                if (Q.element_order(qmap[x]) != m) continue;
                int xm = G.power(x, m);
                auto it = log.find(xm);
                if (it == log.end()) continue;  // x^m outside C cannot happen
                long i = it->second;
                long t = log.at(G.conj(y, x));
                if (i == 0) i = n;
                if (t == 0) t = n;
                out.insert(MetacyclicPresentation{m, n, i, t});
            }
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::tuple<long, long, long>> presentation_mnt(const FiniteGroup& G) {
    std::set<std::tuple<long, long, long>> mnt;
    for (auto& pr : metacyclic_presentations(G)) mnt.insert({pr.m, pr.n, mod(Int(pr.t), Int(pr.n)) == 0 ? pr.n : mpz_get_si(mod(Int(pr.t), Int(pr.n)).get_mpz_t())});
    return {mnt.begin(), mnt.end()};
}

// ---------------------------------------------------------------------------
// isomorphism testing: invariant prefilter plus generator-image backtracking
// ---------------------------------------------------------------------------
namespace {

std::vector<long> order_profile(const FiniteGroup& G) {
    std::vector<long> p;
    for (int a = 0; a < G.order(); ++a) p.push_back(G.element_order(a));
    std::sort(p.begin(), p.end());
    return p;
}

// greedy small generating sequence
std::vector<int> generating_sequence(const FiniteGroup& G) {
    std::vector<int> gens;
    Subgroup H{0};
    while (static_cast<long>(H.size()) < G.order()) {
        int best = -1;
        size_t bestsz = H.size();
        for (int a = 0; a < G.order(); ++a) {
            if (std::binary_search(H.begin(), H.end(), a)) continue;
            std::vector<int> cand = gens;
            cand.push_back(a);
            size_t sz = closure(G, cand).size();
            if (sz > bestsz) {
                bestsz = sz;
                best = a;
                if (static_cast<long>(sz) == G.order()) break;
            }
        }
        gens.push_back(best);
        H = closure(G, gens);
    }
    return gens;
}

bool extend_iso(const FiniteGroup& A, const FiniteGroup& B, const std::vector<int>& gens,
                size_t k, std::vector<int>& images) {
    if (k == gens.size()) {
        // verify the induced map is a bijective homomorphism
        std::vector<int> phi(A.order(), -1);
        phi[0] = 0;
        // generate assignments by closure over words
        std::vector<std::pair<int, int>> work{{0, 0}};
        std::vector<std::pair<int, int>> genmap;
        for (size_t i = 0; i < gens.size(); ++i) genmap.push_back({gens[i], images[i]});
        while (!work.empty()) {
            auto [a, b] = work.back();
            work.pop_back();
            for (auto& [g, h] : genmap) {
                int a2 = A.mul(a, g), b2 = B.mul(b, h);
                if (phi[a2] < 0) {
                    phi[a2] = b2;
                    work.push_back({a2, b2});
                } else if (phi[a2] != b2) {
                    return false;
                }
            }
        }
        std::vector<bool> hit(B.order(), false);
        for (int a = 0; a < A.order(); ++a) {
            if (phi[a] < 0) return false;
            if (hit[phi[a]]) return false;
            hit[phi[a]] = true;
        }
        for (int a = 0; a < A.order(); ++a)
            for (int b = 0; b < A.order(); ++b)
                if (phi[A.mul(a, b)] != B.mul(phi[a], phi[b])) return false;
        return true;
    }
    long od = A.element_order(gens[k]);
    for (int cand = 0; cand < B.order(); ++cand) {
        if (B.element_order(cand) != od) continue;
        images[k] = cand;
        if (extend_iso(A, B, gens, k + 1, images)) return true;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const FiniteGroup& A, const FiniteGroup& B) {
    if (A.order() != B.order()) return false;
    if (order_profile(A) != order_profile(B)) return false;
    if (center(A).size() != center(B).size()) return false;
    if (derived_subgroup(A).size() != derived_subgroup(B).size()) return false;
    auto gens = generating_sequence(A);
    std::vector<int> images(gens.size(), 0);
    return extend_iso(A, B, gens, 0, images);
}

// ---------------------------------------------------------------------------
// semicyclic classes
// ---------------------------------------------------------------------------
namespace {

struct SemiMemo {
    // fingerprint -> list of (group, verdict)
    std::map<std::tuple<int, long, std::vector<long>, size_t, size_t>,
             std::vector<std::pair<FiniteGroup, bool>>>
        buckets;

    std::tuple<int, long, std::vector<long>, size_t, size_t> key(const FiniteGroup& G, int cls) {
        return {cls, G.order(), order_profile(G), center(G).size(), derived_subgroup(G).size()};
    }

    std::optional<bool> lookup(const FiniteGroup& G, int cls) {
        auto it = buckets.find(key(G, cls));
        if (it == buckets.end()) return std::nullopt;
        for (auto& [H, v] : it->second)
            if (is_isomorphic(G, H)) return v;
        return std::nullopt;
    }

    void store(const FiniteGroup& G, int cls, bool v) { buckets[key(G, cls)].push_back({G, v}); }
};

bool is_p_power(long n, const Int& p) {
    if (n < 1) return false;
    long pp = mpz_get_si(p.get_mpz_t());
    while (n > 1) {
        if (n % pp != 0) return false;
        n /= pp;
    }
    return true;
}

bool semicyclic_rec(const FiniteGroup& G, SemicyclicClass cls, const Int& p, SemiMemo& memo) {
    if (G.order() == 1) return true;
    int ci = static_cast<int>(cls);
    if (auto hit = memo.lookup(G, ci)) return *hit;

    bool verdict = false;
    auto subs = all_subgroups(G);
    for (auto& C : cyclic_subgroups(G)) {
        if (C.size() == 1) continue;
        if (!is_normal(G, C)) continue;
        if (cls == SemicyclicClass::SC_o || cls == SemicyclicClass::SD_odd) {
            if (C.size() % 2 == 0) continue;
        }
        if (cls == SemicyclicClass::SC_p && !is_p_power(static_cast<long>(C.size()), p)) continue;
        for (auto& H : subs) {
            if (H.size() == G.order() && cls != SemicyclicClass::SD_odd) continue;  // proper
            // G = C H by cardinality: |C||H|/|C cap H| = |G|
            size_t capsz = 0;
            for (int h : H)
                if (std::binary_search(C.begin(), C.end(), h)) ++capsz;
            if (C.size() * H.size() != capsz * G.order()) continue;
            if (cls == SemicyclicClass::SD_odd) {
                if (capsz != 1) continue;  // genuine semidirect product
                if (H.size() == G.order()) continue;
            }
            FiniteGroup Hg = subgroup_as_group(G, H);
            if (semicyclic_rec(Hg, cls, p, memo)) {
                verdict = true;
                break;
            }
        }
        if (verdict) break;
    }
    memo.store(G, ci, verdict);
    return verdict;
}

SemiMemo g_semi_memo;

}  // namespace

bool is_semicyclic(const FiniteGroup& G, SemicyclicClass cls, const Int& p) {
    if (cls == SemicyclicClass::SC_p) {
        if (!is_prime(p)) throw input_error("SC_p needs a prime");
        if (!is_p_power(G.order(), p)) throw input_error("SC_p expects a p-group");
    }
    if (cls == SemicyclicClass::SC_o || cls == SemicyclicClass::SD_odd) {
        if (G.order() % 2 == 0) throw input_error("class requires odd order");
    }
    return semicyclic_rec(G, cls, p, g_semi_memo);
}

// ---------------------------------------------------------------------------
// extensions
// ---------------------------------------------------------------------------
GroupExtension GroupExtension::make(const FiniteGroup& G, const Subgroup& H) {
    auto [Q, qmap] = quotient(G, H);
    return GroupExtension{G, H, qmap, Q};
}

namespace {

// is there a complement of H inside E, i.e. a subgroup C <= E with
// C cap H = 1 and CH = E?  D lists the image cosets of E in Gamma.
bool has_complement(const FiniteGroup& G, const Subgroup& H, const std::vector<int>& qmap,
                    const Subgroup& D, const FiniteGroup& Gamma) {
    if (D.size() == 1) return true;
    FiniteGroup Dg = subgroup_as_group(Gamma, D);
    auto gens_local = generating_sequence(Dg);
    std::vector<int> dgens;  // coset indices in Gamma
    for (int gl : gens_local) dgens.push_back(D[gl]);

    std::vector<std::vector<int>> pools;
    double combos = 1;
    for (int dg : dgens) {
        std::vector<int> pool;
        for (int g = 0; g < G.order(); ++g)
            if (qmap[g] == dg) pool.push_back(g);
        combos *= static_cast<double>(pool.size());
        pools.push_back(std::move(pool));
    }
    if (combos > 2e6) throw size_error("complement search space too large");

    std::vector<size_t> pick(pools.size(), 0);
    while (true) {
        std::vector<int> gens;
        for (size_t i = 0; i < pick.size(); ++i) gens.push_back(pools[i][pick[i]]);
        Subgroup C = closure(G, gens);
        if (C.size() == D.size()) {
            size_t capsz = 0;
            for (int c : C)
                if (std::binary_search(H.begin(), H.end(), c)) ++capsz;
            if (capsz == 1) return true;
        }
        size_t i = 0;
        while (i < pick.size()) {
            if (++pick[i] < pools[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
    }
    return false;
}

}  // namespace

bool meta_splits(const GroupExtension& ext) {
    auto subs = all_subgroups(ext.Gamma);
    for (auto& D : subs) {
        FiniteGroup Dg = subgroup_as_group(ext.Gamma, D);
        if (!is_metacyclic(Dg)) continue;
        if (!has_complement(ext.G, ext.H, ext.quotient_map, D, ext.Gamma)) return false;
    }
    return true;
}

bool splits(const GroupExtension& ext) {
    return has_complement(ext.G, ext.H, ext.quotient_map, whole_group(ext.Gamma), ext.Gamma);
}

// ---------------------------------------------------------------------------
// abelian invariants
// ---------------------------------------------------------------------------
AbelianInvariants abelian_invariants(const std::vector<Int>& orders) {
    AbelianInvariants inv;
    std::map<Int, std::vector<Int>> primary;
    for (auto& d : orders) {
        if (d < 1) throw input_error("cyclic factor orders must be positive");
        if (d == 1) continue;
        for (auto& [p, e] : factor_int(d)) primary[p].push_back(pow_ui(p, e));
    }
    for (auto& [p, fac] : primary) {
        auto f = fac;
        std::sort(f.begin(), f.end());
        inv.primary[p] = {static_cast<long>(f.size()), f.front(), f};
    }
    return inv;
}

long AbelianInvariants::rank(const Int& p) const {
    auto it = primary.find(p);
    return it == primary.end() ? 0 : std::get<0>(it->second);
}

Int AbelianInvariants::smallest_factor(const Int& p) const {
    auto it = primary.find(p);
    return it == primary.end() ? Int(1) : std::get<1>(it->second);
}

bool AbelianInvariants::is_metacyclic() const {
    for (auto& [p, t] : primary)
        if (std::get<0>(t) > 2) return false;
    return true;
}

std::vector<Int> AbelianInvariants::primes() const {
    std::vector<Int> out;
    for (auto& [p, t] : primary) out.push_back(p);
    return out;
}

Int AbelianInvariants::exponent_of(const Int& p) const {
    auto it = primary.find(p);
    return it == primary.end() ? Int(1) : std::get<2>(it->second).back();
}

Int AbelianInvariants::order() const {
    Int n(1);
    for (auto& [p, t] : primary)
        for (auto& f : std::get<2>(t)) n *= f;
    return n;
}

long pgroup_rank(const FiniteGroup& P, const Int& p) {
    if (P.order() == 1) return 0;
    long pp = mpz_get_si(p.get_mpz_t());
    std::vector<int> gens;
    for (int a = 0; a < P.order(); ++a) gens.push_back(P.power(a, pp));
    for (int a = 0; a < P.order(); ++a)
        for (int b = 0; b < P.order(); ++b) gens.push_back(P.comm(a, b));
    Subgroup frat = closure(P, gens);
    long index = P.order() / static_cast<long>(frat.size());
    long r = 0;
    while (index > 1) {
        index /= pp;
        ++r;
    }
    return r;
}

}  // namespace abl

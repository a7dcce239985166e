#include "abl/brauer.hpp"

#include <algorithm>

namespace abl {

namespace {

Rat reduce_mod1(const Rat& q) {
    Rat r = q;
    Int num(r.get_num()), den(r.get_den());
    Int m = mod(num, den);
    return Rat(m, den);
}

}  // namespace

BrauerClass make_class(const std::vector<std::pair<std::string, Rat>>& assignments,
                       const std::set<std::string>& real_places) {
    BrauerClass c;
    for (auto& [label, q] : assignments) {
        Rat r = reduce_mod1(q);
        if (r == 0) continue;
        if (real_places.count(label) && r != Rat(1, 2))
            throw input_error("real archimedean invariant must be 0 or 1/2");
        c.inv[label] += r;
        c.inv[label] = reduce_mod1(c.inv[label]);
        if (c.inv[label] == 0) c.inv.erase(label);
    }
    Rat sum(0);
    for (auto& [l, q] : c.inv) sum += q;
    sum = reduce_mod1(sum);
    if (sum != 0)
        throw input_error("invariants do not sum to zero mod 1 (residue " + sum.get_str() + ")");
    return c;
}

Int exponent(const BrauerClass& c) {
    Int e(1);
    for (auto& [l, q] : c.inv) e = lcm(e, Int(q.get_den()));
    return e;
}

BrauerClass tensor(const BrauerClass& a, const BrauerClass& b) {
    BrauerClass c = a;
    for (auto& [l, q] : b.inv) {
        c.inv[l] = reduce_mod1(c.inv[l] + q);
        if (c.inv[l] == 0) c.inv.erase(l);
    }
    return c;
}

BrauerClass inverse(const BrauerClass& a) {
    BrauerClass c;
    for (auto& [l, q] : a.inv) c.inv[l] = reduce_mod1(-q);
    return c;
}

const ProfilePlace* LocalDegreeProfile::find(const std::string& label) const {
    for (auto& p : places)
        if (p.label == label) return &p;
    return nullptr;
}

bool splits(const LocalDegreeProfile& profile, const BrauerClass& c) {
    for (auto& [label, q] : c.inv) {
        const ProfilePlace* p = profile.find(label);
        if (!p) throw input_error("profile does not cover support place " + label);
        if (mod(p->local_degree, Int(q.get_den())) != 0) return false;
    }
    return true;
}

namespace {

AdequacyVerdict adequacy(const LocalDegreeProfile& profile, bool tame) {
    AdequacyVerdict v;
    v.ok = true;
    Int n = profile.order();
    for (auto& [p, e] : factor_int(n)) {
        Int need = pow_ui(p, e);
        std::vector<std::string> hits;
        for (auto& pl : profile.places) {
            if (tame && pl.residue_char == p) continue;
            if (mod(pl.local_degree, need) == 0) hits.push_back(pl.label);
            if (hits.size() == 2) break;
        }
        if (hits.size() >= 2) {
            v.witnesses[p] = {hits[0], hits[1]};
        } else {
            v.ok = false;
            v.failing_primes.push_back(p);
        }
    }
    return v;
}

}  // namespace

AdequacyVerdict schacher_adequate(const LocalDegreeProfile& profile) {
    return adequacy(profile, false);
}

AdequacyVerdict tamely_adequate(const LocalDegreeProfile& profile) {
    return adequacy(profile, true);
}

std::map<Int, std::vector<Int>> wild_quotient(const LocalDegreeProfile& profile) {
    std::map<Int, std::vector<Int>> out;
    std::map<Int, std::vector<Int>> orders;
    for (auto& pl : profile.places) {
        if (pl.residue_char == 0) continue;
        if (pl.wild_e > 1) orders[pl.residue_char].push_back(pl.wild_e);
    }
    for (auto& [p, e] : factor_int(profile.order())) {
        auto it = orders.find(p);
        if (it == orders.end()) {
            out[p] = {};
            continue;
        }
        auto& es = it->second;
        long r = static_cast<long>(es.size());
        Int L(1);
        for (auto& x : es) L = lcm(L, x);
        std::vector<Int> s(r);
        for (long i = 0; i < r; ++i) s[i] = L / es[i];
        Int total(1);
        for (auto& x : es) total *= x;
        Int asize = total / L;
        if (asize == 1) {
            out[p] = {};
            continue;
        }
        if (asize > 200000) throw size_error("wild quotient too large to enumerate");
        // enumerate the zero-sum subgroup A of the direct sum
        std::vector<long> ez, sz;
        for (long i = 0; i < r; ++i) {
            ez.push_back(mpz_get_si(es[i].get_mpz_t()));
            sz.push_back(mpz_get_si(s[i].get_mpz_t()));
        }
        long Lz = mpz_get_si(L.get_mpz_t());
        std::vector<std::vector<long>> elems;
        std::vector<long> cur(r, 0);
        while (true) {
            long acc = 0;
            for (long i = 0; i < r; ++i) acc = (acc + cur[i] * sz[i]) % Lz;
            if (acc == 0) elems.push_back(cur);
            long i = 0;
            while (i < r) {
                if (++cur[i] < ez[i]) break;
                cur[i] = 0;
                ++i;
            }
            if (i == r) break;
        }
        // primary type of A per prime q: the counts #{a : q^k a = 0}
        // determine the partition; merge primary parts into invariant factors
        std::map<long, std::vector<long>> primary;  // q -> partition (descending)
        long asz = static_cast<long>(elems.size());
        for (auto& [qI, qe] : factor_int(Int(asz))) {
            long q = mpz_get_si(qI.get_mpz_t());
            std::vector<long> counts;  // c_k = log_q #{a : q^k a = 0}
            long k = 0;
            counts.push_back(0);
            while (true) {
                ++k;
                long qk = 1;
                for (long i = 0; i < k; ++i) qk *= q;
                long cnt = 0;
                for (auto& v : elems) {
                    bool killed = true;
                    for (long i = 0; i < r && killed; ++i)
                        if ((v[i] * qk) % ez[i] != 0) killed = false;
                    if (killed) ++cnt;
                }
                long c = 0;
                long t = cnt;
                while (t > 1) {
                    t /= q;
                    ++c;
                }
                counts.push_back(c);
                if (counts[k] == counts[k - 1]) break;
            }
            // multiplicity of parts >= k is counts[k] - counts[k-1]
            std::vector<long> partition;
            for (long kk = 1; kk < static_cast<long>(counts.size()); ++kk) {
                long ge_k = counts[kk] - counts[kk - 1];
                while (static_cast<long>(partition.size()) < ge_k) partition.push_back(0);
                for (long j = 0; j < ge_k; ++j) partition[j] = kk;
            }
            std::sort(partition.rbegin(), partition.rend());
            primary[q] = partition;
        }
        // invariant factors: combine the largest parts across primes
        size_t maxlen = 0;
        for (auto& [q, part] : primary) maxlen = std::max(maxlen, part.size());
        std::vector<Int> factors(maxlen, Int(1));
        for (auto& [q, part] : primary)
            for (size_t j = 0; j < part.size(); ++j)
                factors[j] *= pow_ui(Int(q), part[j]);
        std::sort(factors.begin(), factors.end());
        std::vector<Int> keep;
        for (auto& f : factors)
            if (f > 1) keep.push_back(f);
        out[p] = keep;
    }
    return out;
}

BrauerClass standard_division_algebra(
    const Int& group_order, const std::map<Int, std::pair<std::string, std::string>>& pairs) {
    if (group_order < 1) throw input_error("group order must be positive");
    std::set<std::string> used;
    BrauerClass acc;
    for (auto& [p, e] : factor_int(group_order)) {
        auto it = pairs.find(p);
        if (it == pairs.end()) throw input_error("missing supporting pair for prime " + p.get_str());
        auto& [v1, v2] = it->second;
        if (v1 == v2 || used.count(v1) || used.count(v2))
            throw input_error("supporting places must be distinct");
        used.insert(v1);
        used.insert(v2);
        Int gp = pow_ui(p, e);
        BrauerClass dp = make_class({{v1, Rat(1) / Rat(gp)}, {v2, Rat(-1) / Rat(gp)}});
        acc = tensor(acc, dp);
    }
    return acc;
}

bool crossed_product_check(const BrauerClass& c, const Int& group_order,
                           const std::map<std::string, std::vector<Int>>& realizable_orders) {
    if (exponent(c) != group_order) return false;
    for (auto& [label, q] : c.inv) {
        auto it = realizable_orders.find(label);
        if (it == realizable_orders.end()) return false;
        Int den(q.get_den());
        bool ok = false;
        for (auto& o : it->second)
            if (mod(o, den) == 0) ok = true;
        if (!ok) return false;
    }
    return true;
}

}  // namespace abl

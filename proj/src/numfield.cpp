#include "abl/numfield.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "abl/fq.hpp"

namespace abl {

NumberField::NumberField(Poly defining) : F_(std::move(defining)) {
    if (F_.degree() < 1 || !F_.is_monic() || !F_.has_integer_coeffs())
        throw input_error("number field needs a monic integer defining polynomial");
    if (F_.degree() > 1 && !is_irreducible_over_Q(F_))
        throw input_error("defining polynomial is reducible over Q");
    disc_ = (F_.degree() < 2) ? Int(1) : Int(discriminant(F_).get_num());
    ctx_ = std::make_shared<NfCtx>(F_);
}

NumberField NumberField::rationals() {
    return NumberField(Poly::x());
}

std::vector<LocalPlace> NumberField::decompose(const Int& p) const {
    if (!is_prime(p)) throw input_error("not a prime: " + p.get_str());
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = places_.find(p);
        if (it != places_.end()) return it->second;
    }
    auto fac = padic_factor(F_, p);
    std::vector<LocalPlace> out;
    char suffix = 'a';
    for (auto& lf : fac.factors) {
        LocalPlace v;
        v.p = p;
        v.e = lf.e;
        v.f = lf.f;
        v.local_factor = lf.g;
        v.prec = lf.prec;
        v.label = p.get_str() + std::string(1, suffix++);
        v.field_poly = F_.int_coeffs();
        out.push_back(std::move(v));
    }
    long total = 0;
    for (auto& v : out) total += v.local_degree();
    if (total != degree()) throw precision_error("decomposition degree mismatch");
    {
        std::lock_guard<std::mutex> lk(mu_);
        places_[p] = out;
    }
    return out;
}

bool NumberField::splits_completely_mod(const Int& q) const {
    if (!is_prime(q)) return false;
    if (degree() == 1) return true;
    auto coeffs = F_.int_coeffs();
    if (coeffs.back() % q == 0) return false;
    Rat disc = discriminant(F_);
    if (mod(Int(disc.get_num()), q) == 0) return false;
    FqCtx k = FqCtx::prime_field(q);
    FqPoly f = fqp_from_ints(k, coeffs);
    FqPoly xq = fqp_powmod(k, fqp_x(k), q, f);
    return fqp_cmp(xq, fqp_mod(k, fqp_x(k), f)) == 0;
}

bool NumberField::contains_root_of(const Poly& h) const {
    return has_root_in_field(h, ctx());
}

// ---------------------------------------------------------------------------
// precision escalation for local root tests
// ---------------------------------------------------------------------------
namespace {

LocalPlace refine_place(const LocalPlace& v, long target) {
    Poly F = Poly::from_ints(v.field_poly);
    auto fac = padic_factor(F, v.p, target);
    const LocalFactor* best = nullptr;
    long bestval = -1;
    long cmplen = std::min(v.prec, fac.prec);
    Int pc = pow_ui(v.p, cmplen);
    for (auto& lf : fac.factors) {
        if (lf.e != v.e || lf.f != v.f) continue;
        if (lf.g.size() != v.local_factor.size()) continue;
        long agree = cmplen;
        for (size_t i = 0; i + 1 < lf.g.size(); ++i) {
            Int diff = mod(lf.g[i] - v.local_factor[i], pc);
            if (diff != 0) agree = std::min(agree, valuation(diff, v.p));
        }
        if (agree > bestval) {
            bestval = agree;
            best = &lf;
        }
    }
    if (!best || bestval < std::min(v.prec, fac.prec) / 2)
        throw precision_error("could not re-identify place after refinement");
    LocalPlace out = v;
    out.local_factor = best->g;
    out.prec = best->prec;
    return out;
}

}  // namespace

TriBool place_has_root(const LocalPlace& v, const Poly& h) {
    LocalPlace cur = v;
    long cap = precision_cap();
    while (true) {
        try {
            return has_root_in_local_field(h, cur.p, cur.local_factor, cur.prec);
        } catch (const precision_error&) {
            long next = cur.prec * 2;
            if (next > cap) throw;
            cur = refine_place(cur, next);
        }
    }
}

std::pair<long, Int> local_invariants(const LocalPlace& v) {
    long d = v.local_degree();
    long n_v = d + 2;
    Int q(1);
    const Int& p = v.p;
    for (long s = 1;; ++s) {
        long ldeg;  // [Q_p(zeta_{p^s}) : Q_p]
        if (p == 2) {
            ldeg = (s <= 1) ? 1 : (1L << (s - 1));
        } else {
            Int l = pow_ui(p, s - 1) * (p - 1);
            if (l > d) break;
            ldeg = mpz_get_si(l.get_mpz_t());
        }
        if (ldeg > d || d % ldeg != 0) break;
        if (p == 2 && s == 1) {
            q = 2;  // -1 is always present
            continue;
        }
        if (place_has_root(v, Poly::cyclotomic(pow_ui(p, s))) == TriBool::yes)
            q = pow_ui(p, s);
        else
            break;
    }
    // test-only fault hook used by the golden suite's negative control
    if (std::getenv("ABL_FAULT_QV") != nullptr) q = q * p;
    return {n_v, q};
}

// ---------------------------------------------------------------------------
// Wang data
// ---------------------------------------------------------------------------
WangData NumberField::wang_data() const {
    WangData out;
    if (contains_root_of(Poly(std::vector<Rat>{Rat(1), Rat(0), Rat(1)}))) {
        out.totally_real_intersection = false;
        return out;
    }
    long t = 2;  // eta_2 = 0 is always in K
    for (long cand = 3;; ++cand) {
        long deg_eta = 1L << (cand - 2);
        if (deg_eta > degree()) break;
        if (contains_root_of(Poly::eta_min_poly(cand)))
            t = cand;
        else
            break;
    }
    if (contains_root_of(Poly::i_eta_min_poly(t + 1))) {
        out.totally_real_intersection = false;
        return out;
    }
    out.totally_real_intersection = true;
    out.t = t;

    Poly p_i(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    Poly p_eta = Poly::eta_min_poly(t + 1);
    Poly p_ieta = Poly::i_eta_min_poly(t + 1);
    for (auto& v : decompose(2)) {
        bool oddly = place_has_root(v, p_i) == TriBool::no &&
                     place_has_root(v, p_eta) == TriBool::no &&
                     place_has_root(v, p_ieta) == TriBool::no;
        out.even_places.push_back({v.label, oddly ? EvenClass::oddly : EvenClass::evenly});
    }
    return out;
}

// ---------------------------------------------------------------------------
// cyclotomic intersection via Gaussian-period generators
// ---------------------------------------------------------------------------
namespace {

// sigma_a on Q[z]/Phi_n: w(z) -> w(z^a)
NfElem cyclo_sigma(const NfCtx& Z, const NfElem& w, const Int& a, const Int& n) {
    NfElem za = nf_one(Z);
    NfElem z = nf_gen(Z);
    Int e = mod(a, n);
    for (Int i = 0; i < e; ++i) za = nf_mul(Z, za, z);
    NfElem acc = nf_zero(Z);
    for (long i = static_cast<long>(w.size()) - 1; i >= 0; --i) {
        acc = nf_mul(Z, acc, za);
        acc = nf_add(Z, acc, nf_from_rat(Z, w[i]));
    }
    return acc;
}

}  // namespace

CyclotomicIntersection NumberField::cyclotomic_intersection(const Int& n) const {
    if (n < 1) throw input_error("cyclotomic modulus must be positive");
    CyclotomicIntersection out;
    out.n = n;
    Int phi = euler_phi(n);
    if (phi * degree() > factor_degree_bound())
        throw size_error("cyclotomic intersection beyond degree bound");

    out.d = 1;
    auto divs = divisors(n);
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        if (*it == 1) break;
        if (contains_root_of(Poly::cyclotomic(*it))) {
            out.d = *it;
            break;
        }
    }

    if (n <= 2) {
        out.H = units_mod(n);
        return out;
    }

    NfCtx Z(Poly::cyclotomic(n));
    auto units = units_mod(n);
    auto subgroups = subgroups_of_unit_group(n);

    auto fixed_field_in_K = [&](const std::vector<Int>& S) -> bool {
        long index = static_cast<long>(units.size() / S.size());
        if (degree() % index != 0) return false;
        if (index == 1) return true;  // fixed field is Q
        std::vector<std::vector<Int>> cosets;
        std::set<Int> seen;
        for (auto& u : units) {
            if (seen.count(u)) continue;
            std::vector<Int> coset;
            for (auto& s : S) {
                Int x = mod(u * s, n);
                coset.push_back(x);
                seen.insert(x);
            }
            cosets.push_back(std::move(coset));
        }
        for (int attempt = 0; attempt < 8; ++attempt) {
            NfElem beta = nf_gen(Z);
            if (attempt > 0) {
                NfElem z2 = nf_mul(Z, nf_gen(Z), nf_gen(Z));
                beta = nf_add(Z, beta, nf_smul(Z, z2, Rat(attempt)));
            }
            std::vector<NfElem> conj;
            for (auto& coset : cosets) {
                NfElem acc = nf_zero(Z);
                for (auto& a : coset) acc = nf_add(Z, acc, cyclo_sigma(Z, beta, a, n));
                conj.push_back(std::move(acc));
            }
            bool distinct = true;
            for (size_t i = 0; i < conj.size() && distinct; ++i)
                for (size_t j = i + 1; j < conj.size() && distinct; ++j)
                    if (conj[i] == conj[j]) distinct = false;
            if (!distinct) continue;
            NfPoly mp = nfp_one(Z);
            for (auto& g : conj) {
                NfPoly lin;
                lin.c.push_back(nf_neg(Z, g));
                lin.c.push_back(nf_one(Z));
                mp = nfp_mul(Z, mp, lin);
            }
            std::vector<Rat> c;
            for (auto& ce : mp.c) {
                if (!nf_is_rational(ce)) throw input_error("period trace not rational");
                c.push_back(ce[0]);
            }
            return contains_root_of(Poly(std::move(c)));
        }
        throw input_error("no separating period generator found");
    };

    std::vector<Int> H = units;
    for (auto& S : subgroups) {
        if (static_cast<long>(S.size()) == static_cast<long>(units.size())) continue;
        if (fixed_field_in_K(S)) {
            std::vector<Int> meet;
            std::set_intersection(H.begin(), H.end(), S.begin(), S.end(),
                                  std::back_inserter(meet));
            H = std::move(meet);
        }
    }
    out.H = H;

    for (auto& hh : out.H)
        if (out.d > 1 && mod(hh - 1, out.d) != 0)
            throw input_error("cyclotomic intersection inconsistency (h != 1 mod d)");
    return out;
}

// ---------------------------------------------------------------------------
// norm oracle catalog
// ---------------------------------------------------------------------------
NormAnswer norm_obstruction(const LocalPlace& v, const LocalExtQuery& q, const Rat& element) {
    if (q.ext_degree <= 0 || q.cyclic_order <= 0) throw input_error("bad extension spec");
    if (q.ext_degree == 1) return NormAnswer::norm;
    if (q.ext_degree < q.cyclic_order) return NormAnswer::norm;  // non-full-rank case
    bool q2_type = (v.p == 2 && v.e == 1 && v.f == 1);
    if (q2_type && q.unramified && q.cyclic && q.ext_degree == q.cyclic_order) {
        if (element == 0) throw input_error("norm test of zero");
        long val = valuation(element, Int(2));
        // units are norms from unramified extensions; the valuation decides
        return (val % q.ext_degree == 0) ? NormAnswer::norm : NormAnswer::not_norm;
    }
    return NormAnswer::undecided;
}

}  // namespace abl

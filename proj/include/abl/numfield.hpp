#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "abl/factor.hpp"
#include "abl/local.hpp"
#include "abl/nf.hpp"

namespace abl {

enum class EvenClass { not_applicable, oddly, evenly };

// one prime of K above the rational prime p
struct LocalPlace {
    Int p;
    long e = 0;
    long f = 0;
    std::vector<Int> local_factor;  // Q_p-irreducible factor of the defining poly
    long prec = 0;
    std::string label;  // "2a", "2b", ... in canonical decomposition order
    std::vector<Int> field_poly;  // defining polynomial, for precision refinement

    long local_degree() const { return e * f; }
    long n_v() const { return e * f + 2; }
    // residue field size p^f
    Int residue_size() const { return pow_ui(p, f); }
};

struct WangData {
    bool totally_real_intersection = false;
    std::optional<long> t;
    std::vector<std::pair<std::string, EvenClass>> even_places;  // label -> class

    std::vector<std::string> oddly_even_places() const {
        std::vector<std::string> out;
        for (auto& [l, c] : even_places)
            if (c == EvenClass::oddly) out.push_back(l);
        return out;
    }
};

struct CyclotomicIntersection {
    Int n;
    std::vector<Int> H;  // Gal(Q(mu_n)/(Q(mu_n) cap K)) as residues mod n, sorted
    Int d;               // largest divisor of n with mu_d in K
};

class NumberField {
  public:
    explicit NumberField(Poly defining);
    static NumberField rationals();

    const Poly& defining_poly() const { return F_; }
    long degree() const { return F_.degree(); }
    const Int& poly_disc() const { return disc_; }
    const NfCtx& ctx() const { return *ctx_; }
    bool is_rationals() const { return F_.degree() == 1; }

    // one LocalPlace per p-adic irreducible factor; sum of e*f = degree
    std::vector<LocalPlace> decompose(const Int& p) const;

    // does the defining polynomial split into distinct linear factors mod q?
    bool splits_completely_mod(const Int& q) const;

    WangData wang_data() const;
    CyclotomicIntersection cyclotomic_intersection(const Int& n) const;

    // global membership: does h (rational coefficients) have a root in K?
    bool contains_root_of(const Poly& h) const;

  private:
    Poly F_;
    Int disc_;
    std::shared_ptr<NfCtx> ctx_;
    mutable std::mutex mu_;
    mutable std::map<Int, std::vector<LocalPlace>> places_;
};

// (n_v, q_v): n_v = e*f + 2 and q_v the largest p-power with mu_{q_v} in K_v.
// Escalates p-adic precision internally; throws precision_error if undecided
// at the cap.
std::pair<long, Int> local_invariants(const LocalPlace& v);

// root test in K_v with internal precision escalation
TriBool place_has_root(const LocalPlace& v, const Poly& h);

enum class NormAnswer { norm, not_norm, undecided };

struct LocalExtQuery {
    long cyclic_order = 0;  // the C_{2^s} context (2^s)
    long ext_degree = 0;    // [L^(v) : K_v]
    bool unramified = false;
    bool cyclic = false;
};

// catalog-based norm oracle for the Grunwald-Wang obstruction
NormAnswer norm_obstruction(const LocalPlace& v, const LocalExtQuery& q, const Rat& element);

}  // namespace abl

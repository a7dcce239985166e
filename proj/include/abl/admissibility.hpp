#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "abl/group.hpp"
#include "abl/numfield.hpp"

namespace abl {

enum class VerdictValue { yes, no, undecided };

// Decision with a machine-checkable certificate and the clauses that fired.
struct Verdict {
    VerdictValue value = VerdictValue::undecided;
    nlohmann::json certificate;
    std::vector<std::string> citations;

    static Verdict yes(nlohmann::json cert, std::vector<std::string> cites = {});
    static Verdict no(nlohmann::json cert, std::vector<std::string> cites = {});
    static Verdict undecided(nlohmann::json cert, std::vector<std::string> cites = {});

    bool is_yes() const { return value == VerdictValue::yes; }
    bool is_no() const { return value == VerdictValue::no; }
    nlohmann::json to_json() const;
};

// default sieve bound for supporting-set searches
long sieve_bound_default();

// ---- abelian admissibility -------------------------------------------------

// local half of Schacher's criterion for an abelian group given by its cyclic
// factor orders
Verdict abelian_preadmissible(const std::vector<Int>& factors, const NumberField& K);

// the summary theorem: per-component reduction, unique-divisor rule,
// metacyclic rule, odd comparison, p = 2 comparison with special-case
// detection through the norm catalog
Verdict abelian_admissible(const std::vector<Int>& factors, const NumberField& K);

// Wang's criterion for a cyclic 2-power extension with prescribed local
// components; reports the special case when realization is impossible
struct LocalPrescription {
    std::string place_label;  // a place of K above 2 (decomposition label)
    long degree = 1;          // [L^(v) : K_v]
    bool unramified = true;
    bool cyclic = true;
};
Verdict wang_cyclic_check(const NumberField& K, long cyclic_order,
                          const std::vector<LocalPrescription>& prescriptions);

// ---- tame admissibility ----------------------------------------------------

Verdict liedahl_check(const MetacyclicPresentation& pres, const NumberField& K);

// solvable Sylow-metacyclic criterion; non-solvable inputs are evaluated
// against the same criterion and labeled "criterion-only"
Verdict tame_admissible_solvable(const FiniteGroup& G, const NumberField& K);

struct SupportingSet {
    struct Entry {
        Int p;
        MetacyclicPresentation pres;
        Int v1, v2;
    };
    std::vector<Entry> entries;
};

struct SupportingSetResult {
    std::optional<SupportingSet> set;
    std::string failure;  // sieve residue classes when exhausted
};

SupportingSetResult tame_supporting_set(const FiniteGroup& G, const NumberField& K,
                                        const std::vector<Int>& exclusions = {},
                                        long bound = -1);

// ---- pro-p ranks and the semicyclic corollary -------------------------------

// max-min free pro-p rank over pairs of places above p; 1 for a unique place
long N_p(const NumberField& K, const Int& p);

Verdict semicyclic_admissible(const FiniteGroup& G, const NumberField& K);

// ---- the general preadmissibility catalog -----------------------------------

Verdict preadmissible(const FiniteGroup& G, const NumberField& K);

}  // namespace abl

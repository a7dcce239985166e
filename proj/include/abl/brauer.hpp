#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "abl/numeric.hpp"

namespace abl {

// A Brauer class over a number field in its Hasse-invariant description: a
// finite zero-sum map from place labels to rationals in [0,1).  Real
// archimedean places are restricted to {0, 1/2}; unlisted places are 0.
struct BrauerClass {
    std::map<std::string, Rat> inv;

    bool is_trivial() const { return inv.empty(); }
};

// sum of invariants must vanish mod 1; negative inputs are normalized into
// [0,1); labels in real_places may only carry 0 or 1/2
BrauerClass make_class(const std::vector<std::pair<std::string, Rat>>& assignments,
                       const std::set<std::string>& real_places = {});

Int exponent(const BrauerClass& c);
BrauerClass tensor(const BrauerClass& a, const BrauerClass& b);
BrauerClass inverse(const BrauerClass& a);

struct ProfilePlace {
    std::string label;
    Int residue_char = 0;  // 0 for archimedean places
    Int local_degree = 1;  // [L_pi : K_pi]
    Int tame_degree = 1;   // [L_pi cap (K_pi)_tr : K_pi]
    Int wild_e = 1;        // maximal residue-char power dividing e(L_pi/K_pi)
};

struct LocalDegreeProfile {
    Int total_degree = 1;  // [L:K]
    Int group_order = 0;   // acting group order; defaults to total_degree
    std::vector<ProfilePlace> places;

    Int order() const { return group_order == 0 ? total_degree : group_order; }
    const ProfilePlace* find(const std::string& label) const;
};

// L splits alpha iff every invariant denominator divides the local degree
bool splits(const LocalDegreeProfile& profile, const BrauerClass& c);

struct AdequacyVerdict {
    bool ok = false;
    // per prime p | [L:K]: the witness pair of place labels
    std::map<Int, std::pair<std::string, std::string>> witnesses;
    std::vector<Int> failing_primes;
};

AdequacyVerdict schacher_adequate(const LocalDegreeProfile& profile);
AdequacyVerdict tamely_adequate(const LocalDegreeProfile& profile);

// Br(L/K)/Br(L/K)_tr per prime: the zero-sum subgroup of the direct sum of
// Z/e_pi(p), returned as invariant factors (ascending, 1s dropped)
std::map<Int, std::vector<Int>> wild_quotient(const LocalDegreeProfile& profile);

// tensor over p | n of classes with +-1/|G|(p) at the supporting pair
BrauerClass standard_division_algebra(
    const Int& group_order, const std::map<Int, std::pair<std::string, std::string>>& pairs);

// crossed-product certification: exponent |G| and a realizable subgroup of
// divisible order at every support place
bool crossed_product_check(const BrauerClass& c, const Int& group_order,
                           const std::map<std::string, std::vector<Int>>& realizable_orders);

}  // namespace abl

#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "abl/numeric.hpp"

namespace abl {

// order cap for Cayley-table groups
long group_order_cap();

// A finite group of modest order given by its Cayley table.  Elements are
// indices 0..n-1 with the identity at 0.
class FiniteGroup {
  public:
    static FiniteGroup from_table(std::vector<int> table, long order, bool trusted = false);
    static FiniteGroup trivial();
    static FiniteGroup cyclic(long n);
    static FiniteGroup abelian(const std::vector<long>& orders);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    // C_n x| C_m with x^-1 y x = y^t (t^m = 1 mod n)
    static FiniteGroup semidirect_cyclic(long n, long m, long t);
    // the metacyclic presentation M(m,n,i,t) via coset enumeration
    static FiniteGroup metacyclic_group(long m, long n, long i, long t);
    static FiniteGroup heisenberg(long p);
    static FiniteGroup quaternion8();
    // relators are words over generator indices: +k means generator k-1,
    // -k its inverse
    static FiniteGroup from_presentation(int ngens, const std::vector<std::vector<int>>& relators,
                                         long coset_cap = 200000);

    long order() const { return n_; }
    int mul(int a, int b) const { return table_[a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    long element_order(int a) const;
    int power(int a, long k) const;
    int conj(int a, int g) const;  // g^-1 a g
    int comm(int a, int b) const;  // a^-1 b^-1 a b

    // defining words exist when built from a presentation
    const std::vector<int>& generators() const { return gens_; }
    const std::vector<std::vector<int>>& element_words() const { return words_; }

    bool is_abelian() const;
    bool is_cyclic() const;
    bool is_solvable() const;
    long exponent() const;

  private:
    FiniteGroup() = default;
    void finish(bool trusted);
    long n_ = 0;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<int> gens_;                // generator elements (presentation-built)
    std::vector<std::vector<int>> words_;  // defining word per element
};

using Subgroup = std::vector<int>;  // sorted element list containing 0

Subgroup closure(const FiniteGroup& G, std::vector<int> gens);
Subgroup whole_group(const FiniteGroup& G);
bool is_normal(const FiniteGroup& G, const Subgroup& H);
std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& G);
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);
Subgroup center(const FiniteGroup& G);
Subgroup derived_subgroup(const FiniteGroup& G);
FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H);

// quotient by a normal subgroup: the group and the element -> coset map
std::pair<FiniteGroup, std::vector<int>> quotient(const FiniteGroup& G, const Subgroup& H);

Subgroup sylow(const FiniteGroup& G, const Int& p);

struct MetacyclicWitness {
    int y;  // generator of the normal cyclic subgroup
    int x;  // lifts a generator of the cyclic quotient
};
std::optional<MetacyclicWitness> is_metacyclic(const FiniteGroup& G);

struct MetacyclicPresentation {
    long m, n, i, t;
    auto operator<=>(const MetacyclicPresentation&) const = default;
};
// all presentations (m, n, i, t) with i, t reduced to [1, n]
std::vector<MetacyclicPresentation> metacyclic_presentations(const FiniteGroup& G);
// the distinct (m, n, t) triples
std::vector<std::tuple<long, long, long>> presentation_mnt(const FiniteGroup& G);

bool is_isomorphic(const FiniteGroup& A, const FiniteGroup& B);

enum class SemicyclicClass { SC, SC_p, SC_o, SD_odd };
bool is_semicyclic(const FiniteGroup& G, SemicyclicClass cls, const Int& p = 0);

struct GroupExtension {
    FiniteGroup G;
    Subgroup H;                    // normal subgroup
    std::vector<int> quotient_map;  // element -> coset index in Gamma
    FiniteGroup Gamma;

    static GroupExtension make(const FiniteGroup& G, const Subgroup& H);
};

// does the extension split over every metacyclic subgroup of Gamma?
bool meta_splits(const GroupExtension& ext);
// does it split globally?
bool splits(const GroupExtension& ext);

// primary decomposition of an abelian group given by cyclic factor orders;
// composite entries are CRT-split first
struct AbelianInvariants {
    // prime -> (rank, smallest factor, ascending prime-power factors)
    std::map<Int, std::tuple<long, Int, std::vector<Int>>> primary;

    long rank(const Int& p) const;
    Int smallest_factor(const Int& p) const;
    bool is_metacyclic() const;  // every primary component has rank <= 2
    std::vector<Int> primes() const;
    Int exponent_of(const Int& p) const;
    Int order() const;
};
AbelianInvariants abelian_invariants(const std::vector<Int>& orders);

// minimal number of generators of a p-group (Frattini quotient rank)
long pgroup_rank(const FiniteGroup& P, const Int& p);

}  // namespace abl

#pragma once

#include <optional>
#include <vector>

#include "pfg/group.hpp"
#include "pfg/subgroup.hpp"

namespace pfg {

inline constexpr int kDefaultEnumerationCap = 400;
inline constexpr int kDefaultSubgroupCountCap = 20000;
inline constexpr int kDefaultIsoCap = 512;

// The complete subgroup lattice, sorted by (cardinality, lexicographic
// bitset). Contains the trivial and the full subgroup; immutable once built.
struct SubgroupLattice {
    int parent_order = 0;
    std::vector<SubgroupSet> subgroups;
    std::vector<char> normal;
    std::vector<char> maximal;

    // Members contained in `within`, excluding `within` itself and the
    // trivial subgroup: the candidate partition blocks of that subgroup.
    std::vector<int> proper_nontrivial_within(const SubgroupSet& within) const;
    int index_of(const SubgroupSet& s) const;
};

// Cyclic seeds joined pairwise to a fixpoint; result independent of join
// order. Throws EnumerationTooLarge when |G| > order_cap or the count
// exceeds count_cap.
SubgroupLattice all_subgroups(const Group& g, int order_cap = kDefaultEnumerationCap,
                              int count_cap = kDefaultSubgroupCountCap);

SubgroupSet sylow_subgroup(const Group& g, long long p);
int sylow_count(const Group& g, long long p);

// Subgroup generated by every element whose order is not p.
SubgroupSet hughes_subgroup(const Group& g, long long p);

struct HughesThompson {
    long long p = 0;
    SubgroupSet hughes;
};
// Least prime p dividing |G| with H_p(G) proper, for non-p-groups.
// A hit also asserts H_p(G) nilpotent of index exactly p.
std::optional<HughesThompson> is_hughes_thompson(const Group& g);

struct FrobeniusStructure {
    SubgroupSet kernel;
    SubgroupSet complement;
    bool is_minimal = false;
};

// Frobenius detection inside `within` (pass the full subgroup for G itself).
// Scans normal subgroups with a complement acting fixed-point-freely.
std::optional<FrobeniusStructure> frobenius_structure_of(const Group& g,
                                                         const SubgroupLattice& lattice,
                                                         const SubgroupSet& within,
                                                         bool fill_minimal = false);
std::optional<FrobeniusStructure> is_frobenius(const Group& g, const SubgroupLattice& lattice);

struct QuasiFrobenius {
    SubgroupSet center;
    Group quotient;               // G/Z(G)
    FrobeniusStructure quotient_frobenius;  // witnesses in coset indices
};
std::optional<QuasiFrobenius> is_quasi_frobenius(const Group& g,
                                                 int order_cap = kDefaultEnumerationCap);

// Backtracking isomorphism test behind an invariant screen.
// Returns the element map A -> B, or nullopt.
std::optional<std::vector<int>> is_isomorphic(const Group& a, const Group& b,
                                              int cap = kDefaultIsoCap);

enum class CyclicMaximalType {
    Cyclic,
    CpTimesCpPow,   // C_p x C_{p^{n-1}}
    Modular,        // M_n(p)
    Quaternion,     // Q_{2^n}
    Dihedral,       // D_{2^n}
    Semidihedral,   // SD_{2^n}
    NotApplicable,
};
const char* to_string(CyclicMaximalType t);

// Classification of p-groups possessing a cyclic maximal subgroup.
// Fingerprints first, then an isomorphism check against the matching builder.
CyclicMaximalType classify_cyclic_maximal_p_group(const Group& g);

}  // namespace pfg

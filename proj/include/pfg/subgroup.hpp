#pragma once

#include <vector>

#include "pfg/bitset.hpp"
#include "pfg/group.hpp"

namespace pfg {

// A subset of element indices of a parent group, known to be closed under
// the parent's multiplication (hence a subgroup: finite and nonempty).
class SubgroupSet {
public:
    SubgroupSet() = default;
    SubgroupSet(int parent_order, Bitset members)
        : parent_order_(parent_order), members_(std::move(members)) {}

    int parent_order() const { return parent_order_; }
    const Bitset& members() const { return members_; }
    int size() const { return members_.count(); }
    bool contains(int x) const { return members_.test(x); }
    std::vector<int> indices() const { return members_.to_indices(); }

    bool operator==(const SubgroupSet& o) const { return members_ == o.members_; }

private:
    int parent_order_ = 0;
    Bitset members_;
};

// Subgroup generated by a seed set (identity is always included).
SubgroupSet closure(const Group& g, const Bitset& seed);
SubgroupSet generated_by(const Group& g, const std::vector<int>& elements);
SubgroupSet trivial_subgroup(const Group& g);
SubgroupSet full_subgroup(const Group& g);

bool is_closed(const Group& g, const Bitset& members);
bool is_normal(const Group& g, const SubgroupSet& h);
// Lagrange sanity assertion plus closure re-verification.
void assert_valid_subgroup(const Group& g, const SubgroupSet& h);

// The subgroup as an abstract group: induced Cayley table, identity
// relabeled to 0, other elements in increasing parent index order.
// Also returns the parent indices in table order when asked.
Group induced_group(const Group& g, const SubgroupSet& h,
                    std::vector<int>* parent_index = nullptr);

// Derived subgroup of a subgroup, computed inside the parent's indexing.
SubgroupSet derived_of(const Group& g, const SubgroupSet& h);
SubgroupSet normalizer(const Group& g, const SubgroupSet& h);
SubgroupSet sylow_subgroup_of(const Group& g, long long p);
bool subgroup_is_abelian(const Group& g, const SubgroupSet& h);
bool subgroup_is_cyclic(const Group& g, const SubgroupSet& h);
int subgroup_exponent(const Group& g, const SubgroupSet& h);

}  // namespace pfg

#include "pfg/subgroup.hpp"

#include <numeric>

namespace pfg {

SubgroupSet closure(const Group& g, const Bitset& seed) {
    Bitset members(g.order());
    members.set(Group::identity);
    std::vector<int> elems{Group::identity};
    seed.for_each([&](int x) {
        if (!members.test(x)) { members.set(x); elems.push_back(x); }
    });
    for (std::size_t i = 0; i < elems.size(); ++i) {
        int x = elems[i];
        for (std::size_t j = 0; j < elems.size(); ++j) {
            int y = elems[j];
            for (int p : {g.mul(x, y), g.mul(y, x)}) {
                if (!members.test(p)) { members.set(p); elems.push_back(p); }
            }
        }
    }
    return SubgroupSet(g.order(), members);
}

SubgroupSet generated_by(const Group& g, const std::vector<int>& elements) {
    Bitset seed(g.order());
    for (int x : elements) seed.set(x);
    return closure(g, seed);
}

SubgroupSet trivial_subgroup(const Group& g) {
    Bitset b(g.order());
    b.set(Group::identity);
    return SubgroupSet(g.order(), b);
}

SubgroupSet full_subgroup(const Group& g) {
    Bitset b(g.order());
    for (int i = 0; i < g.order(); ++i) b.set(i);
    return SubgroupSet(g.order(), b);
}

bool is_closed(const Group& g, const Bitset& members) {
    if (!members.test(Group::identity)) return false;
    auto idx = members.to_indices();
    for (int a : idx)
        for (int b : idx)
            if (!members.test(g.mul(a, b))) return false;
    return true;
}

bool is_normal(const Group& g, const SubgroupSet& h) {
    auto idx = h.indices();
    for (int x = 0; x < g.order(); ++x)
        for (int m : idx)
            if (!h.contains(g.conjugate(x, m))) return false;
    return true;
}

void assert_valid_subgroup(const Group& g, const SubgroupSet& h) {
    if (h.parent_order() != g.order() || !h.contains(Group::identity) ||
        !is_closed(g, h.members()))
        throw StructureViolation("subgroup set is not closed");
    if (g.order() % h.size() != 0)
        throw StructureViolation("subgroup size violates Lagrange");
}

Group induced_group(const Group& g, const SubgroupSet& h, std::vector<int>* parent_index) {
    auto idx = h.indices();  // ascending, so identity (0) comes first
    int m = int(idx.size());
    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < m; ++i) pos[idx[i]] = i;
    std::vector<int> flat(std::size_t(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int p = pos[g.mul(idx[a], idx[b])];
            if (p < 0) throw StructureViolation("induced table left the subgroup");
            flat[std::size_t(a) * m + b] = p;
        }
    if (parent_index) *parent_index = idx;
    return group_from_table_unchecked(m, std::move(flat), "");
}

SubgroupSet derived_of(const Group& g, const SubgroupSet& h) {
    auto idx = h.indices();
    Bitset seed(g.order());
    for (int a : idx)
        for (int b : idx) seed.set(g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
    return closure(g, seed);
}

bool subgroup_is_abelian(const Group& g, const SubgroupSet& h) {
    auto idx = h.indices();
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            if (g.mul(idx[i], idx[j]) != g.mul(idx[j], idx[i])) return false;
    return true;
}

bool subgroup_is_cyclic(const Group& g, const SubgroupSet& h) {
    int m = h.size();
    auto idx = h.indices();
    for (int x : idx)
        if (g.element_order(x) == m) return true;
    return false;
}

int subgroup_exponent(const Group& g, const SubgroupSet& h) {
    long long e = 1;
    h.members().for_each([&](int x) { e = std::lcm(e, (long long)g.element_order(x)); });
    return int(e);
}

SubgroupSet normalizer(const Group& g, const SubgroupSet& h) {
    auto idx = h.indices();
    Bitset b(g.order());
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int m : idx)
            if (!h.contains(g.conjugate(x, m))) { ok = false; break; }
        if (ok) b.set(x);
    }
    return SubgroupSet(g.order(), b);
}

// Sylow p-subgroup by normalizer growth: while |P| is short of the full
// p-part, the normalizer of P contains a p-element outside P; adjoining it
// keeps the closure a p-group.
SubgroupSet sylow_subgroup_of(const Group& g, long long p) {
    long long target = factorize(g.order()).p_part(p);
    SubgroupSet pgrp = trivial_subgroup(g);
    while (pgrp.size() < target) {
        SubgroupSet norm = normalizer(g, pgrp);
        int found = -1;
        for (int x : norm.indices()) {
            if (pgrp.contains(x)) continue;
            int o = g.element_order(x);
            while (o % p == 0) o /= int(p);
            if (o == 1) { found = x; break; }
        }
        if (found < 0) throw StructureViolation("sylow growth found no p-element in normalizer");
        Bitset seed = pgrp.members();
        seed.set(found);
        pgrp = closure(g, seed);
        if (factorize(pgrp.size()).factors.size() != 1)
            throw StructureViolation("sylow growth left the p-group family");
    }
    return pgrp;
}

}  // namespace pfg

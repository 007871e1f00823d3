#include "pfg/structure.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace pfg {

std::vector<int> SubgroupLattice::proper_nontrivial_within(const SubgroupSet& within) const {
    std::vector<int> out;
    int sz = within.size();
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        const auto& s = subgroups[i];
        if (s.size() <= 1 || s.size() >= sz) continue;
        if (s.members().is_subset_of(within.members())) out.push_back(int(i));
    }
    return out;
}

int SubgroupLattice::index_of(const SubgroupSet& s) const {
    for (std::size_t i = 0; i < subgroups.size(); ++i)
        if (subgroups[i].members() == s.members()) return int(i);
    return -1;
}

SubgroupLattice all_subgroups(const Group& g, int order_cap, int count_cap) {
    if (g.order() > order_cap) throw EnumerationTooLarge(order_cap);

    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<SubgroupSet> list;
    auto add = [&](SubgroupSet s) {
        if (seen.insert(s.members()).second) {
            if (int(list.size()) + 1 > count_cap) throw EnumerationTooLarge(count_cap);
            list.push_back(std::move(s));
            return true;
        }
        return false;
    };

    std::vector<SubgroupSet> cyclic_seeds;
    for (int x = 0; x < g.order(); ++x) {
        SubgroupSet c = generated_by(g, {x});
        if (add(c)) cyclic_seeds.push_back(std::move(c));
    }

    // Join every known subgroup with every cyclic seed until nothing new
    // appears. Any subgroup is an iterated join of cyclic ones, so this
    // reaches the whole lattice regardless of processing order.
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (const auto& seed : cyclic_seeds) {
            if (seed.members().is_subset_of(list[i].members())) continue;
            add(closure(g, list[i].members() | seed.members()));
        }
    }

    std::sort(list.begin(), list.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members().lex_less(b.members());
    });

    SubgroupLattice lat;
    lat.parent_order = g.order();
    lat.subgroups = std::move(list);
    lat.normal.resize(lat.subgroups.size());
    lat.maximal.resize(lat.subgroups.size());
    for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
        assert_valid_subgroup(g, lat.subgroups[i]);
        lat.normal[i] = is_normal(g, lat.subgroups[i]);
    }
    for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
        if (lat.subgroups[i].size() == g.order()) continue;
        bool max = true;
        for (std::size_t j = 0; j < lat.subgroups.size() && max; ++j) {
            if (j == i || lat.subgroups[j].size() >= g.order() ||
                lat.subgroups[j].size() <= lat.subgroups[i].size())
                continue;
            max = !lat.subgroups[i].members().is_subset_of(lat.subgroups[j].members());
        }
        lat.maximal[i] = max;
    }
    return lat;
}

SubgroupSet sylow_subgroup(const Group& g, long long p) {
    if (!is_prime(p)) throw NotPrime(p);
    if (g.order() % p != 0) throw PrimeDoesNotDivide(p, g.order());
    return sylow_subgroup_of(g, p);
}

int sylow_count(const Group& g, long long p) {
    SubgroupSet syl = sylow_subgroup(g, p);
    int count = g.order() / normalizer(g, syl).size();
    if (count % p != 1) throw StructureViolation("sylow count is not 1 mod p");
    return count;
}

SubgroupSet hughes_subgroup(const Group& g, long long p) {
    if (!is_prime(p)) throw NotPrime(p);
    Bitset seed(g.order());
    for (int x = 1; x < g.order(); ++x)
        if (g.element_order(x) != p) seed.set(x);
    if (!seed.any()) return trivial_subgroup(g);
    return closure(g, seed);
}

std::optional<HughesThompson> is_hughes_thompson(const Group& g) {
    if (g.order() == 1 || g.is_p_group().has_value()) return std::nullopt;
    for (auto [p, e] : factorize(g.order()).factors) {
        (void)e;
        SubgroupSet h = hughes_subgroup(g, p);
        if (h.size() == g.order()) continue;
        // structure theorem: H_p(G) nilpotent with |G : H_p(G)| = p
        if (g.order() / h.size() != p)
            throw StructureViolation("Hughes subgroup index is not p");
        if (!induced_group(g, h).is_nilpotent())
            throw StructureViolation("Hughes subgroup is not nilpotent");
        return HughesThompson{p, std::move(h)};
    }
    return std::nullopt;
}

namespace {

// center of a subgroup, inside the parent's indexing
Bitset center_within(const Group& g, const SubgroupSet& within) {
    auto idx = within.indices();
    Bitset b(g.order());
    for (int x : idx) {
        bool ok = true;
        for (int y : idx)
            if (g.mul(x, y) != g.mul(y, x)) { ok = false; break; }
        if (ok) b.set(x);
    }
    return b;
}

bool normal_within(const Group& g, const SubgroupSet& sub, const SubgroupSet& within) {
    auto idx = sub.indices();
    for (int x : within.indices())
        for (int m : idx)
            if (!sub.contains(g.conjugate(x, m))) return false;
    return true;
}

bool acts_fixed_point_freely(const Group& g, const SubgroupSet& kernel,
                             const SubgroupSet& complement) {
    for (int h : complement.indices()) {
        if (h == Group::identity) continue;
        for (int x : kernel.indices()) {
            if (x == Group::identity) continue;
            if (g.conjugate(h, x) == x) return false;
        }
    }
    return true;
}

}  // namespace

std::optional<FrobeniusStructure> frobenius_structure_of(const Group& g,
                                                         const SubgroupLattice& lattice,
                                                         const SubgroupSet& within,
                                                         bool fill_minimal) {
    int sz = within.size();
    if (sz < 6) return std::nullopt;  // the smallest Frobenius group is S3
    if (center_within(g, within).count() > 1) return std::nullopt;

    auto inside = lattice.proper_nontrivial_within(within);
    for (int ni : inside) {
        const SubgroupSet& n = lattice.subgroups[ni];
        if (sz % n.size() != 0) continue;
        int comp_size = sz / n.size();
        if (comp_size == 1) continue;
        if (!normal_within(g, n, within)) continue;
        for (int hi : inside) {
            const SubgroupSet& h = lattice.subgroups[hi];
            if (h.size() != comp_size) continue;
            if (h.members().intersection_count(n.members()) != 1) continue;
            if (!acts_fixed_point_freely(g, n, h)) continue;

            FrobeniusStructure out{n, h, false};
            if (fill_minimal) {
                bool minimal = true;
                for (int si : inside) {
                    if (frobenius_structure_of(g, lattice, lattice.subgroups[si], false)) {
                        minimal = false;
                        break;
                    }
                }
                out.is_minimal = minimal;
                if (minimal) {
                    // paper facts for minimal Frobenius groups: the kernel is
                    // the unique minimal normal subgroup, complements have
                    // prime order
                    if (!is_prime(out.complement.size()))
                        throw StructureViolation("minimal Frobenius complement not of prime order");
                    for (int si : inside) {
                        const SubgroupSet& s = lattice.subgroups[si];
                        if (!normal_within(g, s, within)) continue;
                        bool minimal_normal = true;
                        for (int ti : inside) {
                            const SubgroupSet& t = lattice.subgroups[ti];
                            if (t.size() <= 1 || t.size() >= s.size()) continue;
                            if (t.members().is_subset_of(s.members()) &&
                                normal_within(g, t, within)) {
                                minimal_normal = false;
                                break;
                            }
                        }
                        if (minimal_normal && !(s == out.kernel))
                            throw StructureViolation(
                                "minimal Frobenius kernel is not the unique minimal normal subgroup");
                    }
                }
            }
            return out;
        }
    }
    return std::nullopt;
}

std::optional<FrobeniusStructure> is_frobenius(const Group& g, const SubgroupLattice& lattice) {
    return frobenius_structure_of(g, lattice, full_subgroup(g), true);
}

std::optional<QuasiFrobenius> is_quasi_frobenius(const Group& g, int order_cap) {
    SubgroupSet z = g.center();
    if (z.size() <= 1 || z.size() >= g.order()) return std::nullopt;
    auto quo = quotient_group(g, z);
    SubgroupLattice qlat = all_subgroups(quo.group, order_cap);
    auto frob = frobenius_structure_of(quo.group, qlat, full_subgroup(quo.group), true);
    if (!frob) return std::nullopt;
    return QuasiFrobenius{std::move(z), std::move(quo.group), std::move(*frob)};
}

// ---------------------------------------------------------------------------
// isomorphism

namespace {

std::map<int, int> order_histogram(const Group& g) {
    std::map<int, int> h;
    for (int x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
    return h;
}

// Greedy generating sequence: repeatedly adjoin the element giving the
// largest closure (first index on ties), so the sequence stays short.
std::vector<int> generating_sequence(const Group& g) {
    std::vector<int> gens;
    SubgroupSet span = trivial_subgroup(g);
    while (span.size() < g.order()) {
        int best = -1, best_size = -1;
        for (int x = 0; x < g.order(); ++x) {
            if (span.contains(x)) continue;
            Bitset seed = span.members();
            seed.set(x);
            int sz = closure(g, seed).size();
            if (sz > best_size) { best_size = sz; best = x; }
            if (sz == g.order()) break;
        }
        gens.push_back(best);
        Bitset seed = span.members();
        seed.set(best);
        span = closure(g, seed);
    }
    return gens;
}

// Extends the partial generator images to a map on the span of the chosen
// generators, checking all pairwise products; empty on contradiction.
bool parallel_closure(const Group& a, const Group& b, const std::vector<int>& gens_a,
                      const std::vector<int>& images, std::vector<int>& map_out,
                      std::vector<int>& span_out) {
    std::vector<int> m(a.order(), -1);
    std::vector<char> hit(b.order(), 0);
    std::vector<int> elems;
    auto put = [&](int x, int y) {
        if (m[x] >= 0) return m[x] == y;
        if (hit[y]) return false;  // injectivity
        m[x] = y;
        hit[y] = 1;
        elems.push_back(x);
        return true;
    };
    if (!put(Group::identity, Group::identity)) return false;
    for (std::size_t i = 0; i < gens_a.size(); ++i)
        if (!put(gens_a[i], images[i])) return false;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            int x = elems[i], y = elems[j];
            if (!put(a.mul(x, y), b.mul(m[x], m[y]))) return false;
            if (!put(a.mul(y, x), b.mul(m[y], m[x]))) return false;
        }
    map_out = std::move(m);
    span_out = std::move(elems);
    return true;
}

bool extend_isomorphism(const Group& a, const Group& b, const std::vector<int>& gens,
                        std::vector<int>& images, std::size_t k, std::vector<int>& out) {
    if (k == gens.size()) {
        std::vector<int> m, span;
        if (!parallel_closure(a, b, gens, images, m, span)) return false;
        if (int(span.size()) != a.order()) return false;
        out = std::move(m);
        return true;
    }
    int want = a.element_order(gens[k]);
    for (int cand = 0; cand < b.order(); ++cand) {
        if (b.element_order(cand) != want) continue;
        images[k] = cand;
        std::vector<int> m, span;
        if (!parallel_closure(a, b, {gens.begin(), gens.begin() + k + 1},
                              {images.begin(), images.begin() + k + 1}, m, span))
            continue;
        if (extend_isomorphism(a, b, gens, images, k + 1, out)) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Group& a, const Group& b, int cap) {
    if (a.order() > cap || b.order() > cap) throw TooLarge(cap);
    if (a.order() != b.order()) return std::nullopt;
    if (a.order() == 1) return std::vector<int>{0};
    if (a.is_abelian() != b.is_abelian()) return std::nullopt;
    if (order_histogram(a) != order_histogram(b)) return std::nullopt;
    if (a.center().size() != b.center().size()) return std::nullopt;
    if (a.derived_subgroup().size() != b.derived_subgroup().size()) return std::nullopt;
    if (a.exponent() != b.exponent()) return std::nullopt;

    std::vector<int> gens = generating_sequence(a);
    std::vector<int> images(gens.size());
    std::vector<int> out;
    if (extend_isomorphism(a, b, gens, images, 0, out)) return out;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// p-groups with a cyclic maximal subgroup

const char* to_string(CyclicMaximalType t) {
    switch (t) {
        case CyclicMaximalType::Cyclic: return "cyclic";
        case CyclicMaximalType::CpTimesCpPow: return "Cp x Cp^(n-1)";
        case CyclicMaximalType::Modular: return "M_n(p)";
        case CyclicMaximalType::Quaternion: return "Q_2^n";
        case CyclicMaximalType::Dihedral: return "D_2^n";
        case CyclicMaximalType::Semidihedral: return "SD_2^n";
        case CyclicMaximalType::NotApplicable: return "not-applicable";
    }
    return "?";
}

CyclicMaximalType classify_cyclic_maximal_p_group(const Group& g) {
    auto p_opt = g.is_p_group();
    if (!p_opt) throw NotPGroup();
    int p = *p_opt;
    int k = factorize(g.order()).factors[0].second;

    if (g.is_cyclic()) return CyclicMaximalType::Cyclic;

    // a cyclic maximal subgroup exists iff some element has order p^(k-1)
    long long sub = g.order() / p;
    bool has = false;
    for (int x = 0; x < g.order() && !has; ++x) has = g.element_order(x) == sub;
    if (!has) return CyclicMaximalType::NotApplicable;

    auto confirm = [&](const Group& model, CyclicMaximalType t) {
        if (!is_isomorphic(g, model))
            throw StructureViolation("cyclic-maximal fingerprint does not match its model group");
        return t;
    };

    if (g.is_abelian())
        return confirm(direct_product(cyclic(p), cyclic(int(sub))),
                       CyclicMaximalType::CpTimesCpPow);
    if (p != 2) return confirm(modular_group(k, p), CyclicMaximalType::Modular);

    int involutions = 0;
    for (int x = 0; x < g.order(); ++x)
        if (g.element_order(x) == 2) ++involutions;
    if (involutions == 1)
        return confirm(generalized_quaternion(g.order()), CyclicMaximalType::Quaternion);
    if (involutions == g.order() / 2 + 1)
        return confirm(dihedral(g.order() / 2), CyclicMaximalType::Dihedral);
    if (k >= 4 && involutions == 3)
        return confirm(modular_group(k, 2), CyclicMaximalType::Modular);
    if (k >= 4 && involutions == g.order() / 4 + 1)
        return confirm(semidihedral(g.order()), CyclicMaximalType::Semidihedral);
    throw StructureViolation("2-group with cyclic maximal subgroup matches no known type");
}

}  // namespace pfg

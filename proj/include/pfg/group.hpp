#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfg/bitset.hpp"
#include "pfg/errors.hpp"

namespace pfg {

// Above this order, associativity is checked on >= 10*n^2 random triples
// instead of all n^3.
inline constexpr int kFullAssocCheckLimit = 256;
// Default cap for every constructor that can grow (permutation closure,
// products). Subgroup enumeration has its own, much smaller cap.
inline constexpr std::size_t kDefaultBuildCap = 10000;

enum class AssocCheck { Full, Sampled };

class SubgroupSet;

// Finite group as an order-n Cayley table. Identity is always element 0;
// tables read from files get relabeled if their identity sits elsewhere.
// Immutable after construction; safe to share across threads.
class Group {
public:
    static Group from_cayley_table(const std::vector<std::vector<int>>& table,
                                   std::string name = "");
    static Group from_permutation_generators(int degree,
                                             const std::vector<std::vector<int>>& generators,
                                             std::size_t cap = kDefaultBuildCap,
                                             std::string name = "");

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[std::size_t(a) * n_ + b]; }
    int inverse(int a) const { return inverse_[a]; }
    int conjugate(int g, int x) const { return mul(mul(inverse(g), x), g); }  // g^-1 x g
    int power(int x, long long k) const;
    int element_order(int x) const { return element_orders_[x]; }
    const std::vector<int>& element_orders() const { return element_orders_; }

    static constexpr int identity = 0;

    const std::string& name() const { return name_; }
    void set_name(std::string s) { name_ = std::move(s); }
    AssocCheck assoc_check() const { return assoc_check_; }
    // Present when from_cayley_table had to move the identity to index 0;
    // maps old indices to new ones.
    const std::optional<std::vector<int>>& relabeling() const { return relabeling_; }

    int exponent() const;
    bool is_abelian() const;
    bool is_cyclic() const;
    bool is_solvable() const;
    bool is_nilpotent() const;
    std::optional<int> is_p_group() const;

    SubgroupSet center() const;
    SubgroupSet centralizer(const SubgroupSet& s) const;
    SubgroupSet derived_subgroup() const;

private:
    Group() = default;
    void finalize();  // validates and fills caches

    int n_ = 0;
    std::vector<int> table_;  // row-major n*n
    std::vector<int> inverse_;
    std::vector<int> element_orders_;
    std::string name_;
    AssocCheck assoc_check_ = AssocCheck::Full;
    std::optional<std::vector<int>> relabeling_;

    friend Group group_from_table_unchecked(int n, std::vector<int> flat, std::string name);
};

// Internal: runs the full validation pipeline on an already-0-identity table.
Group group_from_table_unchecked(int n, std::vector<int> flat, std::string name);

// Builders. Each returns a fully validated Group.
Group trivial_group();
Group cyclic(int n);
Group elementary_abelian(int p, int rank);
Group dihedral(int m);                    // order 2m, m >= 1
Group generalized_quaternion(int order);  // order = 2^n, n >= 3
Group semidihedral(int order);            // order = 2^n, n >= 4
Group modular_group(int n, int p);        // M_n(p), order p^n, n >= 3
Group direct_product(const Group& a, const Group& b, std::size_t cap = kDefaultBuildCap);

// Action: one automorphism table of N per element of H (explicit, not
// generator images). Verified to be automorphisms and a homomorphism
// H -> Aut(N) on all pairs.
struct SemidirectResult;
Group semidirect_product(const Group& n, const Group& h,
                         const std::vector<std::vector<int>>& action,
                         bool* action_trivial = nullptr,
                         std::size_t cap = kDefaultBuildCap);

struct QuotientResult {
    Group group;
    std::vector<int> projection;  // element of G -> coset index
};
QuotientResult quotient_group(const Group& g, const SubgroupSet& n);

struct PrimeFactorization {
    std::vector<std::pair<long long, int>> factors;  // (prime, exponent), primes increasing

    long long value() const {
        long long v = 1;
        for (auto [p, e] : factors)
            for (int i = 0; i < e; ++i) v *= p;
        return v;
    }
    // p-part of the integer: p^e for the matching factor, 1 otherwise.
    long long p_part(long long p) const {
        for (auto [q, e] : factors)
            if (q == p) {
                long long v = 1;
                for (int i = 0; i < e; ++i) v *= q;
                return v;
            }
        return 1;
    }
};

PrimeFactorization factorize(long long n);
bool is_prime(long long n);

// Element order via repeated multiplication (used by tests as the oracle
// against the cached array).
int element_order_by_powers(const Group& g, int x);

// Parses "(0 1 2)(3 4)" into a permutation array of the given degree.
std::vector<int> parse_cycles(const std::string& text, int degree);
std::string format_cycles(const std::vector<int>& perm);

// Cayley-table text format: line 1 = n, then n lines of n indices; '#' comments.
Group read_cayley_table_text(const std::string& text, std::string name = "");
std::string write_cayley_table_text(const Group& g);
// Permutation-generator text format: line 1 = degree, then one generator per
// line in disjoint-cycle notation.
Group read_permutation_text(const std::string& text, std::size_t cap = kDefaultBuildCap,
                            std::string name = "");

}  // namespace pfg

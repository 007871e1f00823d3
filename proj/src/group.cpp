#include "pfg/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "pfg/subgroup.hpp"

namespace pfg {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeFactorization factorize(long long n) {
    PrimeFactorization f;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.factors.push_back({p, e});
        }
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

Group group_from_table_unchecked(int n, std::vector<int> flat, std::string name) {
    Group g;
    g.n_ = n;
    g.table_ = std::move(flat);
    g.name_ = std::move(name);
    g.finalize();
    return g;
}

void Group::finalize() {
    if (n_ < 1 || table_.size() != std::size_t(n_) * n_)
        throw NotAGroup("not-latin-square", "table is not square");
    for (int i = 0; i < n_ * n_; ++i)
        if (table_[i] < 0 || table_[i] >= n_)
            throw NotAGroup("not-latin-square",
                            "entry out of range at cell " + std::to_string(i));

    for (int x = 0; x < n_; ++x)
        if (mul(0, x) != x || mul(x, 0) != x)
            throw NotAGroup("no-identity", "element 0 is not an identity at " + std::to_string(x));

    // Latin square: every row and column is a permutation.
    std::vector<char> seen(n_);
    for (int r = 0; r < n_; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n_; ++c) {
            int v = mul(r, c);
            if (seen[v]) throw NotAGroup("not-latin-square", "row " + std::to_string(r));
            seen[v] = 1;
        }
    }
    for (int c = 0; c < n_; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < n_; ++r) {
            int v = mul(r, c);
            if (seen[v]) throw NotAGroup("not-latin-square", "column " + std::to_string(c));
            seen[v] = 1;
        }
    }

    if (n_ <= kFullAssocCheckLimit) {
        assoc_check_ = AssocCheck::Full;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw NotAGroup("not-associative",
                                        "triple (" + std::to_string(a) + "," + std::to_string(b) +
                                            "," + std::to_string(c) + ")");
    } else {
        assoc_check_ = AssocCheck::Sampled;
        std::mt19937_64 rng(0x9E3779B97F4A7C15ull ^ std::uint64_t(n_));
        std::uniform_int_distribution<int> dist(0, n_ - 1);
        long long samples = 10ll * n_ * n_;
        for (long long i = 0; i < samples; ++i) {
            int a = dist(rng), b = dist(rng), c = dist(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw NotAGroup("not-associative",
                                "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + ")");
        }
    }

    inverse_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) { inverse_[a] = b; break; }
    for (int a = 0; a < n_; ++a)
        if (inverse_[a] < 0 || mul(inverse_[a], a) != 0)
            throw NotAGroup("not-latin-square", "no two-sided inverse for " + std::to_string(a));

    element_orders_.assign(n_, 1);
    for (int x = 1; x < n_; ++x) {
        int y = x, k = 1;
        while (y != 0) { y = mul(y, x); ++k; }
        element_orders_[x] = k;
    }
}

Group Group::from_cayley_table(const std::vector<std::vector<int>>& table, std::string name) {
    int n = int(table.size());
    if (n < 1) throw NotAGroup("not-latin-square", "empty table");
    for (const auto& row : table)
        if (int(row.size()) != n) throw NotAGroup("not-latin-square", "table is not square");

    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            if (table[cand][x] < 0 || table[cand][x] >= n || table[x][cand] < 0 ||
                table[x][cand] >= n)
                throw NotAGroup("not-latin-square", "entry out of range");
            ok = table[cand][x] == x && table[x][cand] == x;
        }
        if (ok) e = cand;
    }
    if (e < 0) throw NotAGroup("no-identity", "no two-sided identity element");

    std::vector<int> perm(n);  // old index -> new index
    std::iota(perm.begin(), perm.end(), 0);
    if (e != 0) std::swap(perm[0], perm[e]);

    std::vector<int> flat(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            flat[std::size_t(perm[a]) * n + perm[b]] = perm[table[a][b]];

    Group g = group_from_table_unchecked(n, std::move(flat), std::move(name));
    if (e != 0) g.relabeling_ = perm;
    return g;
}

int Group::power(int x, long long k) const {
    if (k < 0) return power(inverse(x), -k);
    int acc = 0, base = x;
    while (k) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

int Group::exponent() const {
    long long e = 1;
    for (int x = 0; x < n_; ++x) e = std::lcm(e, (long long)element_orders_[x]);
    return int(e);
}

bool Group::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool Group::is_cyclic() const {
    for (int x = 0; x < n_; ++x)
        if (element_orders_[x] == n_) return true;
    return false;
}

std::optional<int> Group::is_p_group() const {
    auto f = factorize(n_);
    if (f.factors.size() != 1) return std::nullopt;
    return int(f.factors[0].first);
}

SubgroupSet Group::center() const {
    Bitset b(n_);
    for (int x = 0; x < n_; ++x) {
        bool central = true;
        for (int y = 0; y < n_ && central; ++y) central = mul(x, y) == mul(y, x);
        if (central) b.set(x);
    }
    return SubgroupSet(n_, b);
}

SubgroupSet Group::centralizer(const SubgroupSet& s) const {
    auto members = s.indices();
    Bitset b(n_);
    for (int x = 0; x < n_; ++x) {
        bool ok = true;
        for (int m : members)
            if (mul(x, m) != mul(m, x)) { ok = false; break; }
        if (ok) b.set(x);
    }
    return SubgroupSet(n_, b);
}

SubgroupSet Group::derived_subgroup() const { return derived_of(*this, full_subgroup(*this)); }

bool Group::is_solvable() const {
    SubgroupSet s = full_subgroup(*this);
    while (true) {
        SubgroupSet d = derived_of(*this, s);
        if (d.size() == 1) return true;
        if (d.size() == s.size()) return false;
        s = d;
    }
}

SubgroupSet sylow_subgroup_of(const Group& g, long long p);  // subgroup.cpp

bool Group::is_nilpotent() const {
    for (auto [p, e] : factorize(n_).factors) {
        (void)e;
        if (!is_normal(*this, sylow_subgroup_of(*this, p))) return false;
    }
    return true;
}

int element_order_by_powers(const Group& g, int x) {
    int y = x, k = 1;
    while (y != Group::identity) { y = g.mul(y, x); ++k; }
    return k;
}

// ---------------------------------------------------------------------------
// builders

Group trivial_group() { return group_from_table_unchecked(1, {0}, "C1"); }

Group cyclic(int n) {
    if (n < 1) throw BadParameters("cyclic order must be >= 1");
    std::vector<int> flat(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat[std::size_t(a) * n + b] = (a + b) % n;
    return group_from_table_unchecked(n, std::move(flat), "C" + std::to_string(n));
}

Group elementary_abelian(int p, int rank) {
    if (!is_prime(p)) throw NotPrime(p);
    if (rank < 1) throw BadParameters("rank must be >= 1");
    long long n = 1;
    for (int i = 0; i < rank; ++i) {
        n *= p;
        if (std::size_t(n) > kDefaultBuildCap) throw ClosureTooLarge(kDefaultBuildCap);
    }
    // element index = sum of digit_i * p^i (little-endian digit vector)
    int nn = int(n);
    std::vector<int> flat(std::size_t(nn) * nn);
    for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b) {
            int x = a, y = b, w = 1, s = 0;
            for (int i = 0; i < rank; ++i) {
                s += ((x % p + y % p) % p) * w;
                x /= p; y /= p; w *= p;
            }
            flat[std::size_t(a) * nn + b] = s;
        }
    return group_from_table_unchecked(
        nn, std::move(flat), "EA(" + std::to_string(p) + "," + std::to_string(rank) + ")");
}

Group dihedral(int m) {
    if (m < 1) throw BadParameters("dihedral parameter must be >= 1 (order 2m)");
    int n = 2 * m;
    // element (i, j) = r^i s^j, index i + j*m;  s r = r^-1 s
    auto idx = [m](int i, int j) { return i + j * m; };
    std::vector<int> flat(std::size_t(n) * n);
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = j1 ? ((i1 - i2) % m + m) % m : (i1 + i2) % m;
                    flat[std::size_t(idx(i1, j1)) * n + idx(i2, j2)] = idx(i, j1 ^ j2);
                }
    return group_from_table_unchecked(n, std::move(flat), "D(" + std::to_string(m) + ")");
}

namespace {
bool power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }
}  // namespace

Group generalized_quaternion(int order) {
    if (!power_of_two(order) || order < 8)
        throw BadParameters("generalized quaternion order must be 2^n with n >= 3");
    int half = order / 2;            // order of x
    int quarter = order / 4;         // x^(2^(n-2)) = y^2
    auto idx = [half](int i, int j) { return i + j * half; };
    std::vector<int> flat(std::size_t(order) * order);
    for (int i1 = 0; i1 < half; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < half; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // (x^i1 y^j1)(x^i2 y^j2); y x = x^-1 y, y^2 = x^quarter
                    int i = j1 ? ((i1 - i2) % half + half) % half : (i1 + i2) % half;
                    if (j1 && j2) i = (i + quarter) % half;
                    flat[std::size_t(idx(i1, j1)) * order + idx(i2, j2)] = idx(i, j1 ^ j2);
                }
    return group_from_table_unchecked(order, std::move(flat), "Q(" + std::to_string(order) + ")");
}

Group semidihedral(int order) {
    if (!power_of_two(order) || order < 16)
        throw BadParameters("semidihedral order must be 2^n with n >= 4");
    int half = order / 2;
    int t = order / 4 - 1;  // y^-1 x y = x^t
    auto idx = [half](int i, int j) { return i + j * half; };
    std::vector<int> flat(std::size_t(order) * order);
    for (int i1 = 0; i1 < half; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < half; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = j1 ? int((i1 + (long long)i2 * t) % half) : (i1 + i2) % half;
                    flat[std::size_t(idx(i1, j1)) * order + idx(i2, j2)] = idx(i, j1 ^ j2);
                }
    return group_from_table_unchecked(order, std::move(flat), "SD(" + std::to_string(order) + ")");
}

Group modular_group(int n, int p) {
    if (!is_prime(p)) throw NotPrime(p);
    if (n < 3) throw BadParameters("M_n(p) requires n >= 3");
    long long ord = 1;
    for (int i = 0; i < n; ++i) {
        ord *= p;
        if (std::size_t(ord) > kDefaultBuildCap) throw ClosureTooLarge(kDefaultBuildCap);
    }
    long long yord = ord / p;        // order of y = p^(n-1)
    long long t = yord / p + 1;      // x^-1 y x = y^(1 + p^(n-2))
    int nn = int(ord);
    // element (a, b) = x^a y^b, index a*yord + b;  y^b x^c = x^c y^(b * t^c)
    auto idx = [yord](long long a, long long b) { return int(a * yord + b); };
    std::vector<long long> tpow(p);
    tpow[0] = 1;
    for (int c = 1; c < p; ++c) tpow[c] = (tpow[c - 1] * t) % yord;
    std::vector<int> flat(std::size_t(nn) * nn);
    for (long long a1 = 0; a1 < p; ++a1)
        for (long long b1 = 0; b1 < yord; ++b1)
            for (long long a2 = 0; a2 < p; ++a2)
                for (long long b2 = 0; b2 < yord; ++b2) {
                    long long a = (a1 + a2) % p;
                    long long b = (b1 * tpow[a2] + b2) % yord;
                    flat[std::size_t(idx(a1, b1)) * nn + idx(a2, b2)] = idx(a, b);
                }
    return group_from_table_unchecked(
        nn, std::move(flat), "M(" + std::to_string(n) + "," + std::to_string(p) + ")");
}

Group direct_product(const Group& a, const Group& b, std::size_t cap) {
    std::size_t n = std::size_t(a.order()) * b.order();
    if (n > cap) throw ClosureTooLarge(cap);
    int nn = int(n), nb = b.order();
    std::vector<int> flat(n * n);
    for (int a1 = 0; a1 < a.order(); ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
            for (int a2 = 0; a2 < a.order(); ++a2)
                for (int b2 = 0; b2 < nb; ++b2)
                    flat[std::size_t(a1 * nb + b1) * nn + (a2 * nb + b2)] =
                        a.mul(a1, a2) * nb + b.mul(b1, b2);
    std::string name = a.name().empty() || b.name().empty() ? "" : a.name() + " x " + b.name();
    return group_from_table_unchecked(nn, std::move(flat), std::move(name));
}

Group semidirect_product(const Group& n, const Group& h,
                         const std::vector<std::vector<int>>& action, bool* action_trivial,
                         std::size_t cap) {
    std::size_t total = std::size_t(n.order()) * h.order();
    if (total > cap) throw ClosureTooLarge(cap);
    if (int(action.size()) != h.order())
        throw BadParameters("action must supply one automorphism per element of H");

    for (int x = 0; x < n.order(); ++x)
        if (action[Group::identity][x] != x)
            throw NotAnAutomorphism(Group::identity, "identity of H must act as the identity map");

    for (int hh = 0; hh < h.order(); ++hh) {
        const auto& phi = action[hh];
        if (int(phi.size()) != n.order())
            throw NotAnAutomorphism(hh, "map has wrong size");
        std::vector<char> hit(n.order(), 0);
        for (int x = 0; x < n.order(); ++x) {
            if (phi[x] < 0 || phi[x] >= n.order() || hit[phi[x]])
                throw NotAnAutomorphism(hh, "not a bijection at " + std::to_string(x));
            hit[phi[x]] = 1;
        }
        for (int a = 0; a < n.order(); ++a)
            for (int b = 0; b < n.order(); ++b)
                if (phi[n.mul(a, b)] != n.mul(phi[a], phi[b]))
                    throw NotAnAutomorphism(
                        hh, "pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    for (int h1 = 0; h1 < h.order(); ++h1)
        for (int h2 = 0; h2 < h.order(); ++h2) {
            const auto& composed = action[h.mul(h1, h2)];
            for (int x = 0; x < n.order(); ++x)
                if (composed[x] != action[h1][action[h2][x]])
                    throw NotAHomomorphism(h1, h2);
        }

    bool trivial = true;
    for (int hh = 0; hh < h.order() && trivial; ++hh)
        for (int x = 0; x < n.order(); ++x)
            if (action[hh][x] != x) { trivial = false; break; }
    if (action_trivial) *action_trivial = trivial;

    int nn = int(total), nh = h.order();
    auto idx = [nh](int a, int b) { return a * nh + b; };
    std::vector<int> flat(total * total);
    for (int n1 = 0; n1 < n.order(); ++n1)
        for (int h1 = 0; h1 < nh; ++h1)
            for (int n2 = 0; n2 < n.order(); ++n2)
                for (int h2 = 0; h2 < nh; ++h2)
                    flat[std::size_t(idx(n1, h1)) * nn + idx(n2, h2)] =
                        idx(n.mul(n1, action[h1][n2]), h.mul(h1, h2));
    return group_from_table_unchecked(nn, std::move(flat), "");
}

QuotientResult quotient_group(const Group& g, const SubgroupSet& n) {
    assert_valid_subgroup(g, n);
    auto members = n.indices();
    for (int x = 0; x < g.order(); ++x)
        for (int m : members)
            if (!n.contains(g.conjugate(x, m))) throw NotNormal(x, m);

    int q = g.order() / n.size();
    std::vector<int> proj(g.order(), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.order(); ++x) {
        if (proj[x] >= 0) continue;
        int id = int(reps.size());
        reps.push_back(x);  // x is the least element of its coset (scan order)
        for (int m : members) proj[g.mul(x, m)] = id;
    }
    std::vector<int> flat(std::size_t(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) flat[std::size_t(i) * q + j] = proj[g.mul(reps[i], reps[j])];
    Group out = group_from_table_unchecked(q, std::move(flat),
                                           g.name().empty() ? "" : g.name() + "/N");
    return QuotientResult{std::move(out), std::move(proj)};
}

Group Group::from_permutation_generators(int degree, const std::vector<std::vector<int>>& gens,
                                         std::size_t cap, std::string name) {
    if (degree < 1) throw BadParameters("degree must be >= 1");
    for (const auto& p : gens) {
        if (int(p.size()) != degree) throw BadParameters("generator has wrong degree");
        std::vector<char> hit(degree, 0);
        for (int v : p) {
            if (v < 0 || v >= degree || hit[v]) throw BadParameters("not a permutation");
            hit[v] = 1;
        }
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems;
    elems.push_back(id);
    index[id] = 0;
    // BFS in generator order; product a*b applies a first, then b.
    auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r(degree);
        for (int i = 0; i < degree; ++i) r[i] = b[a[i]];
        return r;
    };
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& gperm : gens) {
            auto next = compose(elems[i], gperm);
            if (!index.count(next)) {
                if (elems.size() + 1 > cap) throw ClosureTooLarge(cap);
                index[next] = int(elems.size());
                elems.push_back(std::move(next));
            }
        }
    }
    int n = int(elems.size());
    std::vector<int> flat(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            flat[std::size_t(a) * n + b] = index.at(compose(elems[a], elems[b]));
    return group_from_table_unchecked(n, std::move(flat), std::move(name));
}

// ---------------------------------------------------------------------------
// text formats

std::vector<int> parse_cycles(const std::string& text, int degree) {
    std::vector<int> perm(degree);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip_ws();
    if (i == text.size() || text.compare(i, 2, "id") == 0) return perm;
    std::vector<char> moved(degree, 0);
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw BadParameters("expected '(' in cycle notation");
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ')') { ++i; break; }
            std::size_t j = i;
            while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
            if (j == i) throw BadParameters("expected point index in cycle");
            int v = std::stoi(text.substr(i, j - i));
            if (v < 0 || v >= degree) throw BadParameters("cycle point out of range");
            if (moved[v]) throw BadParameters("point repeated across cycles");
            moved[v] = 1;
            cyc.push_back(v);
            i = j;
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i;
        }
        for (std::size_t k = 0; k + 1 < cyc.size(); ++k) perm[cyc[k]] = cyc[k + 1];
        if (!cyc.empty()) perm[cyc.back()] = cyc.front();
    }
    return perm;
}

std::string format_cycles(const std::vector<int>& perm) {
    std::string out;
    std::vector<char> done(perm.size(), 0);
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (done[s] || perm[s] == int(s)) continue;
        out += "(";
        std::size_t c = s;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(c);
            done[c] = 1;
            first = false;
            c = perm[c];
        } while (c != s);
        out += ")";
    }
    return out.empty() ? "id" : out;
}

namespace {
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace((unsigned char)c)) { blank = false; break; }
        if (!blank) lines.push_back(line);
    }
    return lines;
}
}  // namespace

Group read_cayley_table_text(const std::string& text, std::string name) {
    auto lines = content_lines(text);
    if (lines.empty()) throw BadParameters("empty Cayley table file");
    int n = std::stoi(lines[0]);
    if (n < 1 || int(lines.size()) != n + 1)
        throw BadParameters("Cayley table file must have n rows after the order line");
    std::vector<std::vector<int>> table(n);
    for (int r = 0; r < n; ++r) {
        std::istringstream row(lines[r + 1]);
        int v;
        while (row >> v) table[r].push_back(v);
        if (int(table[r].size()) != n) throw BadParameters("row has wrong length");
    }
    return Group::from_cayley_table(table, std::move(name));
}

std::string write_cayley_table_text(const Group& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (int r = 0; r < g.order(); ++r) {
        for (int c = 0; c < g.order(); ++c) {
            if (c) out += ' ';
            out += std::to_string(g.mul(r, c));
        }
        out += '\n';
    }
    return out;
}

Group read_permutation_text(const std::string& text, std::size_t cap, std::string name) {
    auto lines = content_lines(text);
    if (lines.empty()) throw BadParameters("empty permutation file");
    int degree = std::stoi(lines[0]);
    std::vector<std::vector<int>> gens;
    for (std::size_t i = 1; i < lines.size(); ++i) gens.push_back(parse_cycles(lines[i], degree));
    return Group::from_permutation_generators(degree, gens, cap, std::move(name));
}

}  // namespace pfg

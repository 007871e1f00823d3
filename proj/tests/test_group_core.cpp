#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "pfg/group.hpp"
#include "pfg/subgroup.hpp"

using namespace pfg;

namespace {

int count_of_order(const Group& g, int k) {
    int c = 0;
    for (int x = 0; x < g.order(); ++x)
        if (g.element_order(x) == k) ++c;
    return c;
}

// Independent brute-force center, used as the oracle against Group::center.
std::vector<int> brute_center(const Group& g) {
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (int y = 0; y < g.order() && ok; ++y) ok = g.mul(x, y) == g.mul(y, x);
        if (ok) out.push_back(x);
    }
    return out;
}

Group make_a5() {
    return Group::from_permutation_generators(5, {parse_cycles("(0 1 2 3 4)", 5),
                                                  parse_cycles("(0 1 2)", 5)});
}
Group make_s4() {
    return Group::from_permutation_generators(4, {parse_cycles("(0 1 2 3)", 4),
                                                  parse_cycles("(0 1)", 4)});
}

}  // namespace

TEST_CASE("from_cayley_table accepts the trivial group and C2") {
    Group t = Group::from_cayley_table({{0}});
    CHECK(t.order() == 1);
    Group c2 = Group::from_cayley_table({{0, 1}, {1, 0}});
    CHECK(c2.order() == 2);
    CHECK(c2.element_order(1) == 2);
}

TEST_CASE("from_cayley_table rejects a non-associative Latin square of order 6") {
    // C6 with one intercalate swapped: rows/cols 1 and 4, values 2 <-> 5.
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) t[a][b] = (a + b) % 6;
    std::swap(t[1][1], t[1][4]);
    std::swap(t[4][1], t[4][4]);

    // oracle: still a Latin square with identity 0, but some triple fails
    for (int r = 0; r < 6; ++r) {
        std::vector<char> seen(6, 0);
        for (int c = 0; c < 6; ++c) seen[t[r][c]] = 1;
        CHECK(std::count(seen.begin(), seen.end(), 1) == 6);
    }
    for (int x = 0; x < 6; ++x) {
        CHECK(t[0][x] == x);
        CHECK(t[x][0] == x);
    }
    bool violating = false;
    for (int a = 0; a < 6 && !violating; ++a)
        for (int b = 0; b < 6 && !violating; ++b)
            for (int c = 0; c < 6 && !violating; ++c)
                violating = t[t[a][b]][c] != t[a][t[b][c]];
    REQUIRE(violating);

    CHECK_THROWS_AS(Group::from_cayley_table(t), NotAGroup);
    try {
        Group::from_cayley_table(t);
    } catch (const NotAGroup& e) {
        CHECK(e.reason == "not-associative");
    }
}

TEST_CASE("from_cayley_table relabels a displaced identity to index 0") {
    // C3 written with identity at index 2
    std::vector<std::vector<int>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
    Group g = Group::from_cayley_table(t);
    CHECK(g.order() == 3);
    CHECK(g.relabeling().has_value());
    CHECK(g.mul(0, 1) == 1);
}

TEST_CASE("permutation closure sizes: S3, S4, A5") {
    Group s3 = Group::from_permutation_generators(3, {parse_cycles("(0 1 2)", 3),
                                                      parse_cycles("(0 1)", 3)});
    CHECK(s3.order() == 6);
    CHECK(make_s4().order() == 24);
    CHECK(make_a5().order() == 60);
    CHECK_THROWS_AS(Group::from_permutation_generators(
                        5, {parse_cycles("(0 1 2 3 4)", 5), parse_cycles("(0 1 2)", 5)}, 30),
                    ClosureTooLarge);
}

TEST_CASE("parametric builders match their presentations") {
    Group q8 = generalized_quaternion(8);
    CHECK(q8.order() == 8);
    CHECK(count_of_order(q8, 2) == 1);

    Group m35 = modular_group(3, 5);
    CHECK(m35.order() == 125);
    CHECK_FALSE(m35.is_abelian());
    CHECK(m35.exponent() == 25);

    Group d8 = dihedral(4);
    CHECK(d8.order() == 8);
    CHECK(count_of_order(d8, 4) == 2);
    CHECK(count_of_order(d8, 2) == 5);

    Group sd16 = semidihedral(16);
    CHECK(sd16.order() == 16);
    CHECK(count_of_order(sd16, 8) == 4);
    CHECK(count_of_order(sd16, 2) == 5);  // 2^(n-2)+1 = 5

    Group q16 = generalized_quaternion(16);
    CHECK(count_of_order(q16, 2) == 1);

    Group m42 = modular_group(4, 2);
    CHECK(m42.order() == 16);
    CHECK(count_of_order(m42, 2) == 3);

    CHECK(elementary_abelian(3, 2).exponent() == 3);

    CHECK_THROWS_AS(dihedral(0), BadParameters);
    CHECK_THROWS_AS(generalized_quaternion(12), BadParameters);
    CHECK_THROWS_AS(generalized_quaternion(4), BadParameters);
    CHECK_THROWS_AS(semidihedral(8), BadParameters);
    CHECK_THROWS_AS(modular_group(2, 3), BadParameters);
    CHECK_THROWS_AS(elementary_abelian(4, 1), NotPrime);
}

TEST_CASE("direct products") {
    Group g = direct_product(cyclic(3), cyclic(9));
    CHECK(g.order() == 27);
    CHECK(g.is_abelian());
    CHECK(g.exponent() == 9);

    Group c2 = direct_product(cyclic(2), trivial_group());
    CHECK(c2.order() == 2);

    Group a4 = Group::from_permutation_generators(4, {parse_cycles("(0 1 2)", 4),
                                                      parse_cycles("(1 2 3)", 4)});
    REQUIRE(a4.order() == 12);
    Group prod = direct_product(cyclic(2), a4);
    auto z = brute_center(prod);
    CHECK(z.size() == 2);
    CHECK(prod.center().size() == 2);

    CHECK_THROWS_AS(direct_product(cyclic(200), cyclic(200)), ClosureTooLarge);
}

TEST_CASE("direct product is abelian iff both factors are") {
    Group s3 = dihedral(3);
    CHECK(direct_product(cyclic(4), cyclic(6)).is_abelian());
    CHECK_FALSE(direct_product(s3, cyclic(5)).is_abelian());
    CHECK_FALSE(direct_product(cyclic(5), s3).is_abelian());
}

namespace {
// power-map action of a cyclic H on an abelian N: generator h_1 acts as x -> x^k
std::vector<std::vector<int>> power_action(const Group& n, int horder, long long k) {
    std::vector<std::vector<int>> act(horder, std::vector<int>(n.order()));
    long long kp = 1;
    for (int j = 0; j < horder; ++j) {
        for (int x = 0; x < n.order(); ++x) act[j][x] = n.power(x, kp);
        kp *= k;
    }
    return act;
}
}  // namespace

TEST_CASE("semidirect products") {
    Group c3 = cyclic(3);
    bool trivial_flag = true;
    Group s3 = semidirect_product(c3, cyclic(2), power_action(c3, 2, 2), &trivial_flag);
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK_FALSE(trivial_flag);

    Group c7 = cyclic(7);
    Group g28 = semidirect_product(c7, cyclic(4), power_action(c7, 4, 6));
    CHECK(g28.order() == 28);
    CHECK_FALSE(g28.is_abelian());
    CHECK(g28.center().size() == 2);

    Group c5 = cyclic(5);
    Group frob20 = semidirect_product(c5, cyclic(4), power_action(c5, 4, 2));
    CHECK(frob20.order() == 20);
    CHECK(frob20.center().size() == 1);

    // trivial action gives the direct product
    Group prod = semidirect_product(c3, cyclic(2), power_action(c3, 2, 1), &trivial_flag);
    CHECK(trivial_flag);
    CHECK(prod.is_abelian());
    CHECK(prod.is_cyclic());

    // x -> x^2 on C5 has order 4, not 2: not a homomorphism from C2
    CHECK_THROWS_AS(semidirect_product(c5, cyclic(2), power_action(c5, 2, 2)),
                    NotAHomomorphism);
    // x -> x^0 is not a bijection
    std::vector<std::vector<int>> bad(2, std::vector<int>(5, 0));
    for (int x = 0; x < 5; ++x) bad[0][x] = x;
    CHECK_THROWS_AS(semidirect_product(c5, cyclic(2), bad), NotAnAutomorphism);
}

TEST_CASE("elementary structural queries") {
    CHECK(generalized_quaternion(8).center().size() == 2);
    CHECK_FALSE(make_a5().is_solvable());
    CHECK(make_s4().is_solvable());
    CHECK(dihedral(6).is_solvable());
    CHECK(generalized_quaternion(16).is_nilpotent());
    CHECK_FALSE(dihedral(3).is_nilpotent());
    CHECK(direct_product(cyclic(4), cyclic(3)).is_nilpotent());
    CHECK(cyclic(12).is_cyclic());
    CHECK_FALSE(elementary_abelian(2, 2).is_cyclic());
    CHECK(elementary_abelian(5, 1).is_p_group().value() == 5);
    CHECK_FALSE(cyclic(6).is_p_group().has_value());

    Group a5 = make_a5();
    SubgroupSet derived = a5.derived_subgroup();
    CHECK(derived.size() == 60);  // A5 is perfect

    Group s4 = make_s4();
    CHECK(s4.derived_subgroup().size() == 12);
}

TEST_CASE("element orders satisfy Lagrange and match the power oracle") {
    for (const Group& g : {dihedral(6), generalized_quaternion(16), make_s4(),
                           modular_group(3, 3), semidihedral(16)}) {
        for (int x = 0; x < g.order(); ++x) {
            CHECK(g.order() % g.element_order(x) == 0);
            CHECK(g.element_order(x) == element_order_by_powers(g, x));
        }
    }
}

TEST_CASE("quotient groups") {
    Group q8 = generalized_quaternion(8);
    auto [v4, proj] = quotient_group(q8, q8.center());
    CHECK(v4.order() == 4);
    CHECK(v4.exponent() == 2);  // Q8/Z = C2 x C2

    Group s4 = make_s4();
    auto a4sub = s4.derived_subgroup();
    auto q = quotient_group(s4, a4sub);
    CHECK(q.group.order() == 2);

    // projection is a surjective homomorphism
    for (int a = 0; a < s4.order(); ++a)
        for (int b = 0; b < s4.order(); ++b)
            CHECK(q.projection[s4.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b]));

    // quotient by a non-normal subgroup fails with a witness
    Group s3 = dihedral(3);
    SubgroupSet refl = generated_by(s3, {3});  // a reflection
    REQUIRE(refl.size() == 2);
    CHECK_THROWS_AS(quotient_group(s3, refl), NotNormal);
}

TEST_CASE("quotient of C2 x A4 by its center") {
    Group a4 = Group::from_permutation_generators(4, {parse_cycles("(0 1 2)", 4),
                                                      parse_cycles("(1 2 3)", 4)});
    Group g = direct_product(cyclic(2), a4);
    auto res = quotient_group(g, g.center());
    CHECK(res.group.order() == 12);
    CHECK_FALSE(res.group.is_abelian());
    CHECK(res.group.center().size() == 1);  // matches A4; full isomorphism checked elsewhere
}

TEST_CASE("subgroup closure and induced tables") {
    Group s4 = make_s4();
    SubgroupSet whole = generated_by(s4, {1, 2, 3});
    CHECK(whole.size() <= 24);
    SubgroupSet triv = trivial_subgroup(s4);
    CHECK(triv.size() == 1);
    CHECK(is_closed(s4, full_subgroup(s4).members()));

    Group d8 = dihedral(4);
    SubgroupSet rot = generated_by(d8, {1});
    REQUIRE(rot.size() == 4);
    Group c4 = induced_group(d8, rot);
    CHECK(c4.is_cyclic());
    CHECK(is_normal(d8, rot));
}

TEST_CASE("sylow growth helper") {
    Group s4 = make_s4();
    auto p2 = sylow_subgroup_of(s4, 2);
    CHECK(p2.size() == 8);
    auto p3 = sylow_subgroup_of(s4, 3);
    CHECK(p3.size() == 3);
}

TEST_CASE("cycle notation round trip") {
    auto p = parse_cycles("(0 1 2)(3 4)", 5);
    CHECK(p[0] == 1);
    CHECK(p[2] == 0);
    CHECK(p[3] == 4);
    CHECK(format_cycles(p) == "(0 1 2)(3 4)");
    CHECK(format_cycles(parse_cycles("id", 4)) == "id");
}

TEST_CASE("cayley and permutation text formats") {
    Group d8 = dihedral(4);
    std::string text = write_cayley_table_text(d8);
    Group back = read_cayley_table_text("# a dihedral group\n" + text);
    CHECK(back.order() == 8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) CHECK(back.mul(a, b) == d8.mul(a, b));

    Group a5 = read_permutation_text("5\n(0 1 2 3 4)\n(0 1 2)\n");
    CHECK(a5.order() == 60);
}

TEST_CASE("sampled associativity mode flags large tables") {
    Group big = cyclic(300);
    CHECK(big.assoc_check() == AssocCheck::Sampled);
    CHECK(cyclic(100).assoc_check() == AssocCheck::Full);
}

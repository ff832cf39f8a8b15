#include "test_util.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/weights.hpp"

using namespace zigzag;

TEST_SUITE("weights") {

TEST_CASE("bond_weight examples") {
    CHECK(bond_weight(WeightScheme::interface(), horizontal_bond_into({1, 0})) == poly({{2, 1}}));
    // K + L + 1 = 3, second branch: q^{6 - 6}
    CHECK(bond_weight(WeightScheme::rep1(1, 1), horizontal_bond_into({3, 0})) == LaurentPoly(1));
    CHECK(bond_weight(WeightScheme::rep2(), horizontal_bond_into({-2, 0})) == poly({{4, 1}}));
}

TEST_CASE("vertical bonds weigh one") {
    for (const auto& s : {WeightScheme::interface(), WeightScheme::rep1(2, 3), WeightScheme::rep2()})
        for (int i = -3; i <= 2; ++i)
            for (int j = -3; j <= 2; ++j)
                CHECK(bond_weight(s, vertical_bond_into({i, j})) == LaurentPoly(1));
}

TEST_CASE("rep1 branches") {
    const auto s = WeightScheme::rep1(2, 3); // top = 6
    CHECK(bond_weight(s, horizontal_bond_into({1, 0})) == poly({{2, 1}}));
    CHECK(bond_weight(s, horizontal_bond_into({1, 1})) == poly({{4, 1}})); // i+j = K: first branch
    CHECK(bond_weight(s, horizontal_bond_into({3, 0})) == poly({{6, 1}})); // 2(6-3)
    CHECK(bond_weight(s, horizontal_bond_into({4, 2})) == LaurentPoly(1));
    CHECK_THROWS_AS(bond_weight(s, horizontal_bond_into({4, 3})), OutOfDomain);
    CHECK_THROWS_AS(bond_weight(s, vertical_bond_into({4, 3})), OutOfDomain);
    CHECK_THROWS_AS(WeightScheme::rep1(-1, 0), PreconditionError);
}

TEST_CASE("interface and rep1 agree up to the K sphere") {
    for (int K = 0; K <= 4; ++K) {
        const auto rep1 = WeightScheme::rep1(K, 2);
        for (int i = 0; i <= K; ++i)
            for (int j = 0; i + j <= K; ++j)
                for (const auto& b : {horizontal_bond_into({i, j}), vertical_bond_into({i, j})})
                    CHECK(bond_weight(rep1, b) == bond_weight(WeightScheme::interface(), b));
    }
}

TEST_CASE("path_weight") {
    const auto s = WeightScheme::interface();
    CHECK(path_weight(s, parse_path("(0,0):HV")) == poly({{2, 1}}));
    CHECK(path_weight(s, parse_path("(0,0):VH")) == poly({{4, 1}}));
    for (const auto& scheme : {WeightScheme::interface(), WeightScheme::rep1(1, 1), WeightScheme::rep2()})
        CHECK(path_weight(scheme, parse_path("(0,0):VVV")) == LaurentPoly(1));
    CHECK(path_weight(s, parse_path("(3,3):")) == LaurentPoly(1));
    CHECK_THROWS_AS(path_weight(WeightScheme::rep1(0, 0), parse_path("(0,0):HH")), OutOfDomain);
}

TEST_CASE("weights are nonnegative monomials and multiplicative under concatenation") {
    const std::vector<std::pair<WeightScheme, Point>> cases = {
        {WeightScheme::interface(), {0, 0}},
        {WeightScheme::rep1(3, 2), {0, 0}},
        {WeightScheme::rep2(), {-3, -2}},
    };
    for (const auto& [s, start] : cases) {
        const Point end = start + Point{3, 3};
        for (const auto& p : enumerate_paths(start, end)) {
            const auto w = path_weight(s, p);
            REQUIRE(w.is_monomial());
            CHECK(w.terms().begin()->second == 1);
            CHECK(w.low_degree() >= 0);
            // split after every prefix
            const auto pts = p.points();
            for (std::size_t cut = 0; cut <= p.length(); ++cut) {
                const LatticePath head{start, {p.steps().begin(), p.steps().begin() + static_cast<long>(cut)}};
                const LatticePath tail{pts[cut], {p.steps().begin() + static_cast<long>(cut), p.steps().end()}};
                CHECK(path_weight(s, head.concat(tail)) == path_weight(s, head) * path_weight(s, tail));
            }
        }
    }
}

TEST_CASE("custom table") {
    CustomTable t;
    t.table[horizontal_bond_into({1, 0})] = poly({{2, 3}});
    t.fallback = poly({{1, 1}});
    const auto s = WeightScheme::custom(t);
    CHECK(bond_weight(s, horizontal_bond_into({1, 0})) == poly({{2, 3}}));
    CHECK(bond_weight(s, vertical_bond_into({1, 1})) == poly({{1, 1}}));
    CHECK(s.name() == "custom");
}

TEST_CASE("scheme names") {
    CHECK(parse_scheme("interface").name() == "interface");
    CHECK(parse_scheme("rep1", 2, 1).name() == "rep1(K=2,L=1)");
    CHECK(parse_scheme("rep2").name() == "rep2");
    CHECK_THROWS_AS(parse_scheme("rep3"), PreconditionError);
}

} // TEST_SUITE

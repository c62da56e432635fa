#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "qflie/catalog.hpp"

using namespace qflie;

namespace {

Vec unit(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i - 1] = Rat(1);
    return v;
}

struct Rng {
    std::uint64_t s;
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    Rat rat() { return Rat(long(next() % 11) - 5, 1 + long(next() % 4)); }
    Vec vec(std::size_t n) {
        Vec v(n);
        for (auto& x : v) x = rat();
        return v;
    }
};

}  // namespace

TEST_CASE("bracket on g1n1 n=5 basis pairs") {
    LieAlgebra alg = make_algebra(family_id(Family::G1N1, 5));
    CHECK(alg.bracket(unit(5, 1), unit(5, 2)) == unit(5, 3));
    CHECK(alg.bracket(unit(5, 2), unit(5, 3)) == unit(5, 5));  // sign (-1)^2 = +1
    Vec neg = alg.bracket(unit(5, 3), unit(5, 2));
    Vec e5 = unit(5, 5);
    for (std::size_t m = 0; m < 5; ++m) CHECK(neg[m] == -e5[m]);
    CHECK(alg.bracket(unit(5, 1), unit(5, 1)) == Vec(5));
    CHECK_THROWS_AS(alg.bracket(unit(5, 1), Vec(4)), std::invalid_argument);
}

TEST_CASE("bracket is bilinear and antisymmetric") {
    LieAlgebra alg = make_algebra(family_id(Family::G2_9));
    Rng rng{11};
    for (int t = 0; t < 25; ++t) {
        Vec x = rng.vec(9), y = rng.vec(9), z = rng.vec(9);
        Rat c = rng.rat();
        Vec xy = alg.bracket(x, y), yx = alg.bracket(y, x);
        for (std::size_t m = 0; m < 9; ++m) CHECK(xy[m] == -yx[m]);
        Vec xx = alg.bracket(x, x);
        for (const Rat& v : xx) CHECK(v.is_zero());
        // bracket(x + c z, y) == bracket(x, y) + c bracket(z, y)
        Vec xcz(9);
        for (std::size_t m = 0; m < 9; ++m) xcz[m] = x[m] + c * z[m];
        Vec lhs = alg.bracket(xcz, y), zy = alg.bracket(z, y);
        for (std::size_t m = 0; m < 9; ++m) CHECK(lhs[m] == xy[m] + c * zy[m]);
    }
}

TEST_CASE("jacobi_check passes on catalog tables and trivially in dim 2") {
    CHECK(jacobi_check(make_algebra(family_id(Family::G1N1, 5))).empty());
    CHECK(jacobi_check(make_algebra(family_id(Family::G3N1, 9))).empty());

    LieAlgebra two(2, "dim2");
    two.add_bracket(1, 2, 1, Rat(1));
    two.add_bracket(1, 2, 2, Rat(1));
    CHECK(jacobi_check(two).empty());  // no triple with three distinct indices
}

TEST_CASE("jacobi_check reports violating triples") {
    LieAlgebra bad(3, "bad");
    bad.add_bracket(1, 2, 2, Rat(1));
    bad.add_bracket(1, 3, 3, Rat(1));
    bad.add_bracket(2, 3, 1, Rat(1));
    auto violations = jacobi_check(bad);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].i == 1);
    CHECK(violations[0].j == 2);
    CHECK(violations[0].k == 3);
    CHECK(violations[0].residual == Vec{Rat(2), Rat(0), Rat(0)});
}

TEST_CASE("lower central series") {
    LowerCentralSeries s = lower_central_series(make_algebra(family_id(Family::G1N1, 5)));
    CHECK(s.dims == std::vector<std::size_t>{5, 3, 2, 0});
    REQUIRE(s.nilindex.has_value());
    CHECK(*s.nilindex == 4);

    LieAlgebra abelian(3, "abelian3");
    LowerCentralSeries a = lower_central_series(abelian);
    CHECK(a.dims == std::vector<std::size_t>{3, 0});
    CHECK(*a.nilindex == 2);

    LowerCentralSeries g27 = lower_central_series(make_algebra(family_id(Family::G2N1, 7)));
    CHECK(*g27.nilindex == 6);

    // non-nilpotent: [e1,e2] = e2 stabilizes at dim 1
    LieAlgebra aff(2, "aff");
    aff.add_bracket(1, 2, 2, Rat(1));
    LowerCentralSeries ns = lower_central_series(aff);
    CHECK_FALSE(ns.nilindex.has_value());
    CHECK(ns.dims.back() == 1);
}

TEST_CASE("center") {
    Subspace c = center(make_algebra(family_id(Family::G1N1, 5)));
    Subspace expected(5, {unit(5, 4), unit(5, 5)});
    CHECK(equal_span(c, expected));

    LieAlgebra abelian(3, "abelian3");
    CHECK(center(abelian).dim() == 3);

    // e6 is central in g2n1 n=7; cross-check against the bracket directly
    LieAlgebra g27 = make_algebra(family_id(Family::G2N1, 7));
    CHECK(center(g27).contains(unit(7, 6)));
    for (std::size_t i = 1; i <= 7; ++i)
        CHECK(g27.bracket(unit(7, 6), unit(7, i)) == Vec(7));

    Subspace c29 = center(make_algebra(family_id(Family::G2_9)));
    CHECK(equal_span(c29, Subspace(9, {unit(9, 8), unit(9, 9)})));
}

TEST_CASE("derived subalgebra of g1n1 n=5 is span{e3,e4,e5}") {
    Subspace l2 = derived_subalgebra(make_algebra(family_id(Family::G1N1, 5)));
    CHECK(equal_span(l2, Subspace(5, {unit(5, 3), unit(5, 4), unit(5, 5)})));
}

TEST_CASE("add_bracket normalizes orientation and prunes zeros") {
    LieAlgebra alg(4, "t");
    alg.add_bracket(3, 1, 2, Rat(1));  // stored as (1,3) -> -e2
    CHECK(alg.bracket(unit(4, 1), unit(4, 3)) == Vec{Rat(0), Rat(-1), Rat(0), Rat(0)});
    alg.add_bracket(1, 3, 2, Rat(1));  // cancels
    CHECK(alg.brackets().empty());
    CHECK_THROWS_AS(alg.add_bracket(2, 2, 1, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(alg.add_bracket(0, 1, 1, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(alg.add_bracket(1, 5, 1, Rat(1)), std::invalid_argument);
}

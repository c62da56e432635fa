#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "qflie/linalg.hpp"

using namespace qflie;

namespace {

// deterministic generator for property tests
struct Rng {
    std::uint64_t s;
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    long pick(long lo, long hi) { return lo + long(next() % std::uint64_t(hi - lo + 1)); }
    Rat rat(long bound = 9) { return Rat(pick(-bound, bound), pick(1, bound)); }
};

Mat from_rows(std::size_t rows, std::size_t cols, const std::vector<std::vector<long>>& e) {
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rat(e[r][c]);
    return m;
}

Vec vec(const std::vector<Rat>& v) { return v; }

}  // namespace

TEST_CASE("Rat canonical form and arithmetic") {
    CHECK(Rat(2, 6) == Rat(1, 3));
    CHECK(Rat(2, 6).str() == "1/3");
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(1, -2).denominator() == 2);
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(-4, 2).str() == "-2");
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(1, 2) * Rat(2, 3)) == Rat(1, 3));
    CHECK(Rat(3, 4).inverse() == Rat(4, 3));
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("Rat parse and serialization") {
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("-3/4") == Rat(-3, 4));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat::parse("-12") == Rat(-12));
    CHECK(Rat::parse("4/6") == Rat(2, 3));  // canonicalized on parse
    CHECK(Rat::parse("4/6").str() == "2/3");
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(" 1"), std::invalid_argument);
}

TEST_CASE("Rat exactness property: (a + b) - b == a") {
    Rng rng{2024};
    for (int t = 0; t < 500; ++t) {
        Rat a = rng.rat(50), b = rng.rat(50);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("rref: identity, zero, rank-1 dependence") {
    Rref r1 = rref(Mat::identity(3));
    CHECK(r1.matrix == Mat::identity(3));
    CHECK(r1.pivots == std::vector<std::size_t>{0, 1, 2});

    Rref r2 = rref(Mat(2, 3));
    CHECK(r2.matrix == Mat(2, 3));
    CHECK(r2.pivots.empty());

    Rref r3 = rref(from_rows(2, 2, {{2, 4}, {1, 2}}));
    CHECK(r3.matrix == from_rows(2, 2, {{1, 2}, {0, 0}}));
    CHECK(r3.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent on random matrices") {
    Rng rng{7};
    for (int t = 0; t < 40; ++t) {
        std::size_t rows = 1 + rng.next() % 5, cols = 1 + rng.next() % 5;
        Mat m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.rat(4);
        Rref once = rref(m);
        Rref twice = rref(once.matrix);
        CHECK(once.matrix == twice.matrix);
        CHECK(once.pivots == twice.pivots);
    }
}

TEST_CASE("nullspace: analytic cases") {
    CHECK(nullspace(Mat::identity(2)).dim() == 0);

    Subspace z = nullspace(Mat(2, 3));
    CHECK(z.dim() == 3);
    CHECK(z.basis()[0] == vec({Rat(1), Rat(0), Rat(0)}));
    CHECK(z.basis()[1] == vec({Rat(0), Rat(1), Rat(0)}));
    CHECK(z.basis()[2] == vec({Rat(0), Rat(0), Rat(1)}));

    Subspace s = nullspace(from_rows(2, 2, {{1, 2}, {2, 4}}));
    CHECK(s.dim() == 1);
    CHECK(s.basis()[0] == vec({Rat(1), Rat(-1, 2)}));
}

TEST_CASE("nullspace property: m v = 0 and rank-nullity") {
    Rng rng{99};
    for (int t = 0; t < 40; ++t) {
        std::size_t rows = 1 + rng.next() % 6, cols = 1 + rng.next() % 6;
        Mat m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng.next() % 3 != 0) m(r, c) = rng.rat(5);
        Subspace ns = nullspace(m);
        CHECK(rank(m) + ns.dim() == cols);
        for (const Vec& v : ns.basis()) {
            Vec image = m.apply(v);
            for (const Rat& x : image) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("equal_span") {
    Subspace a(2, {vec({Rat(1), Rat(0)})});
    Subspace b(2, {vec({Rat(2), Rat(0)})});
    Subspace c(2, {vec({Rat(0), Rat(1)})});
    Subspace full(2, {vec({Rat(1), Rat(1)}), vec({Rat(1), Rat(-1)})});
    Subspace full2(2, {vec({Rat(1), Rat(0)}), vec({Rat(0), Rat(1)})});
    CHECK(equal_span(a, b));
    CHECK_FALSE(equal_span(a, c));
    CHECK(equal_span(full, full2));
    Subspace other(3, {vec({Rat(1), Rat(0), Rat(0)})});
    CHECK_THROWS_AS(equal_span(a, other), std::invalid_argument);
}

TEST_CASE("Subspace membership") {
    Subspace s(3, {vec({Rat(1), Rat(0), Rat(1)}), vec({Rat(0), Rat(1), Rat(2)})});
    CHECK(s.contains(vec({Rat(2), Rat(3), Rat(8)})));
    CHECK_FALSE(s.contains(vec({Rat(0), Rat(0), Rat(1)})));
    CHECK(s.contains(vec({Rat(0), Rat(0), Rat(0)})));
    CHECK_THROWS_AS(s.contains(vec({Rat(1), Rat(0)})), std::invalid_argument);
}

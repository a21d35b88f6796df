#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "frieze/cartan.hpp"

using namespace frieze;

namespace {

bool is_symmetric_product(const IntMatrix& m, const std::vector<Value>& d)
{
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (d[i] * m[i][j] != d[j] * m[j][i]) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("standard matrices")
{
    CHECK(CartanMatrix::standard(Family::A, 2).entries() == IntMatrix{{2, -1}, {-1, 2}});
    CHECK(CartanMatrix::standard(Family::C, 2).entries() == IntMatrix{{2, -2}, {-1, 2}});
    CHECK(CartanMatrix::standard(Family::A, 1).entries() == IntMatrix{{2}});

    const auto c4 = CartanMatrix::standard(Family::C, 4);
    CHECK(c4(2, 3) == -2);
    CHECK(c4(3, 2) == -1);
    CHECK(c4(1, 2) == -1);
    CHECK(c4(0, 3) == 0);
    CHECK(c4.family() == Family::C);

    CHECK_THROWS_AS(CartanMatrix::standard(Family::A, 0), FriezeError);
    try {
        CartanMatrix::standard(Family::C, 1);
        FAIL("C_1 accepted");
    } catch (const FriezeError& e) {
        CHECK(e.kind() == ErrorKind::InvalidRank);
    }
}

TEST_CASE("GCM shape is enforced")
{
    const auto kind_of = [](IntMatrix m) {
        try {
            CartanMatrix c(std::move(m));
        } catch (const FriezeError& e) {
            return e.kind();
        }
        return ErrorKind::InternalInconsistency;
    };
    CHECK(kind_of({{2, -1}, {-1, 3}}) == ErrorKind::NotGCM);
    CHECK(kind_of({{2, 1}, {-1, 2}}) == ErrorKind::NotGCM);
    CHECK(kind_of({{2, 0}, {-1, 2}}) == ErrorKind::NotGCM);
    CHECK(kind_of({{2, -1, 0}, {-1, 2}}) == ErrorKind::NotGCM);
    CHECK(kind_of({}) == ErrorKind::NotGCM);
    CHECK_THROWS_AS(symmetriser(IntMatrix{{1}}), FriezeError);
}

TEST_CASE("symmetriser examples")
{
    CHECK(symmetriser(IntMatrix{{2, -1}, {-1, 2}}) == std::vector<Value>{1, 1});
    // d1*(-2) = d2*(-1)
    CHECK(symmetriser(IntMatrix{{2, -2}, {-1, 2}}) == std::vector<Value>{1, 2});
    CHECK(symmetriser(IntMatrix{{2, -3}, {-1, 2}}) == std::vector<Value>{1, 3});
    // Inconsistent 3-cycle: a12 a23 a31 = -1 but a21 a32 a13 = -2.
    CHECK_FALSE(symmetriser(IntMatrix{{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}).has_value());
    // Components normalise independently.
    CHECK(symmetriser(IntMatrix{{2, -2, 0}, {-1, 2, 0}, {0, 0, 2}}) == std::vector<Value>{1, 2, 1});
}

TEST_CASE("symmetriser agrees with bounded brute force on random indecomposable GCMs")
{
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> entry(0, 3);
    int compared = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + trial % 2;
        IntMatrix m(n, std::vector<Value>(n, 0));
        for (int i = 0; i < n; ++i) {
            m[i][i] = 2;
            for (int j = i + 1; j < n; ++j) {
                const int a = entry(rng);
                const int b = a == 0 ? 0 : 1 + entry(rng) % 3;
                m[i][j] = -a;
                m[j][i] = -b;
            }
        }
        const CartanMatrix c(m);
        if (!is_indecomposable(c)) continue;
        const auto fast = symmetriser(m);
        const auto slow = oracle::symmetriser_brute_force(m, 27);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(*fast == *slow);
            CHECK(is_symmetric_product(m, *fast));
        }
        ++compared;
    }
    CHECK(compared > 100);
}

TEST_CASE("leading minors match Leibniz determinants")
{
    const auto c4 = CartanMatrix::standard(Family::C, 4);
    const auto s = symmetrisation(c4);
    CHECK(s == IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -2}, {0, 0, -2, 4}});
    const auto minors = leading_principal_minors(s);
    CHECK(minors == std::vector<Value>{2, 3, 4, 4});
    for (int k = 1; k <= 4; ++k) CHECK(minors[k - 1] == oracle::leibniz_minor(s, k));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 5;
        IntMatrix m(n, std::vector<Value>(n));
        for (auto& row : m) {
            for (auto& x : row) x = entry(rng);
        }
        const auto got = leading_principal_minors(m);
        for (std::size_t k = 0; k < got.size(); ++k) {
            CHECK(got[k] == oracle::leibniz_minor(m, static_cast<int>(k) + 1));
        }
        if (got.size() < static_cast<std::size_t>(n)) CHECK(got.back() == 0);
    }
}

TEST_CASE("finite type")
{
    CHECK(is_finite_type(CartanMatrix::standard(Family::A, 3)));
    CHECK(is_finite_type(CartanMatrix::standard(Family::C, 4)));
    CHECK(is_finite_type(CartanMatrix(IntMatrix{{2, -3}, {-1, 2}})));
    CHECK_FALSE(is_finite_type(CartanMatrix(IntMatrix{{2, -2}, {-2, 2}})));
    CHECK_FALSE(is_finite_type(CartanMatrix(IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})));
    CHECK_FALSE(is_finite_type(CartanMatrix(IntMatrix{{2, -4}, {-1, 2}})));

    try {
        is_finite_type(CartanMatrix(IntMatrix{{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}));
        FAIL("non-symmetrisable matrix accepted");
    } catch (const FriezeError& e) {
        CHECK(e.kind() == ErrorKind::NotSymmetrisable);
    }
}

TEST_CASE("indecomposability")
{
    CHECK(is_indecomposable(CartanMatrix::standard(Family::A, 5)));
    CHECK(is_indecomposable(CartanMatrix::standard(Family::C, 3)));
    CHECK_FALSE(is_indecomposable(CartanMatrix(IntMatrix{{2, 0}, {0, 2}})));
    CHECK_FALSE(is_indecomposable(CartanMatrix(IntMatrix{{2, 0, -1}, {0, 2, 0}, {-1, 0, 2}})));
    CHECK(is_indecomposable(CartanMatrix(IntMatrix{{2, 0, -1}, {0, 2, -1}, {-1, -1, 2}})));
}

TEST_CASE("standard families over a range of ranks")
{
    for (int n = 1; n <= 12; ++n) {
        const auto a = CartanMatrix::standard(Family::A, n);
        CHECK(a.entries() == symmetrisation(a));
        CHECK(symmetriser(a) == std::vector<Value>(n, 1));
        CHECK(is_finite_type(a));
        CHECK(is_indecomposable(a));
    }
    for (int n = 2; n <= 12; ++n) {
        const auto c = CartanMatrix::standard(Family::C, n);
        const auto d = symmetriser(c);
        REQUIRE(d.has_value());
        CHECK(is_symmetric_product(c.entries(), *d));
        std::vector<Value> expected(n, 1);
        expected.back() = 2;
        CHECK(*d == expected);
        CHECK(is_finite_type(c));
    }
}

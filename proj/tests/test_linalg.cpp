#include <doctest.h>

#include "weil/linalg.hpp"

using namespace weil;

namespace {
Matrix from(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix m(int(rows.size()), int(rows.begin()->size()));
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (long v : r) m(i, j++) = rat(v);
        ++i;
    }
    return m;
}
}  // namespace

TEST_CASE("rref finds pivots and normalizes exactly") {
    Matrix m = from({{2, 4, 0}, {1, 2, 1}});
    auto piv = rref_in_place(m);
    CHECK(piv == std::vector<int>{0, 2});
    CHECK(m(0, 1) == rat(2));
    CHECK(m(0, 0) == rat(1));
    CHECK(m(1, 2) == rat(1));
    CHECK(rank(from({{2, 4, 0}, {1, 2, 1}})) == 2);
    CHECK(rank(from({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basis has one vector per free column") {
    auto K = kernel_basis(from({{1, 2, 0, 3}}));
    REQUIRE(K.size() == 3);
    Matrix A = from({{1, 2, 0, 3}});
    for (const auto& v : K) {
        auto y = A.apply(v);
        CHECK(y[0] == 0);
    }
    CHECK(kernel_basis(from({{1, 0}, {0, 1}})).empty());
    CHECK(kernel_basis(Matrix(0, 3)).size() == 3);
}

TEST_CASE("solve: unique, underdetermined, inconsistent") {
    auto x = solve(from({{2, 0}, {0, 4}}), {rat(1), rat(1)});
    REQUIRE(x);
    CHECK((*x)[0] == rat(1, 2));
    CHECK((*x)[1] == rat(1, 4));

    auto y = solve(from({{1, 1}}), {rat(3)});
    REQUIRE(y);
    CHECK((*y)[0] + (*y)[1] == rat(3));

    CHECK_FALSE(solve(from({{1, 1}, {1, 1}}), {rat(0), rat(1)}).has_value());
    CHECK_THROWS_AS(solve(from({{1, 1}}), {rat(1), rat(2)}), error);
}

TEST_CASE("matrix product keeps exact fractions") {
    Matrix a(1, 1), b(1, 1);
    a(0, 0) = rat(1, 3);
    b(0, 0) = rat(3, 7);
    Matrix c = a * b;
    CHECK(c(0, 0) == rat(1, 7));
    CHECK_THROWS_AS(a * Matrix(2, 2), error);
}

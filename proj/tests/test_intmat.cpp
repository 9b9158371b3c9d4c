#include "doctest.h"

#include "latsum/intmat.hpp"

using namespace latsum;

namespace {

IntMat mat(std::vector<std::vector<long long>> rows) {
    IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

void check_snf(const IntMat& a) {
    auto r = smith_normal_form(a);
    CHECK(r.u * a * r.v == r.d);
    CHECK(abs(determinant(r.u)) == 1);
    CHECK(abs(determinant(r.v)) == 1);
    std::size_t lim = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i + 1 < lim; ++i) {
        if (r.d(i + 1, i + 1) != 0) {
            CHECK(r.d(i, i) != 0);
            CHECK(r.d(i + 1, i + 1) % r.d(i, i) == 0);
        }
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) CHECK(r.d(i, j) == 0);
}

} // namespace

TEST_CASE("smith normal form identity") {
    auto a = IntMat::identity(3);
    auto r = smith_normal_form(a);
    CHECK(r.d == IntMat::identity(3));
    check_snf(a);
}

TEST_CASE("smith normal form diag(2,3) gives diag(1,6)") {
    auto a = mat({{2, 0}, {0, 3}});
    auto r = smith_normal_form(a);
    CHECK(r.d(0, 0) == 1);
    CHECK(r.d(1, 1) == 6);
    check_snf(a);
}

TEST_CASE("smith normal form of the cubic exponent rows") {
    auto a = mat({{1, 2, 0, 1}, {0, 1, 2, 1}, {2, 0, 1, 1}});
    check_snf(a);
    auto r = smith_normal_form(a);
    Int prod = 1;
    for (int i = 0; i < 3; ++i) prod *= r.d(i, i);
    CHECK(prod == 3);  // index of the row lattice in its saturation
}

TEST_CASE("smith normal form on rectangular and zero matrices") {
    check_snf(mat({{4, 6, 10}}));
    check_snf(mat({{0, 0}, {0, 0}}));
    check_snf(mat({{3}, {6}, {9}}));
}

TEST_CASE("hermite normal form canonicalizes a basis") {
    auto h = hermite_normal_form(mat({{2, 0}, {1, 1}}));
    CHECK(h == mat({{1, 1}, {0, 2}}));
    // same lattice from a different generating set
    auto h2 = hermite_normal_form(mat({{1, 1}, {3, 1}, {2, 0}}));
    CHECK(h == h2);
}

TEST_CASE("rank and determinant") {
    CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(mat({{1, 0}, {0, 1}})) == 2);
    CHECK(determinant(mat({{2, 1}, {1, 1}})) == 1);
    CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(mat({{3, 0, 0}, {0, 4, 0}, {0, 0, 5}})) == 60);
}

TEST_CASE("solve_left over the rationals") {
    auto a = mat({{2, 0}, {1, 1}});
    std::vector<Rat> x;
    CHECK(solve_left(a, {Rat(3), Rat(1)}, x));
    REQUIRE(x.size() == 2);
    CHECK(x[0] * 2 + x[1] * 1 == 3);
    CHECK(x[1] == 1);

    auto b = mat({{1, 0}, {2, 0}});
    CHECK_FALSE(solve_left(b, {Rat(0), Rat(1)}, x));
}

TEST_CASE("left kernel is saturated") {
    auto k = left_kernel(mat({{1}, {1}}));
    REQUIRE(k.rows() == 1);
    CHECK(k(0, 0) + k(0, 1) == 0);
    CHECK(abs(k(0, 0)) == 1);

    auto k2 = left_kernel(mat({{2, 4}, {1, 2}, {0, 0}}));
    CHECK(k2.rows() == 2);
    for (std::size_t i = 0; i < k2.rows(); ++i)
        CHECK(k2(i, 0) * 2 + k2(i, 1) * 1 + k2(i, 2) * 0 == 0);
}

TEST_CASE("inverse of a unimodular matrix") {
    auto a = mat({{1, 1}, {0, 1}});
    CHECK(a * inverse_unimodular(a) == IntMat::identity(2));
    auto b = mat({{2, 1}, {1, 1}});
    CHECK(inverse_unimodular(b) * b == IntMat::identity(2));
}

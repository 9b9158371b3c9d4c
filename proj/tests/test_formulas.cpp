#include "doctest.h"

#include "latsum/formulas.hpp"

using namespace latsum;

namespace {

// all exponent vectors in `n` variables with coordinate sum exactly d
std::vector<Expo> degree_slice(std::size_t n, long long d) {
    std::vector<Expo> out;
    Expo cur(n, 0);
    auto rec = [&](auto&& self, std::size_t i, long long left) -> void {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

std::vector<Expo> diagonal_family(std::size_t n) {
    // y (x1^n + ... + xn^n + x1...xn) in n+1 variables
    std::vector<Expo> J;
    for (std::size_t i = 0; i < n; ++i) {
        Expo e(n + 1, 0);
        e[i] = static_cast<long long>(n);
        e[n] = 1;
        J.push_back(e);
    }
    J.push_back(Expo(n + 1, 1));
    return J;
}

} // namespace

TEST_CASE("span intersection cuts a lattice down to a coordinate line") {
    IntegerLattice z2(2, IntMat::identity(2));
    auto cut = intersect_with_span(z2, {{0, 3}}, 2);
    CHECK(cut.rank() == 1);
    CHECK(cut.contains(Expo{0, 1}));
    CHECK_FALSE(cut.contains(Expo{1, 0}));

    // even-sum sublattice against the same line keeps only even multiples
    IntMat gen(2, 2);
    gen(0, 0) = 1; gen(0, 1) = 1;
    gen(1, 1) = 2;
    auto cut2 = intersect_with_span(IntegerLattice(2, gen), {{0, 3}}, 2);
    CHECK(cut2.contains(Expo{0, 2}));
    CHECK_FALSE(cut2.contains(Expo{0, 1}));
}

TEST_CASE("convenient supports") {
    CHECK(convenient({{{1, 0}, {0, 1}}, 2, 0}));
    CHECK(convenient({degree_slice(2, 2), 2, 0}));
    // x alone in two affine variables: dropping y keeps the full dimension
    CHECK_FALSE(convenient({{{1, 0}}, 2, 0}));
    // torus variables never enter A; only the affine one must drop the dim
    CHECK(convenient({{{-1, 0}, {0, 1}}, 2, 1}));
    CHECK_FALSE(convenient({{{1, 0}}, 2, 1}));
}

TEST_CASE("torus degree bound on small supports") {
    CHECK(torus_degree_bound({{{1}}, 1, 1}, 7) == 1);
    CHECK(torus_degree_bound({{{1, 0}, {0, 1}}, 2, 2}, 3) == 1);
    // x + 1/x: the segment [-1, 1] has two unit cells
    CHECK(torus_degree_bound({{{1}, {-1}}, 1, 1}, 2) == 2);
    // the reference lattice absorbs p-power indices but not prime-to-p ones
    CHECK(torus_degree_bound({{{2, 0}, {0, 2}}, 2, 2}, 2) == 1);
    CHECK(torus_degree_bound({{{3, 0}, {0, 3}}, 2, 2}, 3) == 1);
    CHECK(torus_degree_bound({{{3, 0}, {0, 3}}, 2, 2}, 2) == 9);
    CHECK(nondeg_degree({{{3, 0}, {0, 3}}, 2, 2}, 2) == 9);
}

TEST_CASE("inclusion-exclusion degree of affine sums") {
    // x + y over the affine plane: the sum vanishes identically
    CHECK(nu({{{1, 0}, {0, 1}}, 2, 0}, 5) == 0);
    // x over the one-variable torus
    CHECK(nu({{{1}}, 1, 1}, 5) == 1);
    // x over the affine line: two-term inclusion-exclusion
    CHECK(nu({{{1}}, 1, 0}, 5) == 0);
    // full quadric in two affine variables at p = 2
    CHECK(nu({degree_slice(2, 2), 2, 0}, 2) == katz_degree(2, 1, 1, 2));
}

TEST_CASE("closed-form degrees") {
    CHECK(katz_degree(2, 1, 1, 2) == 1);
    CHECK(dwork_degree(2, 2, 1, 4) == 3);
    // e = 1 collapses the second summand
    CHECK(dwork_degree(3, 1, 1, 3) == 2);
    CHECK(dwork_degree(5, 1, 1, 5) == 4);
    CHECK(dwork_degree(2, 3, 1, 8) == 7);
    CHECK_THROWS(dwork_degree(2, 1, 3, 4));  // n != p^k e
}

TEST_CASE("closed forms match the inclusion-exclusion definition") {
    // generic degree-d polynomial in n affine variables, d = p^k e
    for (auto [p, k, e, n] : {std::tuple{2, 1, 1, 2}, {2, 1, 3, 2}, {3, 1, 1, 3},
                              {2, 2, 1, 3}, {5, 1, 1, 2}}) {
        long long d = static_cast<long long>(pow_int(Int(p), k).convert_to<long>() * e);
        SupportInput in{degree_slice(n, d), static_cast<std::size_t>(n), 0};
        CHECK(nu(in, p) == katz_degree(p, k, e, n));
    }
    // diagonal family with the auxiliary variable, p | n
    for (auto [p, k, e] : {std::tuple{2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {2, 1, 3}}) {
        long n = pow_int(Int(p), k).convert_to<long>() * e;
        SupportInput in{diagonal_family(n), static_cast<std::size_t>(n) + 1, 0};
        CHECK(nu(in, p) == dwork_degree(p, k, e, n));
    }
}

TEST_CASE("divisibility bounds") {
    // the non-smooth cubic surface: a genuine bound at p = 3, nothing at p = 5
    std::vector<Expo> cubic = {{1, 2, 0}, {0, 1, 2}, {2, 0, 1}};
    auto b3 = cw_divisibility({cubic}, 3, 3);
    REQUIRE(b3.mu_minus_one.has_value());
    CHECK(*b3.mu_minus_one == 1);
    auto b5 = cw_divisibility({cubic}, 3, 5);
    CHECK(*b5.mu_minus_one == 0);

    // diagonal p-power forms have mu - 1 = n - 1
    CHECK(*cw_divisibility({{{2, 0}, {0, 4}}}, 2, 2).mu_minus_one == 1);
    CHECK(*cw_divisibility({{{2, 0, 0}, {0, 4, 0}, {0, 0, 2}}}, 3, 2)
               .mu_minus_one == 2);

    // a single monomial is a dilation-1 hit, bound 0
    auto m = cw_divisibility({{{1, 1}}}, 2, 3);
    CHECK(*m.mu_minus_one == 0);
    CHECK(m.omega_minus_s >= 0);

    // two-polynomial system only carries the omega bound
    auto two = cw_divisibility({{{2, 0}, {0, 4}}, {{1, 1}}}, 2, 2);
    CHECK_FALSE(two.mu_minus_one.has_value());
}

TEST_CASE("top weight count") {
    // single-variable torus linear form: the one weight-0 root is not top
    // weight relative to the segment
    CHECK(top_weight_count({{{1}}, 1, 1}, 3) == 0);
    // x + 1/x at p = 2: both reciprocal roots have top weight 1
    CHECK(top_weight_count({{{1}, {-1}}, 1, 1}, 2) == 2);
    // when no proper origin-face carries volume the count equals nu
    SupportInput quad{degree_slice(2, 2), 2, 0};
    CHECK(top_weight_count(quad, 2) == nu(quad, 2));
}

#ifndef LATSUM_FORMULAS_HPP
#define LATSUM_FORMULAS_HPP

#include "latsum/polytope.hpp"

#include <optional>
#include <set>

namespace latsum {

/// Exponent support with the torus/affine split: the first torus_vars
/// variables range over the torus, the rest over affine space.
struct SupportInput {
    std::vector<Expo> J;
    std::size_t n = 0;
    std::size_t torus_vars = 0;
};

/// Intersection of m with the rational span of gens (basis rows in Z^n).
IntegerLattice intersect_with_span(const IntegerLattice& m,
                                   const std::vector<Expo>& gens, std::size_t n);

/// Terms whose support avoids every variable in a.
std::vector<Expo> restrict_support(const std::vector<Expo>& J,
                                   const std::set<std::size_t>& a);

/// dim of the Newton polytope of J_A drops by exactly |A| for every affine
/// subset A (empty J_A counts as dimension 0).
bool convenient(const SupportInput& in);

/// Upper bound k! V_{M_J} on the degree of the torus L-function.
Int torus_degree_bound(const SupportInput& in, const Int& p);

/// Degree of the distinguished polynomial under nondegeneracy; same quantity.
Int nondeg_degree(const SupportInput& in, const Int& p);

/// Inclusion-exclusion of face volumes over affine subsets A, measured
/// against M_J intersected with the span of J_A; empty J_A contributes 1.
Int nu(const SupportInput& in, const Int& p);

/// (1/p^k) ((d-1)^n + (-1)^n (p^k - 1)) with d = p^k e.
Int katz_degree(const Int& p, long k, const Int& e, long n);

/// (p^k - 1) e^{n-1} + (1/e) ((e-1)^n + (-1)^n (e-1)) with n = p^k e.
Int dwork_degree(const Int& p, long k, const Int& e, long n);

/// Divisibility bounds on ord_q of a zero count: mu - 1 (single polynomial)
/// and omega(F) - s in general, F = sum y_i f_i with one auxiliary variable
/// per polynomial.
struct DivisibilityBounds {
    std::optional<Rat> mu_minus_one;  // single-polynomial bound only
    Rat omega_minus_s = 0;
};

DivisibilityBounds cw_divisibility(const std::vector<std::vector<Expo>>& systems,
                                   std::size_t n, const Int& p, long cap = 0);

/// Alternating sum over the faces containing the origin; counts the
/// reciprocal roots of top weight dim(Delta).
Int top_weight_count(const SupportInput& in, const Int& p);

} // namespace latsum

#endif

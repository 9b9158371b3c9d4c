#ifndef LATSUM_LFUNCTION_HPP
#define LATSUM_LFUNCTION_HPP

#include "latsum/cyclotomic.hpp"
#include "latsum/polytope.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace latsum {

/// Polynomial (or truncated series) over Q(zeta_p), c[i] the t^i coefficient.
struct CycloPoly {
    int p = 2;
    std::vector<Cyclo> c;

    explicit CycloPoly(int p_) : p(p_), c(1, Cyclo::from_rational(p_, 1)) {}
    CycloPoly(int p_, std::vector<Cyclo> coeffs) : p(p_), c(std::move(coeffs)) {}

    long degree() const;  // trailing zeros trimmed; 0 for constants
    void trim();
    bool operator==(const CycloPoly& o) const;
};

CycloPoly poly_mul(const CycloPoly& a, const CycloPoly& b);
/// Substitutes t -> q t.
CycloPoly poly_scale_arg(const CycloPoly& a, const Rat& q);

/// Numerator / denominator, both with constant term 1.
struct RationalFn {
    CycloPoly num;
    CycloPoly den;
};

struct NoRationalFit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Truncated series of exp(sum_m S_m t^m / m): coefficients c_0..c_M.
std::vector<Cyclo> l_series(int p, const std::vector<Cyclo>& sums);

/// Truncated series of num/den up to order m.
std::vector<Cyclo> series_of(const RationalFn& fn, std::size_t m);

/// Minimal-degree rational function matching the series through its whole
/// truncation; degrees searched up to the given bounds (smallest total degree
/// first).  Throws NoRationalFit when nothing matches.
RationalFn rational_reconstruct(int p, const std::vector<Cyclo>& series,
                                long deg_num_max, long deg_den_max);

/// g(t) -> g(t)/g(qt), iterated `times` (0 = identity).
RationalFn delta_op(const RationalFn& g, const Rat& q, int times);

/// Lower convex hull of (i, ord_q c_i); x integer, y rational.
struct NewtonPolygon {
    std::vector<std::pair<long, Rat>> points;
    Rat value_at(const Rat& x) const;  // piecewise-linear interpolation
};

/// Polygon of P relative to ord_q (q = p^r); rational coefficients are
/// cleared through a global denominator whose valuation shifts the polygon.
NewtonPolygon newton_polygon_ordq(const CycloPoly& poly, int r);

/// Polygon with slope i/n_denom repeated a_i times (the combinatorial bound).
NewtonPolygon hodge_bound_polygon(const HilbertData& h);

/// True iff `actual` lies on or above `bound` at every abscissa of the
/// common range.
bool polygon_dominates(const NewtonPolygon& actual, const NewtonPolygon& bound);

struct WeightHistogram {
    std::map<int, int> counts;    // weight w -> number of reciprocal roots
    double max_residual = 0.0;    // worst relative |rho|/q^{w/2} deviation
};

/// Reciprocal-root moduli of P under zeta_p -> exp(2 pi i / p), classified as
/// q^{w/2}; throws on any root farther than `tol` (relative) from every
/// half-integer exponent.
WeightHistogram root_moduli(const CycloPoly& poly, const Rat& q,
                            double tol = 1e-3);

} // namespace latsum

#endif

#include "latsum/lfunction.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>

namespace latsum {

long CycloPoly::degree() const {
    for (std::size_t i = c.size(); i > 0; --i)
        if (!c[i - 1].is_zero()) return static_cast<long>(i - 1);
    return 0;
}

void CycloPoly::trim() {
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
}

bool CycloPoly::operator==(const CycloPoly& o) const {
    CycloPoly a = *this, b = o;
    a.trim();
    b.trim();
    return a.p == b.p && a.c == b.c;
}

CycloPoly poly_mul(const CycloPoly& a, const CycloPoly& b) {
    CycloPoly r(a.p);
    r.c.assign(a.c.size() + b.c.size() - 1, Cyclo(a.p));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.trim();
    return r;
}

CycloPoly poly_scale_arg(const CycloPoly& a, const Rat& q) {
    CycloPoly r = a;
    Rat f = 1;
    for (std::size_t i = 1; i < r.c.size(); ++i) {
        f *= q;
        r.c[i] = r.c[i] * f;
    }
    return r;
}

std::vector<Cyclo> l_series(int p, const std::vector<Cyclo>& sums) {
    std::size_t m = sums.size();
    std::vector<Cyclo> c(m + 1, Cyclo(p));
    c[0] = Cyclo::from_rational(p, 1);
    for (std::size_t n = 1; n <= m; ++n) {
        Cyclo acc(p);
        for (std::size_t j = 1; j <= n; ++j)
            acc = acc + sums[j - 1] * c[n - j];
        c[n] = acc * Rat(1, static_cast<long>(n));
    }
    return c;
}

std::vector<Cyclo> series_of(const RationalFn& fn, std::size_t m) {
    int p = fn.num.p;
    // inverse series of the denominator (constant term 1)
    std::vector<Cyclo> inv(m + 1, Cyclo(p));
    inv[0] = Cyclo::from_rational(p, 1);
    for (std::size_t n = 1; n <= m; ++n) {
        Cyclo acc(p);
        for (std::size_t j = 1; j <= n && j < fn.den.c.size(); ++j)
            acc = acc + fn.den.c[j] * inv[n - j];
        inv[n] = -acc;
    }
    std::vector<Cyclo> out(m + 1, Cyclo(p));
    for (std::size_t i = 0; i < fn.num.c.size() && i <= m; ++i)
        for (std::size_t j = 0; i + j <= m; ++j)
            out[i + j] = out[i + j] + fn.num.c[i] * inv[j];
    return out;
}

namespace {

// solves A x = rhs over Q(zeta_p) by Gauss-Jordan; free variables are set to
// zero; returns false when inconsistent
bool solve_cyclo(std::vector<std::vector<Cyclo>> a, std::vector<Cyclo> rhs,
                 std::vector<Cyclo>& x, int p) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<long> pivot_col(rows, -1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(rhs[piv], rhs[r]);
        Cyclo d = a[r][col].inverse();
        for (std::size_t j = col; j < cols; ++j) a[r][j] = a[r][j] * d;
        rhs[r] = rhs[r] * d;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col].is_zero()) continue;
            Cyclo f = a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] = a[i][j] - f * a[r][j];
            rhs[i] = rhs[i] - f * rhs[r];
        }
        pivot_col[r] = static_cast<long>(col);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!rhs[i].is_zero()) return false;
    x.assign(cols, Cyclo(p));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
    return true;
}

} // namespace

RationalFn rational_reconstruct(int p, const std::vector<Cyclo>& series,
                                long deg_num_max, long deg_den_max) {
    long m = static_cast<long>(series.size()) - 1;
    Cyclo one = Cyclo::from_rational(p, 1);
    if (m < 0 || series[0] != one)
        throw std::invalid_argument("series must start with 1");

    for (long total = 0; total <= deg_num_max + deg_den_max; ++total) {
        for (long dd = std::max<long>(0, total - deg_num_max);
             dd <= std::min(total, deg_den_max); ++dd) {
            long dn = total - dd;
            if (dn + dd > m) continue;  // cannot even determine the fit
            // unknowns b_1..b_dd from coefficients dn+1..dn+dd
            std::vector<std::vector<Cyclo>> a;
            std::vector<Cyclo> rhs;
            for (long i = dn + 1; i <= dn + dd; ++i) {
                std::vector<Cyclo> row;
                for (long j = 1; j <= dd; ++j)
                    row.push_back(i - j >= 0 ? series[i - j] : Cyclo(p));
                a.push_back(std::move(row));
                rhs.push_back(-series[i]);
            }
            std::vector<Cyclo> b;
            if (dd > 0 && !solve_cyclo(a, rhs, b, p)) continue;
            CycloPoly den(p);
            den.c.assign(dd + 1, Cyclo(p));
            den.c[0] = one;
            for (long j = 1; j <= dd; ++j) den.c[j] = b[j - 1];
            // numerator and residual check over the full truncation
            CycloPoly num(p);
            num.c.assign(dn + 1, Cyclo(p));
            bool ok = true;
            for (long i = 0; i <= m && ok; ++i) {
                Cyclo acc(p);
                for (long j = 0; j <= std::min<long>(i, dd); ++j)
                    acc = acc + den.c[j] * series[i - j];
                if (i <= dn)
                    num.c[i] = acc;
                else if (!acc.is_zero())
                    ok = false;
            }
            if (!ok) continue;
            num.trim();
            den.trim();
            return {num, den};
        }
    }
    throw NoRationalFit("no rational fit within bounds");
}

RationalFn delta_op(const RationalFn& g, const Rat& q, int times) {
    RationalFn r = g;
    for (int i = 0; i < times; ++i) {
        CycloPoly num = poly_mul(r.num, poly_scale_arg(r.den, q));
        CycloPoly den = poly_mul(r.den, poly_scale_arg(r.num, q));
        r = {num, den};
    }
    return r;
}

Rat NewtonPolygon::value_at(const Rat& x) const {
    if (points.empty()) throw std::logic_error("empty polygon");
    if (x <= Rat(points.front().first)) return points.front().second;
    for (std::size_t i = 1; i < points.size(); ++i) {
        Rat x0(points[i - 1].first), x1(points[i].first);
        if (x <= x1) {
            Rat y0 = points[i - 1].second, y1 = points[i].second;
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
        }
    }
    return points.back().second;
}

NewtonPolygon newton_polygon_ordq(const CycloPoly& poly, int r) {
    int p = poly.p;
    // global denominator and its valuation shift
    Int d = 1;
    for (const auto& c : poly.c)
        for (const auto& co : c.coords()) d = lcm(d, den(co));
    Rat shift = Rat(vp(d, Int(p)), r);

    std::vector<std::pair<long, Rat>> pts;
    for (std::size_t i = 0; i < poly.c.size(); ++i) {
        Cyclo ci = poly.c[i] * Rat(d);
        auto v = ord_q(ci, r);
        if (!v) continue;
        pts.emplace_back(static_cast<long>(i), *v - shift);
    }
    if (pts.empty()) throw std::invalid_argument("zero polynomial");

    // lower convex hull, monotone scan
    std::vector<std::pair<long, Rat>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep if b is strictly below segment a-pt
            Rat lhs = (b.second - a.second) * (pt.first - a.first);
            Rat rhs = (pt.second - a.second) * (b.first - a.first);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    return {hull};
}

NewtonPolygon hodge_bound_polygon(const HilbertData& h) {
    std::vector<std::pair<long, Rat>> pts;
    long x = 0;
    Rat y = 0;
    pts.emplace_back(0, y);
    for (std::size_t i = 0; i < h.a.size(); ++i) {
        if (h.a[i] == 0) continue;
        long count = h.a[i].convert_to<long>();
        x += count;
        y += Rat(Int(i) * h.a[i], h.n_denom);
        pts.emplace_back(x, y);
    }
    return {pts};
}

bool polygon_dominates(const NewtonPolygon& actual, const NewtonPolygon& bound) {
    long hi = std::min(actual.points.back().first, bound.points.back().first);
    for (long x = 0; x <= hi; ++x)
        if (actual.value_at(Rat(x)) < bound.value_at(Rat(x))) return false;
    return true;
}

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;
using QuadC = boost::multiprecision::cpp_complex_quad;

QuadC embed_cyclo(const Cyclo& c) {
    const Quad pi = boost::math::constants::pi<Quad>();
    QuadC acc(0);
    for (std::size_t j = 0; j < c.coords().size(); ++j) {
        if (c.coords()[j] == 0) continue;
        Quad angle = 2 * pi * j / c.p();
        Quad coef = c.coords()[j].convert_to<Quad>();
        acc += QuadC(coef * cos(angle), coef * sin(angle));
    }
    return acc;
}

std::vector<QuadC> find_roots(std::vector<QuadC> a) {
    while (a.size() > 1 && abs(a.back()) < Quad("1e-30")) a.pop_back();
    std::size_t d = a.size() - 1;
    std::vector<QuadC> z(d);
    QuadC seed(Quad("0.4"), Quad("0.9"));
    QuadC cur(1);
    for (std::size_t i = 0; i < d; ++i) {
        cur *= seed;
        z[i] = cur;
    }
    for (int it = 0; it < 500; ++it) {
        Quad worst(0);
        for (std::size_t i = 0; i < d; ++i) {
            QuadC val(0);
            for (std::size_t j = a.size(); j > 0; --j) val = val * z[i] + a[j - 1];
            QuadC denom = a.back();
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) denom *= z[i] - z[j];
            QuadC delta = val / denom;
            z[i] -= delta;
            worst = std::max(worst, Quad(abs(delta)));
        }
        if (worst < Quad("1e-32")) break;
    }
    return z;
}

} // namespace

WeightHistogram root_moduli(const CycloPoly& poly, const Rat& q, double tol) {
    CycloPoly pp = poly;
    pp.trim();
    if (pp.degree() == 0) throw std::invalid_argument("constant polynomial");

    std::vector<QuadC> coeffs;
    for (const auto& c : pp.c) coeffs.push_back(embed_cyclo(c));
    auto roots = find_roots(std::move(coeffs));

    Quad qv = q.convert_to<Quad>();
    Quad logq = log(qv);
    WeightHistogram hist;
    for (const auto& z : roots) {
        Quad rho = 1 / abs(z);  // reciprocal-root modulus
        Quad lw = 2 * log(rho) / logq;
        long w = std::lround(lw.convert_to<double>());
        Quad expected = exp(logq * w / 2);
        Quad resid = abs(rho - expected) / expected;
        double rd = resid.convert_to<double>();
        if (rd > tol) throw std::runtime_error("ambiguous weight for a root");
        hist.counts[static_cast<int>(w)] += 1;
        hist.max_residual = std::max(hist.max_residual, rd);
    }
    return hist;
}

} // namespace latsum

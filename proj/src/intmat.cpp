#include "latsum/intmat.hpp"

#include <algorithm>

namespace latsum {

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    IntMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (a_[i][k] == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) += a_[i][k] * o(k, j);
        }
    return r;
}

IntMat IntMat::transpose() const {
    IntMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = a_[i][j];
    return r;
}

IntMat IntMat::submatrix_rows(std::size_t first, std::size_t count) const {
    IntMat r(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = a_[first + i][j];
    return r;
}

SnfResult smith_normal_form(const IntMat& a) {
    std::size_t m = a.rows(), n = a.cols();
    IntMat d = a;
    IntMat u = IntMat::identity(m);
    IntMat v = IntMat::identity(n);

    auto add_row = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t j = 0; j < n; ++j) d(dst, j) += c * d(src, j);
        for (std::size_t j = 0; j < m; ++j) u(dst, j) += c * u(src, j);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& c) {
        for (std::size_t i = 0; i < m; ++i) d(i, dst) += c * d(i, src);
        for (std::size_t i = 0; i < n; ++i) v(i, dst) += c * v(i, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) d(i, j) = -d(i, j);
        for (std::size_t j = 0; j < m; ++j) u(i, j) = -u(i, j);
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // pivot = minimal nonzero |entry| in the remaining block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (d(i, j) != 0 &&
                    (!found || abs(d(i, j)) < abs(d(pi, pj)))) {
                    pi = i; pj = j; found = true;
                }
        if (!found) break;
        if (pi != t) { d.swap_rows(t, pi); u.swap_rows(t, pi); }
        if (pj != t) { d.swap_cols(t, pj); v.swap_cols(t, pj); }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                add_row(i, t, -q);
                if (d(i, t) != 0) {
                    d.swap_rows(t, i); u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                add_col(j, t, -q);
                if (d(t, j) != 0) {
                    d.swap_cols(t, j); v.swap_cols(t, j);
                    clean = false;
                }
            }
        }
        if (d(t, t) < 0) negate_row(t);
        ++t;
    }

    // enforce the divisibility chain
    for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i + 1 < t; ++i) {
            if (d(i + 1, i + 1) % d(i, i) == 0) continue;
            // fold d(i+1,i+1) into position (i,i) and redo the 2x2 block
            add_col(i, i + 1, 1);
            // now column i has entries d(i,i) and d(i+1,i+1); clear by gcd steps
            while (d(i + 1, i) != 0) {
                Int q = d(i, i) / d(i + 1, i);
                add_row(i, i + 1, -q);
                d.swap_rows(i, i + 1); u.swap_rows(i, i + 1);
            }
            Int q = d(i, i + 1) / d(i, i);
            add_col(i + 1, i, -q);
            if (d(i, i) < 0) negate_row(i);
            if (d(i + 1, i + 1) < 0) negate_row(i + 1);
            again = true;
        }
    }
    return {u, d, v};
}

IntMat hermite_normal_form(const IntMat& a) {
    std::size_t m = a.rows(), n = a.cols();
    IntMat h = a;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        // gcd-reduce column below row r
        while (true) {
            std::size_t piv = m;
            for (std::size_t i = r; i < m; ++i)
                if (h(i, col) != 0 && (piv == m || abs(h(i, col)) < abs(h(piv, col))))
                    piv = i;
            if (piv == m) break;
            if (piv != r) h.swap_rows(r, piv);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h(i, col) == 0) continue;
                Int q = h(i, col) / h(r, col);
                for (std::size_t j = 0; j < n; ++j) h(i, j) -= q * h(r, j);
                if (h(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h(r, col) == 0) continue;
        if (h(r, col) < 0)
            for (std::size_t j = 0; j < n; ++j) h(r, j) = -h(r, j);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = h(i, col) / h(r, col);
            if (h(i, col) - q * h(r, col) < 0) q -= 1;  // floor division
            if (q != 0)
                for (std::size_t j = 0; j < n; ++j) h(i, j) -= q * h(r, j);
        }
        ++r;
    }
    return h.submatrix_rows(0, r);
}

long rank(const IntMat& a) {
    return static_cast<long>(hermite_normal_form(a).rows());
}

Int determinant(const IntMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square");
    std::size_t n = a.rows();
    // fraction-free Bareiss
    std::vector<std::vector<Int>> w(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a(i, j);
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && w[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(w[k], w[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
        prev = w[k][k];
    }
    return n == 0 ? Int(1) : sign * w[n - 1][n - 1];
}

bool solve_left(const IntMat& a, const std::vector<Rat>& b, std::vector<Rat>& x) {
    // Solve x*a = b, i.e. a^T x^T = b^T, by rational Gaussian elimination.
    std::size_t m = a.rows(), n = a.cols();
    if (b.size() != n) throw std::invalid_argument("rhs size mismatch");
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) w[i][j] = Rat(a(j, i));
        w[i][m] = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && w[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(w[row], w[piv]);
        Rat inv = w[row][col];
        for (std::size_t j = col; j <= m; ++j) w[row][j] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || w[i][col] == 0) continue;
            Rat c = w[i][col];
            for (std::size_t j = col; j <= m; ++j) w[i][j] -= c * w[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (w[i][m] != 0) return false;
    x.assign(m, Rat(0));
    for (std::size_t i = 0; i < row; ++i) x[pivot_col[i]] = w[i][m];
    return true;
}

IntMat left_kernel(const IntMat& a) {
    // SNF: u*a*v = d.  Rows of u beyond rank(a) span the left kernel; the
    // kernel of a as a subgroup of Z^rows is saturated, and u is unimodular,
    // so those rows are a basis.
    SnfResult s = smith_normal_form(a);
    std::size_t r = 0;
    std::size_t lim = std::min(s.d.rows(), s.d.cols());
    while (r < lim && s.d(r, r) != 0) ++r;
    return hermite_normal_form(s.u.submatrix_rows(r, a.rows() - r));
}

IntMat inverse_unimodular(const IntMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("non-square");
    std::size_t n = a.rows();
    Int det = determinant(a);
    if (det == 0) throw std::invalid_argument("singular");
    IntMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> e(n, Rat(0)), x;
        e[i] = 1;
        if (!solve_left(a, e, x)) throw std::runtime_error("inverse solve failed");
        for (std::size_t j = 0; j < n; ++j) {
            if (den(x[j]) != 1) throw std::invalid_argument("inverse not integral");
            inv(i, j) = num(x[j]);
        }
    }
    // inv satisfies inv*a = I; for square matrices a*inv = I as well
    return inv;
}

} // namespace latsum

#ifndef LATSUM_INTMAT_HPP
#define LATSUM_INTMAT_HPP

#include "latsum/numbers.hpp"

#include <stdexcept>
#include <vector>

namespace latsum {

/// Dense matrix over Z with exact arbitrary-precision entries.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<Int>(cols, Int(0))) {}
    explicit IntMat(std::vector<std::vector<Int>> entries)
        : rows_(entries.size()), cols_(entries.empty() ? 0 : entries[0].size()),
          a_(std::move(entries)) {
        for (const auto& row : a_)
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix");
    }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMat from_rows(const std::vector<Expo>& rows, std::size_t cols) {
        IntMat m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("row size mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t i, std::size_t j) { return a_[i][j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
    const std::vector<Int>& row(std::size_t i) const { return a_[i]; }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMat operator*(const IntMat& o) const;
    IntMat transpose() const;
    IntMat submatrix_rows(std::size_t first, std::size_t count) const;

    void swap_rows(std::size_t i, std::size_t j) { std::swap(a_[i], a_[j]); }
    void swap_cols(std::size_t i, std::size_t j) {
        for (auto& row : a_) std::swap(row[i], row[j]);
    }

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<Int>> a_;
};

struct SnfResult {
    IntMat u;  // unimodular, rows() x rows() of input
    IntMat d;  // diagonal with d1 | d2 | ...
    IntMat v;  // unimodular, cols() x cols() of input
};

/// Smith normal form: u*a*v = d, u and v unimodular, nonneg diagonal with
/// divisibility chain. Classical row/column reduction, exact throughout.
SnfResult smith_normal_form(const IntMat& a);

/// Row-style Hermite normal form of the row span: echelon rows with positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
IntMat hermite_normal_form(const IntMat& a);

long rank(const IntMat& a);
Int determinant(const IntMat& a);

/// Solves x * a = b over Q (x is a row vector). Returns false if inconsistent.
bool solve_left(const IntMat& a, const std::vector<Rat>& b, std::vector<Rat>& x);

/// Basis (as rows) of the saturated integer kernel {c in Z^rows : c * a = 0}.
IntMat left_kernel(const IntMat& a);

/// Inverse of a unimodular (or general invertible-over-Q with integral inverse)
/// square matrix; throws if not integrally invertible.
IntMat inverse_unimodular(const IntMat& a);

} // namespace latsum

#endif

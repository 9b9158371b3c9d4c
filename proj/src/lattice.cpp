#include "latsum/lattice.hpp"

#include <stdexcept>

namespace latsum {

IntegerLattice::IntegerLattice(std::size_t ambient_dim, const IntMat& generators)
    : n_(ambient_dim), basis_(hermite_normal_form(generators)) {
    if (generators.cols() != ambient_dim)
        throw std::invalid_argument("generator width != ambient dimension");
}

std::optional<std::vector<Rat>> IntegerLattice::coords(const Expo& u) const {
    if (u.size() != n_) throw std::invalid_argument("vector size mismatch");
    std::vector<Rat> b(n_);
    for (std::size_t j = 0; j < n_; ++j) b[j] = Rat(Int(u[j]));
    std::vector<Rat> x;
    if (!solve_left(basis_, b, x)) return std::nullopt;
    return x;
}

bool IntegerLattice::contains(const Expo& u) const {
    auto c = coords(u);
    if (!c) return false;
    for (const auto& v : *c)
        if (den(v) != 1) return false;
    return true;
}

bool IntegerLattice::contains(const IntegerLattice& sub) const {
    if (sub.ambient_dim() != n_) return false;
    for (std::size_t i = 0; i < sub.basis_.rows(); ++i) {
        Expo row(n_);
        for (std::size_t j = 0; j < n_; ++j)
            row[j] = sub.basis_(i, j).convert_to<long long>();
        if (!contains(row)) return false;
    }
    return true;
}

Rat LinearForm::eval(const Expo& u) const {
    if (u.size() != coeff.size()) throw std::invalid_argument("vector size mismatch");
    Rat s = 0;
    for (std::size_t j = 0; j < coeff.size(); ++j) s += coeff[j] * Int(u[j]);
    return s;
}

namespace {

struct SnfBasis {
    IntMat w;             // n x n unimodular; rows u_i
    IntMat v;             // inverse of w
    std::vector<Int> d;   // rank many diagonal entries
};

// Basis u_1..u_n of Z^n and d_1..d_k such that d_i u_i is a basis of the row
// span of `gens`.
SnfBasis snf_basis(const IntMat& gens) {
    SnfResult s = smith_normal_form(gens);
    SnfBasis r;
    r.v = s.v;
    r.w = inverse_unimodular(s.v);
    std::size_t lim = std::min(s.d.rows(), s.d.cols());
    for (std::size_t i = 0; i < lim && s.d(i, i) != 0; ++i) r.d.push_back(s.d(i, i));
    return r;
}

IntMat scaled_rows(const IntMat& w, const std::vector<Int>& scale) {
    IntMat m(scale.size(), w.cols());
    for (std::size_t i = 0; i < scale.size(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) m(i, j) = scale[i] * w(i, j);
    return m;
}

} // namespace

SpanPair span_lattice(const std::vector<Expo>& J, std::size_t n) {
    if (J.empty()) throw std::invalid_argument("empty exponent set");
    IntMat gens = IntMat::from_rows(J, n);
    SnfBasis sb = snf_basis(gens);
    std::vector<Int> ones(sb.d.size(), Int(1));
    SpanPair r;
    r.span = IntegerLattice(n, gens);
    r.ambient = IntegerLattice(n, scaled_rows(sb.w, ones));
    return r;
}

SaturationResult prime_to_p_saturation(const std::vector<Expo>& J, std::size_t n,
                                       const Int& p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    IntMat gens = IntMat::from_rows(J, n);
    SnfBasis sb = snf_basis(gens);
    Int index = 1;
    std::vector<Int> pparts;
    for (const Int& di : sb.d) {
        index *= di;
        auto [a, e] = p_part_split(di, p);
        pparts.push_back(pow_int(p, a));
    }
    auto [a, e] = p_part_split(index, p);
    SaturationResult r;
    r.m_j = IntegerLattice(n, scaled_rows(sb.w, pparts));
    r.full_index = IndexSplit{a, e};
    return r;
}

IndexSplit lattice_index(const IntegerLattice& sub, const IntegerLattice& super,
                         const Int& p) {
    if (sub.rank() != super.rank())
        throw std::invalid_argument("lattice_index: rank mismatch");
    long k = sub.rank();
    IntMat t(k, k);
    for (long i = 0; i < k; ++i) {
        Expo row(sub.ambient_dim());
        for (std::size_t j = 0; j < sub.ambient_dim(); ++j)
            row[j] = sub.basis()(i, j).convert_to<long long>();
        auto c = super.coords(row);
        if (!c) throw std::invalid_argument("lattice_index: sub not within super");
        for (long j = 0; j < k; ++j) {
            if (den((*c)[j]) != 1)
                throw std::invalid_argument("lattice_index: sub not within super");
            t(i, j) = num((*c)[j]);
        }
    }
    Int idx = abs(determinant(t));
    auto [a, e] = p_part_split(idx, p);
    return IndexSplit{a, e};
}

std::vector<LinearForm> dual_forms(const IntegerLattice& m, const Int& p, long a) {
    long k = m.rank();
    std::size_t n = m.ambient_dim();
    IntMat st = m.basis().transpose();  // n x k
    std::vector<LinearForm> forms;
    for (long i = 0; i < k; ++i) {
        std::vector<Rat> e(k, Rat(0)), c;
        e[i] = 1;
        if (!solve_left(st, e, c))
            throw std::runtime_error("dual form solve failed");
        forms.push_back(LinearForm{c, pow_int(p, a)});
    }
    return forms;
}

long stratum_index(const Expo& u, const std::vector<LinearForm>& forms, const Int& p) {
    long worst = 0;
    for (const auto& f : forms) {
        Rat v = f.eval(u);
        if (v == 0) continue;
        long ord = vp(v, p);
        if (-ord > worst) worst = -ord;
    }
    return worst;
}

PReduction reduce_relative(const std::vector<Expo>& support, std::size_t n,
                           const IntegerLattice& m, const Int& p) {
    SnfBasis sb = snf_basis(m.basis());
    std::size_t k = sb.d.size();
    PReduction red;
    red.unimodular_change = sb.w;
    red.d = sb.d;
    for (const Int& di : sb.d) {
        auto [b, e] = p_part_split(di, p);
        red.b.push_back(b);
        red.e.push_back(e);
    }
    for (std::size_t t = 0; t < support.size(); ++t) {
        const Expo& j = support[t];
        if (j.size() != n) throw std::invalid_argument("exponent size mismatch");
        // coords w.r.t. the u_i: j * W^{-1} = j * V
        Expo c(k);
        for (std::size_t col = 0; col < n; ++col) {
            Int s = 0;
            for (std::size_t row = 0; row < n; ++row) s += Int(j[row]) * sb.v(row, col);
            if (col < k) {
                if (s % sb.d[col] != 0)
                    throw std::invalid_argument("exponent not in lattice");
                c[col] = (s / sb.d[col]).convert_to<long long>();
            } else if (s != 0) {
                throw std::invalid_argument("exponent outside lattice span");
            }
        }
        red.g_terms.emplace_back(std::move(c), t);
    }
    return red;
}

PReduction p_power_reduce(const std::vector<Expo>& support, std::size_t n, const Int& p) {
    if (support.empty()) throw std::invalid_argument("empty support");
    IntegerLattice zj(n, IntMat::from_rows(support, n));
    return reduce_relative(support, n, zj, p);
}

Expo expand_exponent(const PReduction& red, const Expo& c) {
    std::size_t n = red.unimodular_change.cols();
    Expo j(n, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t col = 0; col < n; ++col)
            j[col] += (Int(c[i]) * red.d[i] * red.unimodular_change(i, col))
                          .convert_to<long long>();
    return j;
}

Expo reduced_exponent(const PReduction& red, const Expo& c) {
    Expo r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        r[i] = (Int(c[i]) * red.e[i]).convert_to<long long>();
    return r;
}

} // namespace latsum

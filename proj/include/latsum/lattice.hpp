#ifndef LATSUM_LATTICE_HPP
#define LATSUM_LATTICE_HPP

#include "latsum/intmat.hpp"

#include <optional>
#include <vector>

namespace latsum {

/// Lattice index written as p^a * e with (e,p)=1.
struct IndexSplit {
    long a = 0;
    Int e = 1;
    Int value(const Int& p) const { return pow_int(p, a) * e; }
    bool operator==(const IndexSplit&) const = default;
};

/// Full- or partial-rank sublattice of Z^n, basis rows in HNF so equality is
/// structural.
class IntegerLattice {
public:
    IntegerLattice() = default;
    /// Canonicalizes the generating rows via HNF.
    IntegerLattice(std::size_t ambient_dim, const IntMat& generators);

    std::size_t ambient_dim() const { return n_; }
    long rank() const { return static_cast<long>(basis_.rows()); }
    const IntMat& basis() const { return basis_; }

    /// Coordinates of u w.r.t. the basis, if u lies in the rational span.
    std::optional<std::vector<Rat>> coords(const Expo& u) const;
    bool contains(const Expo& u) const;
    bool contains(const IntegerLattice& sub) const;

    bool operator==(const IntegerLattice& o) const {
        return n_ == o.n_ && basis_ == o.basis_;
    }

private:
    std::size_t n_ = 0;
    IntMat basis_;  // rank x n, HNF
};

/// Rational linear form on the ambient saturated lattice; integral on M.
struct LinearForm {
    std::vector<Rat> coeff;
    Int denominator_bound = 1;  // p^a

    Rat eval(const Expo& u) const;
};

struct SpanPair {
    IntegerLattice span;     // Z<J>
    IntegerLattice ambient;  // Z^n cap R<J>, the saturation over Q
};

/// Z<J> together with its rational saturation.
SpanPair span_lattice(const std::vector<Expo>& J, std::size_t n);

struct SaturationResult {
    IntegerLattice m_j;       // prime-to-p saturation
    IndexSplit full_index;    // [ambient : Z<J>] = p^a e
};

/// Prime-to-p saturation M_J of Z<J>: SNF basis d_i u_i with d_i replaced by
/// its p-part.  [ambient : M_J] = p^a.
SaturationResult prime_to_p_saturation(const std::vector<Expo>& J, std::size_t n,
                                       const Int& p);

/// Exact index [super : sub] split as p^a e.  Requires sub within super at
/// equal rank.
IndexSplit lattice_index(const IntegerLattice& sub, const IntegerLattice& super,
                         const Int& p);

/// Dual basis forms of M extended to the saturated ambient lattice by
/// l(u) = p^-a l(p^a u).
std::vector<LinearForm> dual_forms(const IntegerLattice& m, const Int& p, long a);

/// Stratum index i of u: inf over forms of ord_p l(u) equals -i (0 if all
/// values are p-integral, i.e. u in M).
long stratum_index(const Expo& u, const std::vector<LinearForm>& forms, const Int& p);

/// Data of f = g(x_1^{d_1},...,x_k^{d_k}) after a unimodular coordinate change.
struct PReduction {
    IntMat unimodular_change;        // n x n, det +-1; rows = new basis u_i
    std::vector<Int> d;              // d_i, k entries
    std::vector<long> b;             // p-part exponents: d_i = p^{b_i} e_i
    std::vector<Int> e;              // prime-to-p parts
    std::vector<std::pair<Expo, std::size_t>> g_terms;  // exponent in Z^k -> index of source term
    // original exponent of source term j recovers as sum_i c_i d_i u_i
};

/// Decomposition of the exponents of `support` relative to the lattice M
/// (rows of basis d_i u_i); M must contain all of support.
PReduction reduce_relative(const std::vector<Expo>& support, std::size_t n,
                           const IntegerLattice& m, const Int& p);

/// p-power reduction of a support set: reduction relative to Z<J> itself.
PReduction p_power_reduce(const std::vector<Expo>& support, std::size_t n, const Int& p);

/// Reconstructs the original exponent of g-term c through the reduction data.
Expo expand_exponent(const PReduction& red, const Expo& c);

/// Same but substituting only the prime-to-p parts e_i (the fully p-reduced
/// polynomial g(x^{e_i}) keeps exponents in Z^k).
Expo reduced_exponent(const PReduction& red, const Expo& c);

} // namespace latsum

#endif

#ifndef LATSUM_NONDEG_HPP
#define LATSUM_NONDEG_HPP

#include "latsum/charsum.hpp"
#include "latsum/polytope.hpp"

#include <optional>

namespace latsum {

/// One Euler-operator system E_l(f_sigma) for a face sigma not containing the
/// origin.  Polynomials live in the same n variables as f.
struct FaceSystem {
    Face face;
    std::vector<Laurent> polys;
    std::vector<LinearForm> forms;
};

enum class NondegStatus { Degenerate, NondegenerateUpToDegree };

struct NondegWitness {
    int m = 1;                    // extension degree over the base field
    std::vector<FqElem> point;    // coordinates in F_{q^m}, all nonzero
    std::size_t face_index = 0;   // into the face-system list
};

/// A Degenerate verdict is a proof (witness re-verified); the other status is
/// evidence only, bounded by searched_bound.
struct NondegVerdict {
    NondegStatus status = NondegStatus::NondegenerateUpToDegree;
    std::optional<NondegWitness> witness;
    int searched_bound = 0;
};

inline constexpr int kDefaultMMax = 3;

/// Terms of f supported on the face.
Laurent face_polynomial(const Laurent& f, const NewtonPolytope& poly,
                        const Face& face);

/// One system per face not containing the origin, built from the dual-basis
/// forms of m.  Requires Z<J> within m within the saturated span (checked);
/// coefficients are (l_i(u) mod p) a_u with p-coprime denominators inverted.
std::vector<FaceSystem> build_face_systems(const Laurent& f, const Fq& field,
                                           const NewtonPolytope& poly,
                                           const IntegerLattice& m, const Int& p);

/// Exhaustive torus search over all extensions of degree <= m_max and all
/// face systems; first witness wins in (m, face, lex point) order.
NondegVerdict is_nondegenerate(const Laurent& f, const FieldSpec& spec,
                               const IntegerLattice& m, int m_max = kDefaultMMax,
                               std::uint64_t budget = kDefaultBudget);

/// Same verdict computed through the power-reduction change of variables:
/// f = g(x^{d_i}) with g tested relative to the full integer lattice, any
/// witness transported back and re-verified against f's own face systems.
NondegVerdict nondeg_via_reduction(const Laurent& f, const FieldSpec& spec,
                                   const IntegerLattice& m,
                                   int m_max = kDefaultMMax,
                                   std::uint64_t budget = kDefaultBudget);

} // namespace latsum

#endif

#ifndef LATSUM_POLYTOPE_HPP
#define LATSUM_POLYTOPE_HPP

#include "latsum/lattice.hpp"

#include <optional>
#include <set>
#include <vector>

namespace latsum {

/// A face of the polytope, identified by its vertex set.
struct Face {
    std::set<std::size_t> vertices;  // indices into NewtonPolytope::vertices()
    long dim = 0;
    bool contains_origin = false;    // origin lies on the face (as a point)
};

/// Facet inequality a.x <= b, valid on the polytope, tight on the facet.
/// Integer data, content-reduced.
struct Facet {
    std::vector<Int> normal;
    Int offset;
};

/// Newton polytope conv(J u {0}) with exact face data.  The polytope may be
/// lower-dimensional; all computations happen in coordinates w.r.t. the
/// saturated lattice of its linear span.
class NewtonPolytope {
public:
    explicit NewtonPolytope(const std::vector<Expo>& J, std::size_t n);

    std::size_t ambient_dim() const { return n_; }
    long dim() const { return dim_; }
    const std::vector<Expo>& vertices() const { return verts_; }
    /// Basis of Z^n cap span (rows); coordinates below refer to it.
    const IntegerLattice& span_lattice() const { return span_; }
    const std::vector<Facet>& facets() const { return facets_; }  // in span coords
    /// All proper faces plus the polytope itself, every dimension >= 0.
    const std::vector<Face>& faces() const { return faces_; }

    /// Faces (all dimensions, including the whole polytope when applicable)
    /// that do not contain the origin.
    std::vector<Face> faces_excluding_origin() const;
    /// Faces that contain the origin (the Eq-4.32-style index set).
    std::vector<Face> faces_containing_origin() const;

    /// Coordinates of an integer point w.r.t. the span lattice basis; nullopt
    /// if the point is off the linear span or non-integral there.
    std::optional<Expo> span_coords(const Expo& u) const;

    bool in_cone(const Expo& u) const;
    /// Exact weight w(u): smallest nonnegative lambda with u in lambda*polytope.
    /// Requires u in the cone.
    Rat weight(const Expo& u) const;
    /// N with w taking values in (1/N) Z on the cone's lattice points.
    Int weight_denominator() const;

    /// Is u (ambient coords) on the given face?
    bool point_on_face(const Face& face, const Expo& u) const;

    /// All lattice points of Z^n cap (dilation * polytope), ambient coords.
    std::vector<Expo> lattice_points(long dilation) const;

private:
    std::size_t n_;
    long dim_ = 0;
    std::vector<Expo> verts_;            // ambient coords; extreme points of conv(J u 0)
    std::vector<Expo> vert_coords_;      // span coords, parallel to verts_
    IntegerLattice span_;
    std::vector<Facet> facets_;
    std::vector<Face> faces_;
    std::optional<std::size_t> origin_vertex_;

    void enumerate_faces();
};

/// (dim)! * volume of conv(J_sigma u {0}) measured so a fundamental domain of
/// M has volume 1.  M must have the same rank as the polytope's span; the
/// result is asserted integral.
Int normalized_volume(const NewtonPolytope& poly, const IntegerLattice& m);

/// W_0(k) = #{u in M cap C(f) : w(u) = k/N} for k = 0..k_max.
std::vector<Int> counting_w0(const NewtonPolytope& poly, const IntegerLattice& m,
                             long k_max);

struct HilbertData {
    long k = 0;          // rank
    Int n_denom = 1;     // N
    std::vector<Int> a;  // a_0..a_{kN}
};

/// Numerator coefficients a_i of H(t) = sum W_0(i) t^{i/N} = (sum a_i t^{i/N})
/// / (1-t)^k, checked nonnegative with sum a_i = k! V_M.
HilbertData hilbert_numerator(const NewtonPolytope& poly, const IntegerLattice& m);

struct DilationSearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Smallest positive integer mu <= cap with mu*polytope containing a point of
/// M with all coordinates strictly positive.  Throws DilationSearchError at
/// the cap (inconclusive, not a disproof).
long mu_dilation(const NewtonPolytope& poly, const IntegerLattice& m, long cap);

/// Smallest weight of a point of M with all coordinates strictly positive
/// (exact rational), searching dilations up to cap.
Rat omega_dilation(const NewtonPolytope& poly, const IntegerLattice& m, long cap);

} // namespace latsum

#endif

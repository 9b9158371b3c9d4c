#include "latsum/formulas.hpp"

#include <stdexcept>

namespace latsum {

IntegerLattice intersect_with_span(const IntegerLattice& m,
                                   const std::vector<Expo>& gens, std::size_t n) {
    if (gens.empty()) return IntegerLattice(n, IntMat(0, n));
    IntMat s = span_lattice(gens, n).ambient.basis();
    IntMat k = left_kernel(s.transpose());        // functionals vanishing on span
    IntMat proj = m.basis() * k.transpose();      // coords x functionals
    IntMat c = left_kernel(proj);
    return IntegerLattice(n, c * m.basis());
}

std::vector<Expo> restrict_support(const std::vector<Expo>& J,
                                   const std::set<std::size_t>& a) {
    std::vector<Expo> r;
    for (const auto& e : J) {
        bool keep = true;
        for (std::size_t i : a)
            if (e[i] != 0) { keep = false; break; }
        if (keep) r.push_back(e);
    }
    return r;
}

namespace {

long support_dim(const std::vector<Expo>& J, std::size_t n) {
    if (J.empty()) return 0;
    return span_lattice(J, n).ambient.rank();
}

// (dim)! V w.r.t. M_J cut down to the span of the sub-support; the empty
// support (point polytope) counts as 1
Int face_term(const std::vector<Expo>& sub, std::size_t n,
              const IntegerLattice& m_full) {
    if (sub.empty()) return 1;
    NewtonPolytope poly(sub, n);
    if (poly.dim() == 0) return 1;
    return normalized_volume(poly, intersect_with_span(m_full, sub, n));
}

template <typename Fn>
void for_each_affine_subset(std::size_t torus_vars, std::size_t n, Fn&& fn) {
    std::size_t na = n - torus_vars;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << na); ++mask) {
        std::set<std::size_t> a;
        for (std::size_t i = 0; i < na; ++i)
            if (mask >> i & 1) a.insert(torus_vars + i);
        fn(a);
    }
}

} // namespace

bool convenient(const SupportInput& in) {
    long full = support_dim(in.J, in.n);
    bool ok = true;
    for_each_affine_subset(in.torus_vars, in.n, [&](const std::set<std::size_t>& a) {
        if (!ok || a.empty()) return;
        auto sub = restrict_support(in.J, a);
        if (support_dim(sub, in.n) != full - static_cast<long>(a.size()))
            ok = false;
    });
    return ok;
}

Int torus_degree_bound(const SupportInput& in, const Int& p) {
    auto sat = prime_to_p_saturation(in.J, in.n, p);
    NewtonPolytope poly(in.J, in.n);
    if (poly.dim() == 0) return 1;
    return normalized_volume(poly, sat.m_j);
}

Int nondeg_degree(const SupportInput& in, const Int& p) {
    return torus_degree_bound(in, p);
}

Int nu(const SupportInput& in, const Int& p) {
    auto sat = prime_to_p_saturation(in.J, in.n, p);
    Int acc = 0;
    for_each_affine_subset(in.torus_vars, in.n, [&](const std::set<std::size_t>& a) {
        auto sub = restrict_support(in.J, a);
        Int term = face_term(sub, in.n, sat.m_j);
        acc += (a.size() % 2 == 0) ? term : -term;
    });
    return acc;
}

Int katz_degree(const Int& p, long k, const Int& e, long n) {
    Int pk = pow_int(p, k);
    Int d = pk * e;
    Int sign = (n % 2 == 0) ? 1 : -1;
    Int numer = pow_int(d - 1, n) + sign * (pk - 1);
    if (numer % pk != 0) throw std::logic_error("katz degree not integral");
    return numer / pk;
}

Int dwork_degree(const Int& p, long k, const Int& e, long n) {
    Int pk = pow_int(p, k);
    if (pk * e != n) throw std::invalid_argument("n must equal p^k e");
    Int sign = (n % 2 == 0) ? 1 : -1;
    Int second = pow_int(e - 1, n) + sign * (e - 1);
    if (second % e != 0) throw std::logic_error("dwork degree not integral");
    return (pk - 1) * pow_int(e, n - 1) + second / e;
}

DivisibilityBounds cw_divisibility(const std::vector<std::vector<Expo>>& systems,
                                   std::size_t n, const Int& p, long cap) {
    std::size_t s = systems.size();
    if (s == 0) throw std::invalid_argument("empty system");
    std::vector<Expo> jf;
    for (std::size_t i = 0; i < s; ++i) {
        for (const auto& j : systems[i]) {
            if (j.size() != n) throw std::invalid_argument("exponent size mismatch");
            for (auto c : j)
                if (c < 0) throw std::invalid_argument("negative exponent");
            Expo lifted = j;
            lifted.resize(n + s, 0);
            lifted[n + i] = 1;
            jf.push_back(std::move(lifted));
        }
    }
    auto sat = prime_to_p_saturation(jf, n + s, p);
    NewtonPolytope poly(jf, n + s);
    long capv = cap > 0 ? cap : static_cast<long>(n + s + 1);

    DivisibilityBounds b;
    b.omega_minus_s = omega_dilation(poly, sat.m_j, capv) - static_cast<long>(s);
    if (s == 1)
        b.mu_minus_one = Rat(mu_dilation(poly, sat.m_j, capv) - 1);
    return b;
}

Int top_weight_count(const SupportInput& in, const Int& p) {
    auto sat = prime_to_p_saturation(in.J, in.n, p);
    NewtonPolytope poly(in.J, in.n);
    Int acc = 0;
    for (const auto& face : poly.faces_containing_origin()) {
        std::vector<Expo> sub;
        for (const auto& j : in.J)
            if (poly.point_on_face(face, j)) sub.push_back(j);
        Int term = face_term(sub, in.n, sat.m_j);
        long codim = poly.dim() - face.dim;
        acc += (codim % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace latsum

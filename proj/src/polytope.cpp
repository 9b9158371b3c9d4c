#include "latsum/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace latsum {

namespace {

// combinations chooser: visits all size-k index subsets of [0,n)
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                i = k + 1;
                break;
            }
        }
        if (i != k + 1) break;
    }
}

std::vector<Int> content_reduce(std::vector<Int> v, Int& offset) {
    Int g = abs(offset);
    for (const auto& c : v) g = gcd(g, c);
    if (g > 1) {
        for (auto& c : v) c /= g;
        offset /= g;
    }
    return v;
}

long affine_rank(const std::vector<Expo>& pts) {
    if (pts.empty()) return -1;
    if (pts.size() == 1) return 0;
    IntMat d(pts.size() - 1, pts[0].size());
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts[0].size(); ++j)
            d(i - 1, j) = pts[i][j] - pts[0][j];
    return rank(d);
}

} // namespace

NewtonPolytope::NewtonPolytope(const std::vector<Expo>& J, std::size_t n) : n_(n) {
    if (J.empty()) throw std::invalid_argument("empty exponent set");
    for (const auto& j : J)
        if (j.size() != n) throw std::invalid_argument("exponent size mismatch");

    std::vector<Expo> pts = J;
    pts.push_back(Expo(n, 0));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // saturated lattice of the linear span (origin is in the polytope, so the
    // affine span is the linear span of J)
    bool all_zero = true;
    for (const auto& j : J)
        for (auto c : j)
            if (c != 0) all_zero = false;
    if (all_zero) {
        dim_ = 0;
        verts_ = {Expo(n, 0)};
        vert_coords_ = {Expo{}};
        span_ = IntegerLattice(n, IntMat(0, n));
        origin_vertex_ = 0;
        Face whole;
        whole.vertices = {0};
        whole.dim = 0;
        whole.contains_origin = true;
        faces_.push_back(whole);
        return;
    }
    span_ = latsum::span_lattice(J, n).ambient;
    dim_ = span_.rank();

    std::vector<Expo> coords;
    for (const auto& p : pts) {
        auto c = span_coords(p);
        if (!c) throw std::logic_error("point off its own span");
        coords.push_back(*c);
    }

    // facet enumeration over the full candidate point set
    std::size_t k = static_cast<std::size_t>(dim_);
    std::vector<Facet> facets;
    for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& sub) {
        IntMat d(k - 1, k);
        for (std::size_t i = 1; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                d(i - 1, j) = coords[sub[i]][j] - coords[sub[0]][j];
        IntMat ker = left_kernel(d.transpose());
        if (ker.rows() != 1) return;  // not a hyperplane spanner
        std::vector<Int> a(k);
        for (std::size_t j = 0; j < k; ++j) a[j] = ker(0, j);
        Int b = 0;
        for (std::size_t j = 0; j < k; ++j) b += a[j] * coords[sub[0]][j];
        bool le = true, ge = true;
        for (const auto& c : coords) {
            Int s = 0;
            for (std::size_t j = 0; j < k; ++j) s += a[j] * c[j];
            if (s > b) le = false;
            if (s < b) ge = false;
        }
        if (!le && !ge) return;
        if (!le) {
            for (auto& x : a) x = -x;
            b = -b;
        }
        a = content_reduce(std::move(a), b);
        Facet f{a, b};
        for (const auto& g : facets)
            if (g.normal == f.normal && g.offset == f.offset) return;
        facets.push_back(std::move(f));
    });
    facets_ = std::move(facets);

    // vertices: points whose tight facet normals have full rank
    std::vector<std::size_t> vert_idx;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Expo> tight;
        for (const auto& f : facets_) {
            Int s = 0;
            for (std::size_t j = 0; j < k; ++j) s += f.normal[j] * coords[i][j];
            if (s == f.offset) {
                Expo row(k);
                for (std::size_t j = 0; j < k; ++j)
                    row[j] = f.normal[j].convert_to<long long>();
                tight.push_back(row);
            }
        }
        if (!tight.empty() &&
            rank(IntMat::from_rows(tight, k)) == static_cast<long>(k)) {
            vert_idx.push_back(i);
        }
    }
    for (std::size_t i : vert_idx) {
        bool origin = true;
        for (auto c : pts[i])
            if (c != 0) origin = false;
        if (origin) origin_vertex_ = verts_.size();
        verts_.push_back(pts[i]);
        vert_coords_.push_back(coords[i]);
    }

    enumerate_faces();
}

void NewtonPolytope::enumerate_faces() {
    std::size_t k = static_cast<std::size_t>(dim_);
    std::size_t nv = verts_.size();

    // tight vertex set of each facet
    std::vector<std::set<std::size_t>> facet_sets;
    for (const auto& f : facets_) {
        std::set<std::size_t> s;
        for (std::size_t i = 0; i < nv; ++i) {
            Int val = 0;
            for (std::size_t j = 0; j < k; ++j)
                val += f.normal[j] * vert_coords_[i][j];
            if (val == f.offset) s.insert(i);
        }
        facet_sets.push_back(std::move(s));
    }

    // close under intersection; faces are exactly the nonempty intersections
    std::set<std::set<std::size_t>> closed;
    std::set<std::size_t> whole;
    for (std::size_t i = 0; i < nv; ++i) whole.insert(i);
    closed.insert(whole);
    for (const auto& s : facet_sets)
        if (!s.empty()) closed.insert(s);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::set<std::size_t>> cur(closed.begin(), closed.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                std::set<std::size_t> inter;
                std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(),
                                      cur[j].end(),
                                      std::inserter(inter, inter.begin()));
                if (!inter.empty() && !closed.count(inter)) {
                    closed.insert(inter);
                    grew = true;
                }
            }
    }

    for (const auto& vset : closed) {
        Face f;
        f.vertices = vset;
        std::vector<Expo> fpts;
        for (std::size_t i : vset) fpts.push_back(vert_coords_[i]);
        f.dim = affine_rank(fpts);
        // origin on face iff it is tight on every facet tight on the face
        f.contains_origin = true;
        for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
            bool tight_on_face = std::includes(facet_sets[fi].begin(),
                                               facet_sets[fi].end(), vset.begin(),
                                               vset.end());
            if (tight_on_face && facets_[fi].offset != 0) {
                f.contains_origin = false;
                break;
            }
        }
        faces_.push_back(std::move(f));
    }
    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertices < b.vertices;
    });
}

std::vector<Face> NewtonPolytope::faces_excluding_origin() const {
    std::vector<Face> r;
    for (const auto& f : faces_)
        if (!f.contains_origin) r.push_back(f);
    return r;
}

std::vector<Face> NewtonPolytope::faces_containing_origin() const {
    std::vector<Face> r;
    for (const auto& f : faces_)
        if (f.contains_origin) r.push_back(f);
    return r;
}

std::optional<Expo> NewtonPolytope::span_coords(const Expo& u) const {
    if (u.size() != n_) throw std::invalid_argument("vector size mismatch");
    if (dim_ == 0) {
        for (auto c : u)
            if (c != 0) return std::nullopt;
        return Expo{};
    }
    auto c = span_.coords(u);
    if (!c) return std::nullopt;
    Expo r(c->size());
    for (std::size_t i = 0; i < c->size(); ++i) {
        if (den((*c)[i]) != 1) return std::nullopt;
        r[i] = num((*c)[i]).convert_to<long long>();
    }
    return r;
}

bool NewtonPolytope::in_cone(const Expo& u) const {
    auto c = span_coords(u);
    if (!c) return false;
    for (const auto& f : facets_) {
        if (f.offset != 0) continue;
        Int s = 0;
        for (std::size_t j = 0; j < c->size(); ++j) s += f.normal[j] * (*c)[j];
        if (s > 0) return false;
    }
    return true;
}

Rat NewtonPolytope::weight(const Expo& u) const {
    auto c = span_coords(u);
    if (!c || !in_cone(u)) throw std::invalid_argument("point outside the cone");
    Rat w = 0;
    for (const auto& f : facets_) {
        if (f.offset == 0) continue;
        Int s = 0;
        for (std::size_t j = 0; j < c->size(); ++j) s += f.normal[j] * (*c)[j];
        Rat cand(s, f.offset);
        if (cand > w) w = cand;
    }
    return w;
}

Int NewtonPolytope::weight_denominator() const {
    Int n = 1;
    for (const auto& f : facets_) {
        if (f.offset == 0) continue;
        Int g = 0;
        for (const auto& a : f.normal) g = gcd(g, a);
        Int b = f.offset;
        n = lcm(n, b / gcd(b, g));
    }
    // cross-check: N * w integral on the lattice points of small dilations
    long probe = std::max<long>(1, dim_);
    for (const auto& u : lattice_points(probe)) {
        Rat nw = weight(u) * n;
        if (den(nw) != 1) throw std::logic_error("weight denominator too small");
    }
    return n;
}

bool NewtonPolytope::point_on_face(const Face& face, const Expo& u) const {
    auto c = span_coords(u);
    if (!c) return false;
    std::size_t k = static_cast<std::size_t>(dim_);
    // u must satisfy all facets (be in the polytope's affine cone at level 1
    // is not required; only tightness on the face's facets plus membership)
    for (const auto& f : facets_) {
        Int s = 0;
        for (std::size_t j = 0; j < k; ++j) s += f.normal[j] * (*c)[j];
        if (s > f.offset) return false;
    }
    for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
        const auto& f = facets_[fi];
        bool tight_on_face = true;
        for (std::size_t vi : face.vertices) {
            Int s = 0;
            for (std::size_t j = 0; j < k; ++j)
                s += f.normal[j] * vert_coords_[vi][j];
            if (s != f.offset) { tight_on_face = false; break; }
        }
        if (!tight_on_face) continue;
        Int s = 0;
        for (std::size_t j = 0; j < k; ++j) s += f.normal[j] * (*c)[j];
        if (s != f.offset) return false;
    }
    return true;
}

std::vector<Expo> NewtonPolytope::lattice_points(long dilation) const {
    std::vector<Expo> out;
    if (dim_ == 0) {
        out.push_back(Expo(n_, 0));
        return out;
    }
    std::size_t k = static_cast<std::size_t>(dim_);
    std::vector<long long> lo(k, 0), hi(k, 0);
    for (const auto& c : vert_coords_)
        for (std::size_t j = 0; j < k; ++j) {
            lo[j] = std::min(lo[j], c[j] * dilation);
            hi[j] = std::max(hi[j], c[j] * dilation);
        }
    Expo c(k);
    for (std::size_t j = 0; j < k; ++j) c[j] = lo[j];
    while (true) {
        bool inside = true;
        for (const auto& f : facets_) {
            Int s = 0;
            for (std::size_t j = 0; j < k; ++j) s += f.normal[j] * c[j];
            if (s > f.offset * dilation) { inside = false; break; }
        }
        if (inside) {
            // map back to ambient coordinates
            Expo u(n_, 0);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t t = 0; t < n_; ++t)
                    u[t] += (Int(c[j]) * span_.basis()(j, t)).convert_to<long long>();
            out.push_back(std::move(u));
        }
        std::size_t j = 0;
        while (j < k) {
            if (++c[j] > hi[j]) {
                c[j] = lo[j];
                ++j;
            } else {
                break;
            }
        }
        if (j == k) break;
    }
    return out;
}

namespace {

// Combinatorial triangulation through the face lattice: cone each face from
// its smallest vertex over the triangulations of its subfacets.
void triangulate_face(const std::vector<Face>& all_faces, const Face& face,
                      std::vector<std::vector<std::size_t>>& out) {
    if (face.dim == 0) {
        out.push_back({*face.vertices.begin()});
        return;
    }
    if (static_cast<long>(face.vertices.size()) == face.dim + 1) {
        out.push_back({face.vertices.begin(), face.vertices.end()});
        return;
    }
    std::size_t apex = *face.vertices.begin();
    for (const auto& sub : all_faces) {
        if (sub.dim != face.dim - 1) continue;
        if (!std::includes(face.vertices.begin(), face.vertices.end(),
                           sub.vertices.begin(), sub.vertices.end()))
            continue;
        if (sub.vertices.count(apex)) continue;
        std::vector<std::vector<std::size_t>> subtris;
        triangulate_face(all_faces, sub, subtris);
        for (auto& s : subtris) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
}

} // namespace

Int normalized_volume(const NewtonPolytope& poly, const IntegerLattice& m) {
    long k = poly.dim();
    if (k == 0) return 1;
    if (m.rank() != k)
        throw std::invalid_argument("lattice rank != polytope dimension");

    // vertex coordinates w.r.t. the basis of m (rational in general)
    std::vector<std::vector<Rat>> mc;
    for (const auto& v : poly.vertices()) {
        auto c = m.coords(v);
        if (!c) throw std::invalid_argument("lattice does not span the polytope");
        mc.push_back(*c);
    }

    const Face* whole = nullptr;
    for (const auto& f : poly.faces())
        if (f.dim == k && static_cast<long>(f.vertices.size()) ==
                              static_cast<long>(poly.vertices().size()))
            whole = &f;
    if (!whole) throw std::logic_error("whole-polytope face missing");

    std::vector<std::vector<std::size_t>> tris;
    triangulate_face(poly.faces(), *whole, tris);

    Rat total = 0;
    for (const auto& t : tris) {
        // |det| of the k x k matrix of edge vectors, rational Gaussian elim
        std::vector<std::vector<Rat>> w(k, std::vector<Rat>(k));
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j)
                w[i][j] = mc[t[i + 1]][j] - mc[t[0]][j];
        Rat det = 1;
        bool singular = false;
        for (long col = 0; col < k && !singular; ++col) {
            long piv = col;
            while (piv < k && w[piv][col] == 0) ++piv;
            if (piv == k) { singular = true; break; }
            if (piv != col) { std::swap(w[piv], w[col]); det = -det; }
            det *= w[col][col];
            for (long i = col + 1; i < k; ++i) {
                if (w[i][col] == 0) continue;
                Rat f = w[i][col] / w[col][col];
                for (long j = col; j < k; ++j) w[i][j] -= f * w[col][j];
            }
        }
        if (!singular) total += boost::multiprecision::abs(det);
    }
    if (den(total) != 1)
        throw std::runtime_error("normalized volume not integral");
    return num(total);
}

std::vector<Int> counting_w0(const NewtonPolytope& poly, const IntegerLattice& m,
                             long k_max) {
    Int n = poly.weight_denominator();
    long dil = static_cast<long>((Int(k_max) + n - 1) / n);
    std::vector<Int> counts(static_cast<std::size_t>(k_max) + 1, Int(0));
    Rat limit(Int(k_max), n);
    for (const auto& u : poly.lattice_points(std::max<long>(dil, 0))) {
        if (!m.contains(u)) continue;
        Rat w = poly.weight(u);
        if (w > limit) continue;
        Rat idx = w * n;
        counts[num(idx).convert_to<std::size_t>()] += 1;
    }
    return counts;
}

HilbertData hilbert_numerator(const NewtonPolytope& poly, const IntegerLattice& m) {
    long k = poly.dim();
    Int n = poly.weight_denominator();
    long nn = n.convert_to<long>();
    long upper = (k + 1) * nn;  // slack of one extra N-block past kN
    std::vector<Int> w0 = counting_w0(poly, m, upper);

    HilbertData h;
    h.k = k;
    h.n_denom = n;
    Int sum = 0;
    for (long i = 0; i <= upper; ++i) {
        Int a = 0;
        for (long j = 0; j <= k; ++j) {
            long idx = i - j * nn;
            if (idx < 0) break;
            Int c = binomial(k, j) * w0[idx];
            a += (j % 2 == 0) ? c : -c;
        }
        if (i <= k * nn) {
            if (a < 0) throw std::runtime_error("negative Hilbert coefficient");
            h.a.push_back(a);
            sum += a;
        } else if (a != 0) {
            throw std::runtime_error("Hilbert numerator does not terminate by kN");
        }
    }
    Int vol = normalized_volume(poly, m);
    if (sum != vol)
        throw std::runtime_error("Hilbert numerator sum != normalized volume");
    return h;
}

long mu_dilation(const NewtonPolytope& poly, const IntegerLattice& m, long cap) {
    for (long mu = 1; mu <= cap; ++mu) {
        for (const auto& u : poly.lattice_points(mu)) {
            bool positive = true;
            for (auto c : u)
                if (c < 1) { positive = false; break; }
            if (positive && m.contains(u)) return mu;
        }
    }
    throw DilationSearchError("unbounded search: dilation cap reached");
}

Rat omega_dilation(const NewtonPolytope& poly, const IntegerLattice& m, long cap) {
    for (long d = 1; d <= cap; ++d) {
        std::optional<Rat> best;
        for (const auto& u : poly.lattice_points(d)) {
            bool positive = true;
            for (auto c : u)
                if (c < 1) { positive = false; break; }
            if (!positive || !m.contains(u)) continue;
            Rat w = poly.weight(u);
            if (!best || w < *best) best = w;
        }
        if (best) return *best;
    }
    throw DilationSearchError("unbounded search: dilation cap reached");
}

} // namespace latsum

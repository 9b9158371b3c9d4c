#include "latsum/nondeg.hpp"

#include <stdexcept>

namespace latsum {

namespace {

// l(u) mod p; denominator must be prime to p
int reduce_mod_p(const Rat& v, int p) {
    Int nu = num(v) % p;
    if (nu < 0) nu += p;
    Int de = den(v) % p;
    if (de == 0)
        throw std::runtime_error("form value has p-divisible denominator");
    long n = nu.convert_to<long>();
    long d = de.convert_to<long>();
    // inverse of d mod p by Fermat
    long inv = 1, base = d % p, e = p - 2;
    while (e > 0) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(n * inv % p);
}

bool all_zero_at(const std::vector<Laurent>& polys, const Fq& ext,
                 const std::vector<FqElem>& x) {
    for (const auto& g : polys)
        if (!ext.is_zero(evaluate(g, ext, x, nullptr))) return false;
    return true;
}

// lexicographically first common zero in the torus, or nullopt
std::optional<std::vector<std::uint64_t>> torus_zero(
    const std::vector<Laurent>& polys, const Fq& ext, std::size_t nvars) {
    std::uint64_t q = ext.size();
    std::vector<std::uint64_t> idx(nvars, 1);
    while (true) {
        std::vector<FqElem> x(nvars);
        for (std::size_t i = 0; i < nvars; ++i) x[i] = ext.elem(idx[i]);
        if (all_zero_at(polys, ext, x)) return idx;
        std::size_t i = nvars;
        while (i > 0) {
            --i;
            if (++idx[i] < q) break;
            idx[i] = 1;
            if (i == 0) return std::nullopt;
        }
    }
}

} // namespace

Laurent face_polynomial(const Laurent& f, const NewtonPolytope& poly,
                        const Face& face) {
    Laurent r(f.nvars);
    for (const auto& [e, c] : f.terms)
        if (poly.point_on_face(face, e)) r.terms.emplace(e, c);
    return r;
}

std::vector<FaceSystem> build_face_systems(const Laurent& f, const Fq& field,
                                           const NewtonPolytope& poly,
                                           const IntegerLattice& m, const Int& p) {
    auto J = f.support();
    auto sp = span_lattice(J, f.nvars);
    if (!m.contains(sp.span))
        throw std::invalid_argument("lattice does not contain the exponent span");
    if (!sp.ambient.contains(m))
        throw std::invalid_argument("lattice exceeds the saturated span");

    long a = lattice_index(m, sp.ambient, p).a;
    auto forms = dual_forms(m, p, a);
    int pi = p.convert_to<int>();

    std::vector<FaceSystem> systems;
    for (const auto& face : poly.faces_excluding_origin()) {
        FaceSystem sys;
        sys.face = face;
        sys.forms = forms;
        Laurent fs = face_polynomial(f, poly, face);
        for (const auto& form : forms) {
            Laurent g(f.nvars);
            for (const auto& [e, c] : fs.terms) {
                Rat v = form.eval(e);
                if (den(v) % p == 0 && num(v) % p != 0)
                    throw std::runtime_error(
                        "non-integral form value on exponent; lattice too small");
                g.add_term(field, e, field.scalar_mul(reduce_mod_p(v, pi), c));
            }
            sys.polys.push_back(std::move(g));
        }
        systems.push_back(std::move(sys));
    }
    return systems;
}

NondegVerdict is_nondegenerate(const Laurent& f, const FieldSpec& spec,
                               const IntegerLattice& m, int m_max,
                               std::uint64_t budget) {
    Fq base = spec.make_field();
    NewtonPolytope poly(f.support(), f.nvars);
    auto systems = build_face_systems(f, base, poly, m, Int(spec.p));

    for (int mext = 1; mext <= m_max; ++mext) {
        Fq ext = spec.make_extension(mext);
        std::uint64_t domain = 1;
        std::uint64_t qm1 = ext.size() - 1;
        for (std::size_t i = 0; i < f.nvars; ++i) {
            if (domain > budget / qm1) { domain = UINT64_MAX; break; }
            domain *= qm1;
        }
        if (domain > budget)
            throw BudgetExceeded("nondegeneracy search budget exceeded");

        FieldEmbedding embed(base, ext);
        for (std::size_t fi = 0; fi < systems.size(); ++fi) {
            std::vector<Laurent> polys;
            for (const auto& g : systems[fi].polys)
                polys.push_back(map_coefficients(g, embed));
            auto hit = torus_zero(polys, ext, f.nvars);
            if (hit) {
                NondegWitness w;
                w.m = mext;
                w.face_index = fi;
                for (std::size_t i = 0; i < f.nvars; ++i)
                    w.point.push_back(ext.elem((*hit)[i]));
                if (!all_zero_at(polys, ext, w.point))
                    throw std::logic_error("witness failed re-verification");
                return {NondegStatus::Degenerate, w, mext};
            }
        }
    }
    return {NondegStatus::NondegenerateUpToDegree, std::nullopt, m_max};
}

NondegVerdict nondeg_via_reduction(const Laurent& f, const FieldSpec& spec,
                                   const IntegerLattice& m, int m_max,
                                   std::uint64_t budget) {
    auto J = f.support();
    PReduction red = reduce_relative(J, f.nvars, m, Int(spec.p));
    std::size_t k = red.d.size();

    Fq base = spec.make_field();
    Laurent g(k);
    for (const auto& [c, src] : red.g_terms)
        g.add_term(base, c, f.terms.at(J[src]));

    IntegerLattice zk(k, IntMat::identity(k));
    NondegVerdict inner = is_nondegenerate(g, spec, zk, m_max, budget);
    if (inner.status != NondegStatus::Degenerate) return inner;

    // transport the witness y back: find t_i with t_i^{d_i} = y_i in a finite
    // extension, then x = t^{W^{-1}} through the unimodular change
    const auto& y = inner.witness->point;
    int mext = inner.witness->m;
    int s = 1;
    Fq src_field = spec.make_extension(mext);
    std::vector<FqElem> t;
    Fq ext = src_field;
    for (; s <= 6; ++s) {
        ext = spec.make_extension(mext * s);
        FieldEmbedding up(src_field, ext);
        t.clear();
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            FqElem target = up.map(y[i]);
            bool found = false;
            for (std::uint64_t idx = 1; idx < ext.size(); ++idx) {
                FqElem cand = ext.elem(idx);
                if (ext.pow(cand, red.d[i]) == target) {
                    t.push_back(cand);
                    found = true;
                    break;
                }
            }
            ok = found;
        }
        if (ok) break;
    }
    if (s > 6) throw std::runtime_error("witness transport: no d-th root found");

    IntMat winv = inverse_unimodular(red.unimodular_change);
    std::vector<FqElem> x(f.nvars);
    for (std::size_t j = 0; j < f.nvars; ++j) {
        FqElem acc = ext.one();
        for (std::size_t i = 0; i < k; ++i)
            acc = ext.mul(acc, ext.pow(t[i], winv(j, i)));
        x[j] = acc;
    }

    // locate and re-verify against f's own face systems
    NewtonPolytope poly(J, f.nvars);
    auto systems = build_face_systems(f, base, poly, m, Int(spec.p));
    FieldEmbedding embed(base, ext);
    for (std::size_t fi = 0; fi < systems.size(); ++fi) {
        std::vector<Laurent> polys;
        for (const auto& gp : systems[fi].polys)
            polys.push_back(map_coefficients(gp, embed));
        if (all_zero_at(polys, ext, x)) {
            NondegWitness w;
            w.m = mext * s;
            w.point = x;
            w.face_index = fi;
            return {NondegStatus::Degenerate, w, m_max};
        }
    }
    throw std::logic_error("transported witness matches no face system");
}

} // namespace latsum

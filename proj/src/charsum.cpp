#include "latsum/charsum.hpp"

namespace latsum {

FqElem evaluate(const Laurent& f, const Fq& field, const std::vector<FqElem>& x,
                const FieldEmbedding* embed) {
    FqElem acc = field.zero();
    for (const auto& [e, c] : f.terms) {
        FqElem term = embed ? embed->map(c) : c;
        for (std::size_t i = 0; i < f.nvars; ++i) {
            if (e[i] == 0) continue;
            term = field.mul(term, field.pow(x[i], Int(e[i])));
        }
        acc = field.add(acc, term);
    }
    return acc;
}

Laurent map_coefficients(const Laurent& f, const FieldEmbedding& embed) {
    Laurent r(f.nvars);
    for (const auto& [e, c] : f.terms) r.terms.emplace(e, embed.map(c));
    return r;
}

namespace {

std::uint64_t domain_size(std::uint64_t q, std::size_t nvars, std::size_t torus_vars) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < nvars; ++i) {
        std::uint64_t factor = (i < torus_vars) ? q - 1 : q;
        if (factor == 0) return 0;
        if (total > UINT64_MAX / factor) return UINT64_MAX;
        total *= factor;
    }
    return total;
}

// Index-based evaluator with precomputed mul/add tables; element index 0 is
// the zero element.  Only built for small fields, which covers every
// desk-scale sum; larger fields fall back to direct arithmetic.
class TableEval {
public:
    static constexpr std::uint64_t kMaxTableField = 2048;

    TableEval(const Fq& field, const std::vector<Laurent>& polys)
        : q_(static_cast<std::uint32_t>(field.size())) {
        mul_.resize(static_cast<std::size_t>(q_) * q_);
        add_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            FqElem ea = field.elem(a);
            for (std::uint32_t b = 0; b < q_; ++b) {
                FqElem eb = field.elem(b);
                mul_[static_cast<std::size_t>(a) * q_ + b] =
                    static_cast<std::uint16_t>(field.index(field.mul(ea, eb)));
                add_[static_cast<std::size_t>(a) * q_ + b] =
                    static_cast<std::uint16_t>(field.index(field.add(ea, eb)));
            }
        }
        trace_.resize(q_);
        for (std::uint32_t a = 0; a < q_; ++a)
            trace_[a] = field.trace_to_prime(field.elem(a));

        for (const auto& f : polys) {
            Poly fp;
            for (const auto& [e, c] : f.terms) {
                Term t;
                t.coeff = static_cast<std::uint16_t>(field.index(c));
                for (std::size_t i = 0; i < f.nvars; ++i) {
                    if (e[i] == 0) continue;
                    std::vector<std::uint16_t> pw(q_);
                    for (std::uint32_t a = 0; a < q_; ++a) {
                        if (a == 0 && e[i] < 0) { pw[a] = 0; continue; }
                        pw[a] = static_cast<std::uint16_t>(
                            field.index(field.pow(field.elem(a), Int(e[i]))));
                    }
                    t.vars.push_back(i);
                    t.pow_tables.push_back(std::move(pw));
                }
                fp.terms.push_back(std::move(t));
            }
            polys_.push_back(std::move(fp));
        }
    }

    std::uint16_t eval(std::size_t poly, const std::vector<std::uint32_t>& x) const {
        std::uint16_t acc = 0;
        for (const auto& t : polys_[poly].terms) {
            std::uint16_t m = t.coeff;
            for (std::size_t k = 0; k < t.vars.size(); ++k)
                m = mul_[static_cast<std::size_t>(m) * q_ + t.pow_tables[k][x[t.vars[k]]]];
            acc = add_[static_cast<std::size_t>(acc) * q_ + m];
        }
        return acc;
    }

    int trace(std::uint16_t idx) const { return trace_[idx]; }

private:
    struct Term {
        std::uint16_t coeff;
        std::vector<std::size_t> vars;
        std::vector<std::vector<std::uint16_t>> pow_tables;
    };
    struct Poly {
        std::vector<Term> terms;
    };
    std::uint32_t q_;
    std::vector<std::uint16_t> mul_, add_;
    std::vector<int> trace_;
    std::vector<Poly> polys_;
};

// Iterates index vectors over T^t x A^{n-t}; torus coordinates skip index 0.
template <typename Fn>
void for_each_index(std::uint64_t q, std::size_t nvars, std::size_t torus_vars,
                    Fn&& fn) {
    std::vector<std::uint32_t> idx(nvars, 0);
    for (std::size_t i = 0; i < torus_vars; ++i) idx[i] = 1;
    while (true) {
        fn(idx);
        std::size_t i = 0;
        while (i < nvars) {
            if (++idx[i] == q) {
                idx[i] = (i < torus_vars) ? 1 : 0;
                ++i;
            } else {
                break;
            }
        }
        if (i == nvars) break;
    }
}

} // namespace

Cyclo sum_mixed(const Laurent& f, const FieldSpec& spec, std::size_t torus_vars,
                int m, std::uint64_t budget) {
    if (torus_vars > f.nvars) throw std::invalid_argument("torus_vars > nvars");
    for (std::size_t i = torus_vars; i < f.nvars; ++i)
        if (f.uses_negative_exponents(i))
            throw std::invalid_argument("negative exponent on affine variable");

    Fq base = spec.make_field();
    Fq ext = spec.make_extension(m);
    std::uint64_t q = ext.size();
    if (domain_size(q, f.nvars, torus_vars) > budget)
        throw BudgetExceeded("character sum budget exceeded");

    FieldEmbedding embed(base, ext);
    Laurent fe = map_coefficients(f, embed);

    // counts per trace residue, then one cyclotomic combination at the end
    std::vector<Int> counts(static_cast<std::size_t>(spec.p), Int(0));
    if (q <= TableEval::kMaxTableField) {
        TableEval ev(ext, {fe});
        for_each_index(q, f.nvars, torus_vars, [&](const std::vector<std::uint32_t>& x) {
            ++counts[static_cast<std::size_t>(ev.trace(ev.eval(0, x)))];
        });
    } else {
        for_each_index(q, f.nvars, torus_vars, [&](const std::vector<std::uint32_t>& x) {
            std::vector<FqElem> pt(f.nvars);
            for (std::size_t i = 0; i < f.nvars; ++i) pt[i] = ext.elem(x[i]);
            ++counts[static_cast<std::size_t>(
                ext.trace_to_prime(evaluate(fe, ext, pt, nullptr)))];
        });
    }
    Cyclo s(spec.p);
    for (int t = 0; t < spec.p; ++t)
        s = s + Cyclo::zeta_pow(spec.p, t) * Rat(counts[t]);
    return s;
}

Int count_zeros(const std::vector<Laurent>& system, const FieldSpec& spec, int m,
                std::uint64_t budget) {
    if (system.empty()) throw std::invalid_argument("empty system");
    std::size_t nvars = system[0].nvars;
    for (const auto& f : system) {
        if (f.nvars != nvars) throw std::invalid_argument("mixed variable counts");
        for (std::size_t i = 0; i < nvars; ++i)
            if (f.uses_negative_exponents(i))
                throw std::invalid_argument("negative exponent in affine count");
    }
    Fq base = spec.make_field();
    Fq ext = spec.make_extension(m);
    std::uint64_t q = ext.size();
    if (domain_size(q, nvars, 0) > budget)
        throw BudgetExceeded("point count budget exceeded");

    FieldEmbedding embed(base, ext);
    std::vector<Laurent> sys;
    for (const auto& f : system) sys.push_back(map_coefficients(f, embed));

    Int n = 0;
    if (q <= TableEval::kMaxTableField) {
        TableEval ev(ext, sys);
        for_each_index(q, nvars, 0, [&](const std::vector<std::uint32_t>& x) {
            for (std::size_t s = 0; s < sys.size(); ++s)
                if (ev.eval(s, x) != 0) return;
            ++n;
        });
    } else {
        for_each_index(q, nvars, 0, [&](const std::vector<std::uint32_t>& x) {
            std::vector<FqElem> pt(nvars);
            for (std::size_t i = 0; i < nvars; ++i) pt[i] = ext.elem(x[i]);
            for (const auto& f : sys)
                if (!ext.is_zero(evaluate(f, ext, pt, nullptr))) return;
            ++n;
        });
    }
    return n;
}

} // namespace latsum

#ifndef LATSUM_LAURENT_HPP
#define LATSUM_LAURENT_HPP

#include "latsum/ffield.hpp"
#include "latsum/numbers.hpp"

#include <map>
#include <set>
#include <vector>

namespace latsum {

/// Laurent polynomial over F_q: exponent vector -> nonzero coefficient.
/// Coefficients live in the field passed alongside (context-style, the field
/// is not stored here).
struct Laurent {
    std::size_t nvars = 0;
    std::map<Expo, FqElem> terms;

    Laurent() = default;
    explicit Laurent(std::size_t n) : nvars(n) {}

    bool is_zero() const { return terms.empty(); }

    std::vector<Expo> support() const {
        std::vector<Expo> s;
        s.reserve(terms.size());
        for (const auto& [e, c] : terms) s.push_back(e);
        return s;
    }

    void add_term(const Fq& field, const Expo& e, const FqElem& c) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!field.is_zero(c)) terms.emplace(e, c);
        } else {
            it->second = field.add(it->second, c);
            if (field.is_zero(it->second)) terms.erase(it);
        }
    }

    /// Drops all monomials with j_i != 0 for some i in A (variables set to 0).
    Laurent restrict_away(const std::set<std::size_t>& a) const {
        Laurent r(nvars);
        for (const auto& [e, c] : terms) {
            bool keep = true;
            for (std::size_t i : a)
                if (e[i] != 0) { keep = false; break; }
            if (keep) r.terms.emplace(e, c);
        }
        return r;
    }

    bool uses_negative_exponents(std::size_t var) const {
        for (const auto& [e, c] : terms)
            if (e[var] < 0) return true;
        return false;
    }
};

/// Evaluates f at a point with coordinates in `field` (an extension of the
/// coefficient field; coefficients are mapped through `embed`, or taken as-is
/// when embed is null and the fields coincide).
FqElem evaluate(const Laurent& f, const Fq& field, const std::vector<FqElem>& x,
                const FieldEmbedding* embed);

/// Coefficient-wise map of f into an extension field.
Laurent map_coefficients(const Laurent& f, const FieldEmbedding& embed);

} // namespace latsum

#endif

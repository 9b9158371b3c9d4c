#ifndef LATSUM_FFIELD_HPP
#define LATSUM_FFIELD_HPP

#include "latsum/numbers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latsum {

/// Element of F_{p^deg} as a coefficient vector of length deg, entries in [0,p).
using FqElem = std::vector<int>;

/// F_{p^deg} = F_p[x]/(modulus), modulus monic irreducible.  All arithmetic is
/// exact table-free modular arithmetic; p and deg are desk-scale by design.
class Fq {
public:
    /// Uses the lexicographically smallest monic irreducible of degree deg.
    Fq(int p, int deg);
    /// User-supplied modulus (low-to-high coefficients, length deg+1, monic);
    /// irreducibility is re-verified.
    Fq(int p, std::vector<int> modulus);

    int p() const { return p_; }
    int deg() const { return deg_; }
    const std::vector<int>& modulus() const { return mod_; }
    std::uint64_t size() const { return size_; }

    FqElem zero() const { return FqElem(deg_, 0); }
    FqElem one() const;
    FqElem from_int(long long v) const;
    /// x, the residue of the generator.
    FqElem gen() const;
    /// Enumeration: index in [0, size) -> element, base-p digits.
    FqElem elem(std::uint64_t index) const;
    std::uint64_t index(const FqElem& x) const;

    bool is_zero(const FqElem& x) const;
    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem sub(const FqElem& a, const FqElem& b) const;
    FqElem neg(const FqElem& a) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem pow(FqElem a, Int e) const;
    FqElem inv(const FqElem& a) const;
    FqElem scalar_mul(int c, const FqElem& a) const;

    FqElem frobenius(const FqElem& x) const { return pow(x, p_); }

    /// Absolute trace down to F_p, returned as an integer in [0,p).
    int trace_to_prime(const FqElem& x) const;
    /// Trace onto the subfield F_{p^s} (s | deg), via the p^s-power Frobenius.
    FqElem trace_to_subfield(const FqElem& x, int s) const;

    /// A root in this field of a monic polynomial over F_p (low-to-high),
    /// smallest by enumeration order; used to embed F_{p^s} into F_{p^deg}.
    std::optional<FqElem> root_of(const std::vector<int>& poly) const;

    static std::vector<int> find_irreducible(int p, int deg);
    static bool is_irreducible(int p, const std::vector<int>& poly);

private:
    int p_;
    int deg_;
    std::vector<int> mod_;       // monic, length deg+1
    std::uint64_t size_;
};

/// Embedding of F_{p^s} into F_{p^t} (s | t): image of the small field's
/// generator, extended multiplicatively.
class FieldEmbedding {
public:
    FieldEmbedding(const Fq& from, const Fq& to);
    FqElem map(const FqElem& x) const;

private:
    const Fq* from_;
    const Fq* to_;
    std::vector<FqElem> gen_powers_;  // images of x^0..x^{s-1}
};

} // namespace latsum

#endif

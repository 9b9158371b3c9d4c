#ifndef LATSUM_CHARSUM_HPP
#define LATSUM_CHARSUM_HPP

#include "latsum/cyclotomic.hpp"
#include "latsum/laurent.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace latsum {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default evaluation budget: number of points visited per sum.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Describes the base field F_q = F_{p^r} of the coefficients.
struct FieldSpec {
    int p;
    int r;
    std::vector<int> modulus;  // degree-r modulus over F_p

    Fq make_field() const { return Fq(p, modulus); }
    /// The extension F_{q^m} as a single degree r*m extension of F_p.
    Fq make_extension(int m) const { return Fq(p, r * m); }

    static FieldSpec make(int p, int r) {
        return FieldSpec{p, r, Fq::find_irreducible(p, r)};
    }
};

/// S_m over the mixed domain T^k x A^{n-k}: the first `torus_vars` variables
/// range over F_{q^m}^x, the rest over F_{q^m}.  Laurent exponents are allowed
/// only on torus variables.  Character: Psi(x) = zeta_p^{absolute trace}.
Cyclo sum_mixed(const Laurent& f, const FieldSpec& spec, std::size_t torus_vars,
                int m, std::uint64_t budget = kDefaultBudget);

inline Cyclo sum_torus(const Laurent& f, const FieldSpec& spec, int m,
                       std::uint64_t budget = kDefaultBudget) {
    return sum_mixed(f, spec, f.nvars, m, budget);
}

inline Cyclo sum_affine(const Laurent& f, const FieldSpec& spec, int m,
                        std::uint64_t budget = kDefaultBudget) {
    return sum_mixed(f, spec, 0, m, budget);
}

/// Number of common zeros of the system over F_{q^m} (all variables affine).
Int count_zeros(const std::vector<Laurent>& system, const FieldSpec& spec, int m,
                std::uint64_t budget = kDefaultBudget);

} // namespace latsum

#endif

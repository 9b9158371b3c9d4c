#ifndef LATSUM_CYCLOTOMIC_HPP
#define LATSUM_CYCLOTOMIC_HPP

#include "latsum/numbers.hpp"

#include <optional>
#include <vector>

namespace latsum {

/// Element of Q(zeta_p) on the basis 1, zeta, ..., zeta^{p-2}; exact rational
/// coordinates, canonical under 1 + zeta + ... + zeta^{p-1} = 0.
class Cyclo {
public:
    Cyclo() : p_(2), c_(1, Rat(0)) {}
    explicit Cyclo(int p) : p_(p), c_(p - 1, Rat(0)) {}
    Cyclo(int p, std::vector<Rat> coords);

    static Cyclo from_rational(int p, const Rat& r);
    /// zeta_p^k (k mod p).
    static Cyclo zeta_pow(int p, long long k);

    int p() const { return p_; }
    const std::vector<Rat>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const { return c_[0]; }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator*(const Rat& r) const;
    Cyclo inverse() const;
    Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }
    bool operator==(const Cyclo& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

private:
    int p_;
    std::vector<Rat> c_;
};

/// (1-zeta_p)-adic valuation v of a nonzero element, as the exact count of
/// divisions by (1-zeta) after clearing the denominator, minus the
/// denominator's contribution.  Normalizations:
///   ord  x = v / (p-1)        (ord p = 1)
///   ord_q x = v / (r (p-1))   (ord_q q = 1, q = p^r)
/// Returns nullopt for the zero element (+infinity).
std::optional<Rat> ord_zeta(const Cyclo& x);
std::optional<Rat> ord_p(const Cyclo& x);
std::optional<Rat> ord_q(const Cyclo& x, int r);

} // namespace latsum

#endif

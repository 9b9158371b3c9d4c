#include "latsum/cyclotomic.hpp"

#include <stdexcept>

namespace latsum {

namespace {

// Rational polynomial helpers, low-to-high coefficients.

void trim(std::vector<Rat>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        std::size_t k = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
        trim(a);
    }
    return a;
}

} // namespace

Cyclo::Cyclo(int p, std::vector<Rat> coords) : p_(p), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) != p - 1)
        throw std::invalid_argument("coordinate vector must have length p-1");
}

Cyclo Cyclo::from_rational(int p, const Rat& r) {
    Cyclo x(p);
    x.c_[0] = r;
    return x;
}

Cyclo Cyclo::zeta_pow(int p, long long k) {
    k = ((k % p) + p) % p;
    Cyclo x(p);
    if (k < p - 1) {
        x.c_[k] = 1;
    } else {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (auto& c : x.c_) c = -1;
    }
    return x;
}

bool Cyclo::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    Cyclo r(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    Cyclo r(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Cyclo Cyclo::operator-() const {
    Cyclo r(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic orders");
    std::vector<Rat> prod(2 * p_ - 3, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            prod[i + j] += c_[i] * o.c_[j];
    }
    // fold exponents >= p-1: first zeta^{p+k} = zeta^k, then the relation
    Cyclo r(p_);
    std::vector<Rat> folded(static_cast<std::size_t>(p_), Rat(0));
    for (std::size_t i = 0; i < prod.size(); ++i) folded[i % p_] += prod[i];
    for (int i = 0; i < p_ - 1; ++i) r.c_[i] = folded[i] - folded[p_ - 1];
    return r;
}

Cyclo Cyclo::operator*(const Rat& s) const {
    Cyclo r(p_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    if (is_rational()) return from_rational(p_, Rat(1) / c_[0]);
    // extended Euclid of the representative against Phi_p over Q[x]
    std::vector<Rat> phi(static_cast<std::size_t>(p_), Rat(1));
    std::vector<Rat> a(c_.begin(), c_.end());
    trim(a);
    std::vector<Rat> r0 = phi, r1 = a;
    std::vector<Rat> t0, t1 = {Rat(1)};
    while (!r1.empty()) {
        // quotient of r0 by r1
        std::vector<Rat> q;
        std::vector<Rat> rem = r0;
        trim(rem);
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat c = rem.back() / r1.back();
            std::size_t k = rem.size() - r1.size();
            if (q.size() < k + 1) q.resize(k + 1, Rat(0));
            q[k] += c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[k + i] -= c * r1[i];
            trim(rem);
        }
        // t2 = t0 - q*t1
        std::vector<Rat> qt(q.size() + t1.size(), Rat(0));
        if (!q.empty() && !t1.empty()) {
            qt.assign(q.size() + t1.size() - 1, Rat(0));
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < t1.size(); ++j)
                    qt[i + j] += q[i] * t1[j];
        } else {
            qt.clear();
        }
        std::vector<Rat> t2(std::max(t0.size(), qt.size()), Rat(0));
        for (std::size_t i = 0; i < t0.size(); ++i) t2[i] += t0[i];
        for (std::size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        trim(t2);
        r0 = r1; r1 = rem;
        t0 = t1; t1 = t2;
    }
    if (r0.size() != 1) throw std::logic_error("element not invertible mod Phi_p");
    // inverse representative = t0 / r0[0], reduced mod Phi_p
    std::vector<Rat> invrep = poly_rem(t0, phi);
    Cyclo r(p_);
    for (std::size_t i = 0; i < invrep.size() && i < r.c_.size(); ++i)
        r.c_[i] = invrep[i] / r0[0];
    // poly_rem against Phi_p leaves degree <= p-2, so it fits the basis
    if (invrep.size() > r.c_.size()) throw std::logic_error("reduction failed");
    return r;
}

std::optional<Rat> ord_zeta(const Cyclo& x) {
    if (x.is_zero()) return std::nullopt;
    int p = x.p();
    // clear the denominator
    Int d = 1;
    for (const auto& c : x.coords()) d = lcm(d, den(c));
    std::vector<Int> y(x.coords().size());
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = num(x.coords()[i] * d);
    long denom_p = vp(d, p);

    long v = 0;
    while (true) {
        Int at_one = 0;
        for (const auto& c : y) at_one += c;
        if (at_one % p != 0) break;
        // z = y - (y(1)/p) Phi_p vanishes at 1; divide by (x-1)
        Int c = at_one / p;
        std::vector<Int> z(static_cast<std::size_t>(p), Int(0));
        for (std::size_t i = 0; i < y.size(); ++i) z[i] = y[i] - c;
        z[p - 1] = -c;
        // synthetic division by (x-1): q_i = z_{i+1} + q_{i+1}
        std::vector<Int> q(static_cast<std::size_t>(p) - 1, Int(0));
        Int carry = 0;
        for (int i = p - 1; i >= 1; --i) {
            carry += z[i];
            q[i - 1] = carry;
        }
        // y/(1-zeta) = -q(zeta)
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = -q[i];
        ++v;
        bool zero = true;
        for (const auto& cc : y)
            if (cc != 0) { zero = false; break; }
        if (zero) throw std::logic_error("nonzero element exhausted");
    }
    return Rat(Int(v)) - Rat(Int(denom_p)) * (p - 1);
}

std::optional<Rat> ord_p(const Cyclo& x) {
    auto v = ord_zeta(x);
    if (!v) return std::nullopt;
    return *v / (x.p() - 1);
}

std::optional<Rat> ord_q(const Cyclo& x, int r) {
    auto v = ord_zeta(x);
    if (!v) return std::nullopt;
    return *v / (Int(r) * (x.p() - 1));
}

} // namespace latsum

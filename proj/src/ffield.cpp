#include "latsum/ffield.hpp"

#include <stdexcept>

namespace latsum {

namespace {

// Polynomial helpers over F_p, low-to-high coefficient vectors.

void trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    // m monic of degree d
    int d = static_cast<int>(m.size()) - 1;
    trim(a);
    while (static_cast<int>(a.size()) - 1 >= d) {
        int k = static_cast<int>(a.size()) - 1 - d;
        int c = a.back();
        for (int i = 0; i <= d; ++i)
            a[k + i] = ((a[k + i] - c * m[i]) % p + p * p) % p;
        trim(a);
    }
    return a;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& m, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(r), m, p);
}

std::vector<int> poly_pow_mod(std::vector<int> a, Int e, const std::vector<int>& m,
                              int p) {
    std::vector<int> r = {1};
    a = poly_mod(std::move(a), m, p);
    while (e > 0) {
        if (e % 2 == 1) r = poly_mul_mod(r, a, m, p);
        a = poly_mul_mod(a, a, m, p);
        e /= 2;
    }
    return r;
}

std::vector<int> poly_gcd(std::vector<int> a, std::vector<int> b, int p) {
    trim(a); trim(b);
    while (!b.empty()) {
        // a mod b with b made monic
        int lead = b.back();
        int inv = 1;
        for (int t = 1; t < p; ++t)
            if (lead * t % p == 1) { inv = t; break; }
        std::vector<int> bm = b;
        for (auto& c : bm) c = c * inv % p;
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
        trim(b);
    }
    return a;
}

} // namespace

bool Fq::is_irreducible(int p, const std::vector<int>& poly) {
    std::vector<int> m = poly;
    trim(m);
    int d = static_cast<int>(m.size()) - 1;
    if (d < 1 || m.back() != 1) return false;
    // x^{p^d} == x mod m, and gcd(x^{p^{d/l}} - x, m) = 1 for primes l | d
    std::vector<int> x = {0, 1};
    std::vector<int> xp = poly_pow_mod(x, pow_int(p, d), m, p);
    std::vector<int> diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    diff = poly_mod(std::move(diff), m, p);
    if (!diff.empty()) return false;
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool lprime = true;
        for (int t = 2; t * t <= l; ++t)
            if (l % t == 0) { lprime = false; break; }
        if (!lprime) continue;
        std::vector<int> xq = poly_pow_mod(x, pow_int(p, d / l), m, p);
        std::vector<int> g = xq;
        g.resize(std::max<std::size_t>(g.size(), 2), 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        trim(g);
        std::vector<int> gg = poly_gcd(m, g, p);
        if (static_cast<int>(gg.size()) - 1 != 0) return false;
    }
    return true;
}

std::vector<int> Fq::find_irreducible(int p, int deg) {
    if (deg == 1) return {0, 1};  // x
    // scan monic polynomials x^deg + c_{deg-1}x^{deg-1} + ... + c_0 in
    // lexicographic order of (c_0, c_1, ...)
    std::vector<int> c(deg, 0);
    while (true) {
        std::vector<int> m = c;
        m.push_back(1);
        if (is_irreducible(p, m)) return m;
        int i = 0;
        while (i < deg && ++c[i] == p) { c[i] = 0; ++i; }
        if (i == deg) throw std::runtime_error("no irreducible found");
    }
}

Fq::Fq(int p, int deg) : Fq(p, find_irreducible(p, deg)) {}

Fq::Fq(int p, std::vector<int> modulus) : p_(p), mod_(std::move(modulus)) {
    if (!is_prime(Int(p))) throw std::invalid_argument("p not prime");
    for (auto& c : mod_) c = (c % p + p) % p;
    deg_ = static_cast<int>(mod_.size()) - 1;
    if (deg_ < 1 || mod_.back() != 1)
        throw std::invalid_argument("modulus must be monic of positive degree");
    if (!is_irreducible(p, mod_)) throw std::invalid_argument("modulus reducible");
    size_ = 1;
    for (int i = 0; i < deg_; ++i) size_ *= static_cast<std::uint64_t>(p);
}

FqElem Fq::one() const {
    FqElem e(deg_, 0);
    e[0] = 1;
    return e;
}

FqElem Fq::from_int(long long v) const {
    FqElem e(deg_, 0);
    e[0] = static_cast<int>(((v % p_) + p_) % p_);
    return e;
}

FqElem Fq::gen() const {
    FqElem e(deg_, 0);
    if (deg_ == 1) {
        e[0] = poly_mod({0, 1}, mod_, p_).empty() ? 0
             : poly_mod({0, 1}, mod_, p_)[0];
    } else {
        e[1] = 1;
    }
    return e;
}

FqElem Fq::elem(std::uint64_t index) const {
    FqElem e(deg_, 0);
    for (int i = 0; i < deg_; ++i) {
        e[i] = static_cast<int>(index % p_);
        index /= p_;
    }
    return e;
}

std::uint64_t Fq::index(const FqElem& x) const {
    std::uint64_t r = 0;
    for (int i = deg_ - 1; i >= 0; --i) r = r * p_ + x[i];
    return r;
}

bool Fq::is_zero(const FqElem& x) const {
    for (int c : x)
        if (c != 0) return false;
    return true;
}

FqElem Fq::add(const FqElem& a, const FqElem& b) const {
    FqElem r(deg_);
    for (int i = 0; i < deg_; ++i) {
        r[i] = a[i] + b[i];
        if (r[i] >= p_) r[i] -= p_;
    }
    return r;
}

FqElem Fq::sub(const FqElem& a, const FqElem& b) const {
    FqElem r(deg_);
    for (int i = 0; i < deg_; ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) r[i] += p_;
    }
    return r;
}

FqElem Fq::neg(const FqElem& a) const { return sub(zero(), a); }

FqElem Fq::mul(const FqElem& a, const FqElem& b) const {
    std::vector<int> r = poly_mul_mod(a, b, mod_, p_);
    r.resize(deg_, 0);
    return r;
}

FqElem Fq::scalar_mul(int c, const FqElem& a) const {
    c = (c % p_ + p_) % p_;
    FqElem r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = a[i] * c % p_;
    return r;
}

FqElem Fq::pow(FqElem a, Int e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    FqElem r = one();
    while (e > 0) {
        if (e % 2 == 1) r = mul(r, a);
        a = mul(a, a);
        e /= 2;
    }
    return r;
}

FqElem Fq::inv(const FqElem& a) const {
    if (is_zero(a)) throw std::invalid_argument("inverse of zero");
    return pow(a, Int(size_) - 2);
}

int Fq::trace_to_prime(const FqElem& x) const {
    FqElem s = zero();
    FqElem y = x;
    for (int i = 0; i < deg_; ++i) {
        s = add(s, y);
        y = frobenius(y);
    }
    for (int i = 1; i < deg_; ++i)
        if (s[i] != 0) throw std::logic_error("trace left the prime field");
    return s[0];
}

FqElem Fq::trace_to_subfield(const FqElem& x, int s) const {
    if (s <= 0 || deg_ % s != 0) throw std::invalid_argument("incompatible tower");
    FqElem acc = zero();
    FqElem y = x;
    Int qs = pow_int(p_, s);
    for (int i = 0; i < deg_ / s; ++i) {
        acc = add(acc, y);
        y = pow(y, qs);
    }
    return acc;
}

std::optional<FqElem> Fq::root_of(const std::vector<int>& poly) const {
    for (std::uint64_t i = 0; i < size_; ++i) {
        FqElem x = elem(i);
        FqElem acc = zero();
        FqElem xp = one();
        for (std::size_t j = 0; j < poly.size(); ++j) {
            acc = add(acc, scalar_mul(poly[j], xp));
            xp = mul(xp, x);
        }
        if (is_zero(acc)) return x;
    }
    return std::nullopt;
}

FieldEmbedding::FieldEmbedding(const Fq& from, const Fq& to)
    : from_(&from), to_(&to) {
    if (from.p() != to.p() || to.deg() % from.deg() != 0)
        throw std::invalid_argument("no embedding between these fields");
    FqElem root;
    if (from.deg() == 1) {
        root = to.zero();  // unused
    } else {
        auto r = to.root_of(from.modulus());
        if (!r) throw std::runtime_error("embedding root not found");
        root = *r;
    }
    FqElem pw = to.one();
    for (int i = 0; i < from.deg(); ++i) {
        gen_powers_.push_back(pw);
        if (from.deg() > 1) pw = to.mul(pw, root);
    }
}

FqElem FieldEmbedding::map(const FqElem& x) const {
    FqElem r = to_->zero();
    for (int i = 0; i < from_->deg(); ++i)
        r = to_->add(r, to_->scalar_mul(x[i], gen_powers_[i]));
    return r;
}

} // namespace latsum

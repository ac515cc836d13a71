#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace gradecone {

// Prime field element. Value is always canonical in [0, p); p < 2^31 and prime.
// The modulus travels with the element so mixed-modulus arithmetic can be caught.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t value, std::uint32_t p) : p_(p) {
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    static Fp zero(std::uint32_t p) { return Fp(0, p); }
    static Fp one(std::uint32_t p) { return Fp(1, p); }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
        if (s >= p_) s -= p_;
        return make(static_cast<std::uint32_t>(s), p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        std::uint64_t s = static_cast<std::uint64_t>(v_) + p_ - o.v_;
        if (s >= p_) s -= p_;
        return make(static_cast<std::uint32_t>(s), p_);
    }
    Fp operator*(const Fp& o) const {
        check(o);
        std::uint64_t s = static_cast<std::uint64_t>(v_) * o.v_ % p_;
        return make(static_cast<std::uint32_t>(s), p_);
    }
    Fp operator-() const { return make(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid on (v, p); p prime so gcd = 1
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        std::int64_t r = x0 % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return make(static_cast<std::uint32_t>(r), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }

    bool operator==(const Fp& o) const { check(o); return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp make(std::uint32_t v, std::uint32_t p) {
        Fp r; r.v_ = v; r.p_ = p; return r;
    }
    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli");
    }
    std::uint32_t v_;
    std::uint32_t p_;
};

// Exact rational. Canonical form: lowest terms, positive denominator
// (mpq_class canonicalization guarantees both).
class Rat {
public:
    Rat() : q_(0) {}
    explicit Rat(std::int64_t n) : q_(static_cast<long>(n)) {}
    Rat(std::int64_t n, std::int64_t d) : q_(static_cast<long>(n), static_cast<long>(d)) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    static Rat from_decimal_string(const std::string& digits) {
        return Rat(mpq_class(digits, 10));
    }

    static Rat zero() { return Rat(); }
    static Rat one() { return Rat(1); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }

    Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1 / q_));
    }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(q_ / o.q_));
    }

    bool operator==(const Rat& o) const { return q_ == o.q_; }
    bool operator!=(const Rat& o) const { return q_ != o.q_; }

    std::string str() const { return q_.get_str(); }
    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

// Field context: constructs constants for a fixed field choice. Polynomials
// carry one of these through their ring so parsing and arithmetic agree on
// the coefficient domain.
struct FpContext {
    using Elem = Fp;
    std::uint32_t p;
    Fp zero() const { return Fp::zero(p); }
    Fp one() const { return Fp::one(p); }
    Fp from_int(std::int64_t n) const { return Fp(n, p); }
    Fp from_decimal_string(const std::string& s) const {
        // reduce digit by digit; avoids any intermediate overflow
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
        std::uint64_t acc = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Fp: bad integer literal");
            acc = (acc * 10 + static_cast<std::uint64_t>(s[i] - '0')) % p;
        }
        Fp r(static_cast<std::int64_t>(acc), p);
        return neg ? -r : r;
    }
    bool operator==(const FpContext& o) const { return p == o.p; }
};

struct RatContext {
    using Elem = Rat;
    Rat zero() const { return Rat::zero(); }
    Rat one() const { return Rat::one(); }
    Rat from_int(std::int64_t n) const { return Rat(n); }
    Rat from_decimal_string(const std::string& s) const { return Rat::from_decimal_string(s); }
    bool operator==(const RatContext&) const { return true; }
};

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

constexpr std::uint32_t kDefaultPrime = 32003;

} // namespace gradecone

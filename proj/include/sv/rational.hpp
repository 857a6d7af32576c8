#pragma once

#include <gmpxx.h>

#include <string>

#include "sv/errors.hpp"
#include "sv/rng.hpp"

namespace sv {

// Exact rational coefficients.  GMP keeps every value in lowest terms with a
// positive denominator, which is exactly the canonical form we promise.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw UsageError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class& v) : v_(v) {}

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw UsageError("rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw UsageError("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    std::string str() const { return v_.get_str(); }

    // Field-context helpers shared with Fp so templated code can make
    // constants and samples without a separate traits layer.
    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }
    Rational from_int_like(long long n) const { return Rational(n); }
    Rational from_string_like(const std::string& digits) const {
        return Rational(mpz_class(digits));
    }
    // Coefficient sampling for genericity: uniform integers in [-10^6, 10^6].
    Rational sample_like(RandomSource& rng) const {
        return Rational(rng.range(-1000000, 1000000));
    }
    Rational nonzero_sample_like(RandomSource& rng) const {
        for (;;) {
            Rational r = sample_like(rng);
            if (!r.is_zero()) return r;
        }
    }

    static constexpr bool is_prime_field = false;
    static std::string field_name() { return "q"; }

private:
    mpq_class v_;
};

} // namespace sv

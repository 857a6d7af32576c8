#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "sv/errors.hpp"
#include "sv/rng.hpp"

namespace sv {

// Prime-field residues on 64 bits.  The modulus rides along in every element
// (16 bytes per coefficient is nothing at this scale) so values stay
// self-describing and the type works for any prime the user picks.  Products
// go through unsigned __int128; the modulus is capped below 2^62 so sums of
// two residues never overflow.
class Fp {
public:
    // 2^62 - 57, the largest prime below the modulus cap.
    static constexpr std::uint64_t default_prime = 4611686018427387847ULL;
    static constexpr std::uint64_t max_modulus = 1ULL << 62;

    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    static Fp from_signed(long long value, std::uint64_t p) {
        long long r = value % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        std::uint64_t s = v_ + p_ - o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    Fp operator*(const Fp& o) const {
        check(o);
        unsigned __int128 prod = static_cast<unsigned __int128>(v_) * o.v_;
        return raw(static_cast<std::uint64_t>(prod % p_), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {
        if (v_ == 0) throw UsageError("inverse of zero");
        // extended Euclid; p < 2^62 keeps all intermediates in int64 range
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_);
        std::int64_t nr = static_cast<std::int64_t>(v_);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return raw(static_cast<std::uint64_t>(t), p_);
    }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

    Fp zero_like() const { return raw(0, p_); }
    Fp one_like() const { return raw(1 % p_, p_); }
    Fp from_int_like(long long n) const { return from_signed(n, p_); }
    Fp from_string_like(const std::string& digits) const {
        mpz_class z(digits);
        mpz_class r = z % static_cast<unsigned long>(p_);
        if (r < 0) r += static_cast<unsigned long>(p_);
        return raw(r.get_ui(), p_);
    }
    // Coefficient sampling for genericity: uniform over the nonzero residues.
    Fp sample_like(RandomSource& rng) const { return nonzero_sample_like(rng); }
    Fp nonzero_sample_like(RandomSource& rng) const {
        return raw(1 + rng.below(p_ - 1), p_);
    }

    static bool is_valid_modulus(std::uint64_t p) {
        if (p < 2 || p >= max_modulus) return false;
        mpz_class z(std::to_string(p));
        return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
    }

    static constexpr bool is_prime_field = true;
    std::string field_name() const { return "fp " + std::to_string(p_); }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp x; x.v_ = v; x.p_ = p; return x;
    }
    void check(const Fp& o) const {
        if (p_ != o.p_) throw UsageError("mixed prime-field moduli");
    }

    std::uint64_t v_, p_;
};

} // namespace sv

#ifndef EHSHIFT_BIGNAT_HPP
#define EHSHIFT_BIGNAT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace ehshift {

/// Arbitrary-precision natural number. Thin value wrapper around GMP's
/// mpz_class restricted to nonnegative exact arithmetic.
class BigNat {
public:
    BigNat() : v_(0) {}
    BigNat(std::uint64_t x) : v_() { set_u64(x); }

    static BigNat pow2(std::uint64_t exponent) {
        BigNat r;
        mpz_ui_pow_ui(r.v_.get_mpz_t(), 2, exponent);
        return r;
    }

    BigNat plus(std::uint64_t x) const {
        BigNat r = *this;
        BigNat add(x);
        r.v_ += add.v_;
        return r;
    }

    BigNat shifted_right(unsigned bits) const {
        BigNat r = *this;
        mpz_fdiv_q_2exp(r.v_.get_mpz_t(), v_.get_mpz_t(), bits);
        return r;
    }

    /// Number of bits in the binary representation; 0 for zero.
    std::uint64_t bit_length() const {
        if (v_ == 0) return 0;
        return mpz_sizeinbase(v_.get_mpz_t(), 2);
    }

    bool is_power_of_two() const {
        return v_ > 0 && mpz_popcount(v_.get_mpz_t()) == 1;
    }

    /// Exact base-2 logarithm, when the value is a power of two.
    std::optional<std::uint64_t> log2_exact() const {
        if (!is_power_of_two()) return std::nullopt;
        return bit_length() - 1;
    }

    std::optional<std::uint64_t> to_u64() const {
        if (!v_.fits_ulong_p()) return std::nullopt;
        return static_cast<std::uint64_t>(v_.get_ui());
    }

    std::string to_string() const { return v_.get_str(); }

    friend bool operator==(const BigNat& a, const BigNat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigNat& a, const BigNat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigNat& a, const BigNat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigNat& a, const BigNat& b) { return a.v_ <= b.v_; }

private:
    void set_u64(std::uint64_t x) {
        mpz_import(v_.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
    }
    mpz_class v_;
};

} // namespace ehshift

#endif

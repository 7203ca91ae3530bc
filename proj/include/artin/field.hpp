#ifndef ARTIN_FIELD_HPP
#define ARTIN_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "artin/errors.hpp"

namespace artin {

/// Arithmetic in the prime field F_p, 2 <= p < 2^31.
/// Elements are canonical residues in [0, p) stored as uint32_t;
/// all operations return canonical residues.
class PrimeField {
public:
    explicit PrimeField(uint32_t p) : p_(p) {
        if (!is_prime(p))
            throw input_error("PrimeField: modulus " + std::to_string(p) + " is not prime");
        if (p >= (1u << 31))
            throw input_error("PrimeField: modulus must be < 2^31");
    }

    uint32_t modulus() const { return p_; }

    uint32_t reduce(uint64_t a) const { return static_cast<uint32_t>(a % p_); }
    uint32_t reduce_signed(long long a) const {
        long long r = a % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }
    uint32_t pow(uint32_t a, uint64_t n) const {
        uint32_t r = 1 % p_;
        while (n) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

private:
    uint32_t p_;
};

} // namespace artin

#endif

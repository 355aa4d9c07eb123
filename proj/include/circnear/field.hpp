#pragma once

/**
 * @file field.hpp
 * @brief Exact arithmetic in the prime field Z_p.
 *
 * Two layers are provided. PrimeField works on raw residues and is what the
 * combinatorial code uses in its inner loops; FieldElement is a small value
 * type carrying its modulus, used at API boundaries where mixing elements of
 * different fields must be rejected.
 *
 * Moduli are restricted to 3 <= p < 2^31 so that every product fits in a
 * 64-bit intermediate.
 */

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace circnear {

using Residue = std::uint32_t;

/// Largest accepted modulus (exclusive).
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

/// Deterministic primality for 64-bit inputs. Throws std::domain_error if n < 2.
bool is_prime(std::uint64_t n);

/// Distinct prime factors of n, ascending. n >= 1.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

class FieldElement;

class PrimeField {
public:
    /// Throws std::domain_error unless p is a prime with 3 <= p < 2^31.
    explicit PrimeField(std::uint64_t p);

    static std::shared_ptr<const PrimeField> make(std::uint64_t p) {
        return std::make_shared<const PrimeField>(p);
    }

    Residue modulus() const noexcept { return p_; }
    Residue reduce(std::int64_t x) const noexcept {
        const auto m = static_cast<std::int64_t>(p_);
        return static_cast<Residue>(((x % m) + m) % m);
    }

    Residue add(Residue a, Residue b) const noexcept {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Residue>(s >= p_ ? s - p_ : s);
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>((std::uint64_t{a} * b) % p_);
    }
    Residue pow(Residue base, std::uint64_t exponent) const noexcept;
    /// Throws std::domain_error for a == 0.
    Residue inv(Residue a) const;

    /// Smallest k >= 1 with g^k = 1. Throws std::domain_error for g == 0.
    std::uint64_t mult_order(Residue g) const;

    /// Smallest positive residue of multiplicative order p - 1.
    Residue primitive_root() const noexcept { return primitive_root_; }

    /// The unique e in [0, p-2] with base^e = x. base must be a primitive root
    /// and x nonzero; both violations throw std::domain_error.
    std::uint64_t discrete_log(Residue base, Residue x) const;

    /// Index of x with respect to primitive_root(). x nonzero.
    std::uint64_t index(Residue x) const;

    FieldElement element(std::int64_t value) const;

private:
    const std::vector<std::uint32_t>& log_table() const;

    Residue p_;
    Residue primitive_root_;
    std::vector<std::uint64_t> order_factors_;  // prime factors of p - 1
    mutable std::once_flag log_once_;
    mutable std::vector<std::uint32_t> log_;
};

/// A residue tagged with its modulus. Operations between elements of
/// different fields throw std::domain_error.
class FieldElement {
public:
    FieldElement(Residue modulus, Residue value) : p_(modulus), v_(value % modulus) {}

    Residue value() const noexcept { return v_; }
    Residue modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }
    FieldElement operator-() const { return {p_, v_ == 0 ? 0 : p_ - v_}; }

    FieldElement inv() const;
    FieldElement pow(std::uint64_t exponent) const;

    bool operator==(const FieldElement&) const = default;

private:
    void check_same_field(const FieldElement& o) const;

    Residue p_;
    Residue v_;
};

}  // namespace circnear

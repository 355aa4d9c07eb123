#include "circnear/field.hpp"

#include <stdexcept>
#include <string>

namespace circnear {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(u128{a} * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1) result = mulmod64(result, base, m);
        base = mulmod64(base, base, m);
        e >>= 1;
    }
    return result;
}

// Modular inverse by extended Euclid; gcd(a, m) must be 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    const auto mm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) throw std::domain_error("is_prime: input must be >= 2, got " + std::to_string(n));
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % q == 0) return n == q;
    }
    // Miller-Rabin with the first twelve primes as bases is exact below 3.3e24.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

PrimeField::PrimeField(std::uint64_t p) {
    if (p < 3 || p >= kMaxModulus)
        throw std::domain_error("modulus must satisfy 3 <= p < 2^31, got " + std::to_string(p));
    if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
    p_ = static_cast<Residue>(p);
    order_factors_ = prime_factors(p - 1);
    primitive_root_ = 0;
    for (Residue g = 2; g < p_; ++g) {
        if (mult_order(g) == p_ - 1u) {
            primitive_root_ = g;
            break;
        }
    }
}

Residue PrimeField::pow(Residue base, std::uint64_t exponent) const noexcept {
    return static_cast<Residue>(powmod64(base, exponent, p_));
}

Residue PrimeField::inv(Residue a) const {
    if (a % p_ == 0) throw std::domain_error("cannot invert zero");
    return static_cast<Residue>(inverse_mod(a, p_));
}

std::uint64_t PrimeField::mult_order(Residue g) const {
    if (g % p_ == 0) throw std::domain_error("multiplicative order of zero is undefined");
    std::uint64_t order = p_ - 1u;
    for (std::uint64_t q : order_factors_) {
        while (order % q == 0 && pow(g, order / q) == 1) order /= q;
    }
    return order;
}

const std::vector<std::uint32_t>& PrimeField::log_table() const {
    std::call_once(log_once_, [this] {
        log_.assign(p_, 0);
        Residue x = 1;
        for (std::uint32_t e = 0; e + 1 < p_; ++e) {
            log_[x] = e;
            x = mul(x, primitive_root_);
        }
    });
    return log_;
}

std::uint64_t PrimeField::index(Residue x) const {
    if (x % p_ == 0) throw std::domain_error("discrete log of zero is undefined");
    return log_table()[x % p_];
}

std::uint64_t PrimeField::discrete_log(Residue base, Residue x) const {
    if (x % p_ == 0) throw std::domain_error("discrete log of zero is undefined");
    if (base % p_ == 0 || mult_order(base) != p_ - 1u)
        throw std::domain_error("discrete_log base " + std::to_string(base) + " is not a primitive root");
    const std::uint64_t n = p_ - 1u;
    const std::uint64_t ix = index(x);
    const std::uint64_t ib = index(base);
    // base = w^ib with gcd(ib, n) = 1, so log_base(x) = ix * ib^{-1} mod n.
    if (n == 1) return 0;
    return mulmod64(ix, inverse_mod(ib, n), n);
}

FieldElement PrimeField::element(std::int64_t value) const { return {p_, reduce(value)}; }

void FieldElement::check_same_field(const FieldElement& o) const {
    if (p_ != o.p_)
        throw std::domain_error("mixing elements of Z_" + std::to_string(p_) + " and Z_" +
                                std::to_string(o.p_));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    return {p_, static_cast<Residue>((std::uint64_t{v_} + o.v_) % p_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(o);
    return {p_, static_cast<Residue>((std::uint64_t{v_} + p_ - o.v_) % p_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    return {p_, static_cast<Residue>(std::uint64_t{v_} * o.v_ % p_)};
}

FieldElement FieldElement::inv() const {
    if (v_ == 0) throw std::domain_error("cannot invert zero");
    return {p_, static_cast<Residue>(inverse_mod(v_, p_))};
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    return {p_, static_cast<Residue>(powmod64(v_, exponent, p_))};
}

}  // namespace circnear

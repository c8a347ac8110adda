#include "funceq/prime_field.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace funceq {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p, std::uint32_t modulus_cap) : p_(p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not prime");
    }
    // Hard limit independent of the caller's cap: residue sums must fit in
    // 32 bits and residue products in 64 bits.
    if (p >= (1u << 31) || p > modulus_cap) {
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                    " exceeds cap " + std::to_string(modulus_cap));
    }
}

std::uint32_t PrimeField::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b; // p < 2^16 keeps this well inside 32 bits
    return s >= p_ ? s - p_ : s;
}

std::uint32_t PrimeField::sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
}

std::uint32_t PrimeField::mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
}

std::uint32_t PrimeField::neg(std::uint32_t a) const {
    return a == 0 ? 0 : p_ - a;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
    // Extended Euclid on (a, p); the Bezout coefficient of a is the inverse.
    std::int64_t old_r = a, r = p_;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return reduce(old_s);
}

std::uint32_t PrimeField::reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

bool PrimeField::uniquely_divisible_by(std::uint64_t n) const {
    return std::gcd(n, static_cast<std::uint64_t>(p_)) == 1;
}

namespace {

void require_same_modulus(Elem a, Elem b) {
    if (a.modulus != b.modulus) {
        throw std::invalid_argument("Elem: mixed moduli " + std::to_string(a.modulus) +
                                    " and " + std::to_string(b.modulus));
    }
}

// Elements only exist for already-validated fields, so rebuilding the field
// here must not re-apply the default cap.
PrimeField field_of(Elem a) {
    return PrimeField(a.modulus, ~0u);
}

} // namespace

Elem make_elem(const PrimeField& field, std::int64_t v) {
    return Elem{field.reduce(v), field.modulus()};
}

Elem add(Elem a, Elem b) {
    require_same_modulus(a, b);
    return Elem{field_of(a).add(a.value, b.value), a.modulus};
}

Elem mul(Elem a, Elem b) {
    require_same_modulus(a, b);
    return Elem{field_of(a).mul(a.value, b.value), a.modulus};
}

Elem neg(Elem a) {
    return Elem{field_of(a).neg(a.value), a.modulus};
}

Elem inv(Elem a) {
    return Elem{field_of(a).inv(a.value), a.modulus};
}

} // namespace funceq

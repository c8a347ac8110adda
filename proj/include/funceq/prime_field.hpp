#pragma once

#include <compare>
#include <cstdint>

namespace funceq {

// Default upper bound on the modulus. The dense solver is O(p^4), so larger
// primes are rejected unless the caller raises the cap explicitly.
inline constexpr std::uint32_t kDefaultModulusCap = 1u << 16;

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

/// The finite field Z_p for prime p. Residues are kept canonical in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p, std::uint32_t modulus_cap = kDefaultModulusCap);

    std::uint32_t modulus() const { return p_; }

    // Raw residue arithmetic. Inputs must already be canonical.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t inv(std::uint32_t a) const; // throws std::domain_error for a = 0

    /// Canonical residue of an arbitrary signed integer.
    std::uint32_t reduce(std::int64_t v) const;

    /// True iff multiplication by n is a bijection on Z_p, i.e. gcd(n, p) = 1.
    bool uniquely_divisible_by(std::uint64_t n) const;

    auto operator<=>(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

/// A field element tagged with its modulus; mixing moduli is rejected.
struct Elem {
    std::uint32_t value = 0;
    std::uint32_t modulus = 0;

    auto operator<=>(const Elem&) const = default;
};

Elem make_elem(const PrimeField& field, std::int64_t v);

Elem add(Elem a, Elem b);
Elem mul(Elem a, Elem b);
Elem neg(Elem a);
Elem inv(Elem a);

} // namespace funceq

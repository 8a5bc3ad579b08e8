#pragma once

// p-adic valuations on Z and Z[x], factorial valuations, and the exact
// rationals used for Newton-polygon slopes.

#include "phiirred/zpoly.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace phiirred {

/// A nonnegative integer or +infinity (the valuation of zero).
class ExtendedNat {
public:
    constexpr ExtendedNat() = default;
    constexpr ExtendedNat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    static constexpr ExtendedNat infinity() {
        ExtendedNat e;
        e.value_.reset();
        return e;
    }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    /// Throws std::domain_error on infinity.
    std::uint64_t value() const;

    friend constexpr bool operator==(const ExtendedNat&, const ExtendedNat&) = default;
    friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
        return *a.value_ <=> *b.value_;
    }
    friend constexpr ExtendedNat operator+(const ExtendedNat& a, const ExtendedNat& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return ExtendedNat(*a.value_ + *b.value_);
    }

    /// Decimal digits, or "inf".
    std::string to_string() const;

private:
    std::optional<std::uint64_t> value_ = std::uint64_t{0};
};

/// Exact rational in lowest terms with positive denominator.
class Ratio {
public:
    Ratio() = default;
    Ratio(const Integer& num, const Integer& den);
    explicit Ratio(const Integer& n) : Ratio(n, 1) {}

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    /// Always "num/den", including "0/1".
    std::string to_string() const;
    /// Parses "num/den" (or a bare integer); normalizes.
    static Ratio parse(const std::string& s);

    friend bool operator==(const Ratio& a, const Ratio& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

private:
    Integer num_ = 0;
    Integer den_ = 1;
};

ExtendedNat vp(const Integer& b, std::uint64_t p);
ExtendedNat vpx(const IntPoly& f, std::uint64_t p);
/// Legendre: sum over i of floor(m / p^i).
std::uint64_t vp_factorial(std::uint64_t m, std::uint64_t p);

}  // namespace phiirred

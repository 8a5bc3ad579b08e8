#include "phiirred/valuation.hpp"

#include <stdexcept>

#include "phiirred/poly_io.hpp"

namespace phiirred {

std::uint64_t ExtendedNat::value() const {
    if (!value_) throw std::domain_error("valuation is infinite");
    return *value_;
}

std::string ExtendedNat::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

Ratio::Ratio(const Integer& num, const Integer& den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

std::string Ratio::to_string() const { return num_.get_str() + "/" + den_.get_str(); }

Ratio Ratio::parse(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Ratio(parse_integer(s));
    return Ratio(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    const Integer lhs = a.num_ * b.den_;
    const Integer rhs = b.num_ * a.den_;
    const int c = cmp(lhs, rhs);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

ExtendedNat vp(const Integer& b, std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("vp needs a prime p >= 2");
    if (b == 0) return ExtendedNat::infinity();
    Integer rest = b;
    std::uint64_t e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p));
        ++e;
    }
    return e;
}

ExtendedNat vpx(const IntPoly& f, std::uint64_t p) {
    ExtendedNat best = ExtendedNat::infinity();
    for (const auto& c : f.coeffs()) {
        if (c == 0) continue;
        best = std::min(best, vp(c, p));
        if (best == ExtendedNat(0)) break;
    }
    return best;
}

std::uint64_t vp_factorial(std::uint64_t m, std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("vp_factorial needs a prime p >= 2");
    std::uint64_t total = 0;
    for (std::uint64_t q = m / p; q > 0; q /= p) total += q;
    return total;
}

}  // namespace phiirred

#include "phiirred/fppoly.hpp"

#include <stdexcept>
#include <string>

namespace phiirred {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

u64 inverse_mod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void require_same_modulus(const FpPoly& a, const FpPoly& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                                    std::to_string(b.modulus()));
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint32_t> primes_below(u64 bound, bool inclusive) {
    std::vector<std::uint32_t> out;
    const u64 last = inclusive ? bound : (bound == 0 ? 0 : bound - 1);
    for (u64 q = 2; q <= last; ++q)
        if (is_prime(q)) out.push_back(static_cast<std::uint32_t>(q));
    return out;
}

std::vector<std::uint32_t> first_primes(std::size_t count) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 2; out.size() < count; ++q)
        if (is_prime(q)) out.push_back(q);
    return out;
}

u64 smallest_prime_factor(u64 n) {
    if (n < 2) throw std::invalid_argument("smallest_prime_factor needs n >= 2");
    for (u64 q = 2; q * q <= n; ++q)
        if (n % q == 0) return q;
    return n;
}

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
    for (auto& c : c_) c %= p_;
    normalize();
}

void FpPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly reduce_mod_p(const IntPoly& f, u64 p) {
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
    if (p >= (u64{1} << 31)) throw std::invalid_argument("modulus must be < 2^31");
    std::vector<u64> out;
    out.reserve(f.size());
    for (const auto& c : f.coeffs()) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
    return FpPoly(static_cast<std::uint32_t>(p), std::move(out));
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    require_same_modulus(a, b);
    const u64 p = a.modulus();
    std::vector<u64> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        u64 x = i < a.coeffs().size() ? a.coeffs()[i] : 0;
        u64 y = i < b.coeffs().size() ? b.coeffs()[i] : 0;
        out[i] = (x + y) % p;
    }
    return FpPoly(a.modulus(), std::move(out));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    require_same_modulus(a, b);
    const u64 p = a.modulus();
    std::vector<u64> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        u64 x = i < a.coeffs().size() ? a.coeffs()[i] : 0;
        u64 y = i < b.coeffs().size() ? b.coeffs()[i] : 0;
        out[i] = (x + p - y) % p;
    }
    return FpPoly(a.modulus(), std::move(out));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    require_same_modulus(a, b);
    if (a.is_zero() || b.is_zero()) return FpPoly(a.modulus());
    const u64 p = a.modulus();
    std::vector<u64> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const u64 ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] = (out[i + j] + ai * b.coeffs()[j]) % p;
    }
    return FpPoly(a.modulus(), std::move(out));
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
    require_same_modulus(a, b);
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const u64 p = a.modulus();
    if (a.is_zero() || a.degree() < b.degree()) return {FpPoly(a.modulus()), a};
    std::vector<u64> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = b.degree();
    const u64 inv = inverse_mod(b.leading(), p);
    std::vector<u64> quo(rem.size() - db, 0);
    for (std::size_t i = rem.size(); i-- > db;) {
        const u64 q = mulmod(rem[i], inv, p);
        if (q == 0) continue;
        quo[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = (rem[i - db + j] + p - mulmod(q, bc[j], p)) % p;
    }
    rem.resize(db);
    return {FpPoly(a.modulus(), std::move(quo)), FpPoly(a.modulus(), std::move(rem))};
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b).second; }

FpPoly fp_make_monic(const FpPoly& a) {
    if (a.is_zero() || a.leading() == 1) return a;
    const u64 p = a.modulus();
    const u64 inv = inverse_mod(a.leading(), p);
    std::vector<u64> out = a.coeffs();
    for (auto& c : out) c = mulmod(c, inv, p);
    return FpPoly(a.modulus(), std::move(out));
}

FpPoly fp_derivative(const FpPoly& a) {
    if (a.coeffs().size() <= 1) return FpPoly(a.modulus());
    const u64 p = a.modulus();
    std::vector<u64> out(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) out[i - 1] = mulmod(a.coeffs()[i], i % p, p);
    return FpPoly(a.modulus(), std::move(out));
}

FpPoly fp_powmod(const FpPoly& base, u64 e, const FpPoly& m) {
    FpPoly result = fp_rem(FpPoly::one(m.modulus()), m);
    FpPoly b = fp_rem(base, m);
    while (e) {
        if (e & 1) result = fp_rem(fp_mul(result, b), m);
        e >>= 1;
        if (e) b = fp_rem(fp_mul(b, b), m);
    }
    return result;
}

FpPoly gcd_fp(const FpPoly& a, const FpPoly& b) {
    require_same_modulus(a, b);
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = fp_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return fp_make_monic(x);
}

FpPoly frobenius_power(const FpPoly& base, const FpPoly& modulus, unsigned e) {
    if (modulus.is_zero() || modulus.degree() < 1 || modulus.leading() != 1)
        throw std::invalid_argument("frobenius_power: modulus must be monic of degree >= 1");
    FpPoly h = fp_rem(base, modulus);
    for (unsigned i = 0; i < e; ++i) h = fp_powmod(h, modulus.modulus(), modulus);
    return h;
}

bool is_irreducible_fp(const FpPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("irreducibility test needs degree >= 1");
    const FpPoly g = fp_make_monic(f);
    const std::size_t d = g.degree();
    if (d == 1) return true;
    const u64 p = g.modulus();
    const FpPoly x = fp_rem(FpPoly::x(g.modulus()), g);

    // x^(p^d) == x mod g, and no proper subfield F_{p^(d/q)} contains a root.
    std::vector<FpPoly> frob{x};  // frob[i] = x^(p^i) mod g
    frob.reserve(d + 1);
    for (std::size_t i = 1; i <= d; ++i) frob.push_back(fp_powmod(frob.back(), p, g));
    if (!(frob[d] == x)) return false;
    std::size_t rest = d;
    for (std::size_t q = 2; q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        if (!gcd_fp(fp_sub(frob[d / q], x), g).is_one()) return false;
    }
    return true;
}

bool is_irreducible_mod_p(const IntPoly& f, u64 p) {
    if (f.is_constant()) throw std::invalid_argument("irreducibility mod p is undefined for constants");
    const FpPoly r = reduce_mod_p(f, p);
    if (r.is_zero() || r.degree() != *f.degree())
        throw std::invalid_argument("leading coefficient divisible by p = " + std::to_string(p) +
                                    " (degree drops under reduction)");
    return is_irreducible_fp(r);
}

IrreducibilityReport irreducible_mod_all_primes_below(const IntPoly& phi, u64 bound, bool inclusive) {
    if (!phi.is_monic() || phi.is_constant()) throw std::invalid_argument("phi must be monic of degree >= 1");
    IrreducibilityReport rep;
    rep.bound = bound;
    rep.inclusive = inclusive;
    for (std::uint32_t q : primes_below(bound, inclusive)) {
        const bool ok = is_irreducible_mod_p(phi, q);
        rep.per_prime.emplace_back(q, ok);
        rep.all_irreducible = rep.all_irreducible && ok;
    }
    return rep;
}

std::vector<std::pair<FpPoly, std::size_t>> squarefree_decomposition(const FpPoly& f) {
    if (f.is_zero() || f.leading() != 1) throw std::invalid_argument("squarefree_decomposition needs a monic input");
    const std::uint32_t p = f.modulus();
    std::vector<std::pair<FpPoly, std::size_t>> out;
    if (f.degree() == 0) return out;

    FpPoly c = gcd_fp(f, fp_derivative(f));
    FpPoly w = fp_divmod(f, c).first;
    std::size_t i = 1;
    while (!w.is_one()) {
        FpPoly y = gcd_fp(w, c);
        FpPoly fac = fp_divmod(w, y).first;
        if (!fac.is_one()) out.emplace_back(fp_make_monic(fac), i);
        w = y;
        c = fp_divmod(c, y).first;
        ++i;
    }
    if (!c.is_one()) {
        // c is a p-th power; over F_p, a^(1/p) = a, so take every p-th coefficient.
        std::vector<u64> root;
        for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
        for (auto& [g, m] : squarefree_decomposition(fp_make_monic(FpPoly(p, std::move(root)))))
            out.emplace_back(std::move(g), m * p);
    }
    return out;
}

DegreeMultiset distinct_degree_factor(const FpPoly& squarefree_monic) {
    DegreeMultiset out;
    FpPoly g = squarefree_monic;
    if (g.is_zero() || g.degree() == 0) return out;
    const u64 p = g.modulus();
    const FpPoly x = FpPoly::x(g.modulus());
    FpPoly h = fp_rem(x, g);
    for (std::size_t i = 1; 2 * i <= g.degree(); ++i) {
        h = fp_powmod(h, p, g);
        FpPoly d = gcd_fp(g, fp_sub(h, x));
        if (!d.is_one()) {
            out[i] += d.degree() / i;
            g = fp_divmod(g, d).first;
            h = fp_rem(h, g);
        }
    }
    if (g.degree() > 0) out[g.degree()] += 1;
    return out;
}

DegreeMultiset distinct_degree_factor_mod_p(const IntPoly& f, u64 p) {
    if (f.is_zero()) throw std::invalid_argument("factor degrees of the zero polynomial");
    const FpPoly r = reduce_mod_p(f, p);
    if (r.is_zero() || r.degree() != *f.degree())
        throw std::invalid_argument("leading coefficient divisible by p = " + std::to_string(p) +
                                    " (degree drops under reduction)");
    DegreeMultiset out;
    for (const auto& [g, mult] : squarefree_decomposition(fp_make_monic(r)))
        for (const auto& [deg, cnt] : distinct_degree_factor(g)) out[deg] += cnt * mult;
    return out;
}

}  // namespace phiirred

#pragma once

// Classical Hermite polynomials
//   H_m(x) = sum_{j=0}^{[m/2]} (-1)^j C(m,2j) u_{2j} x^{m-2j}
// and the generalized phi-Hermite family
//   H^phi_m = a_{[m/2]} phi^m + sum_{j=1}^{[m/2]} C(m,2j) u_{2j} a_{[m/2]-j}(x) phi^{m-2j}.
//
// With m = 2n + (c/2) and b_j(x) = C(n,j) a_j(x):
//   H^phi_{2n}         = u_{2n}   * f_1   (c = 0 instance on the b_j)
//   H^phi_{2n+1} / phi = u_{2n+2} * f_2   (c = 2 instance on the b_j)

#include "phiirred/certifier.hpp"
#include "phiirred/execution.hpp"
#include "phiirred/zpoly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace phiirred {

/// m odd and equal to 3^u with u >= 2.
class HermiteExcluded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct HermiteSpec {
    unsigned m = 0;
    IntPoly phi;
    Integer a_top;
    /// a_0(x) ... a_{[m/2]-1}(x).
    std::vector<IntPoly> a_low;

    /// Throws std::invalid_argument on a malformed spec.
    void validate() const;
};

/// Theorem form checks primes <= m; the corollary on H_m(phi(x)) checks primes < m.
enum class HermiteBound { theorem, corollary };

/// Row m of Pascal's triangle.
std::vector<Integer> binomial_row(unsigned m);

IntPoly classical_hermite(unsigned m);
IntPoly generalized_hermite(const HermiteSpec& spec);

/// Coefficients making generalized_hermite equal classical_hermite(m)
/// composed with phi: a_top = 1, a_i = (-1)^([m/2]-i).
HermiteSpec classical_spec(unsigned m, const IntPoly& phi = IntPoly::x());

/// H_m(phi(x)).
IntPoly hermite_of_phi(unsigned m, const IntPoly& phi);

struct HermiteReduction {
    ProblemInstance instance;
    /// phi for odd m.
    std::optional<IntPoly> odd_factor;
};

/// Throws HermiteExcluded for odd m = 3^u (u >= 2), std::invalid_argument for
/// m < 3 or an invalid spec.
HermiteReduction hermite_to_instance(const HermiteSpec& spec, HermiteBound mode = HermiteBound::theorem);

struct HermiteCertificate {
    Certificate certificate;
    std::optional<IntPoly> odd_factor;
    /// H^phi_m, or H^phi_m / phi for odd m.
    IntPoly cofactor;
};

HermiteCertificate certify_hermite(const HermiteSpec& spec, HermiteBound mode = HermiteBound::theorem,
                                   Execution exec = Execution::parallel);

}  // namespace phiirred

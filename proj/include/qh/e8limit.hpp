#ifndef QH_E8LIMIT_HPP
#define QH_E8LIMIT_HPP

#include <optional>

#include "qh/binding.hpp"
#include "qh/epslaurent.hpp"
#include "qh/lax.hpp"
#include "qh/qdiff.hpp"

namespace qh {

// Input of the degeneration pipeline: parameters bound to exact rationals,
// z always symbolic, c1 and c2 symbolic unless bound here (c1 != c2).
struct E8LimitInput {
    ParamBinding binding;
    std::optional<Rat> c1, c2;
    int truncation = 3;  // exclusive eps-order kept by the expansion
};

// coefficients of y(z/q), y(z), y(qz) as truncated eps-series whose
// coefficients are rational in z (and c1, c2 when kept symbolic)
struct EpsEq {
    EpsLaurent aMinus, aZero, aPlus;
};

// substitute f = f(u1 + eps c1), g = g(u1 + eps c2) into the L1 equation;
// throws ValuationUnexpected when phi(f,g) does not vanish to first order
EpsEq eps_expand_L1(const E8LimitInput& in);

// sample a binding satisfying the non-degeneracy conditions of the
// expansion (h1 != h2, u1^2 not in {h1, h2})
ParamBinding e8_sample_binding(Sampler& smp);

// gauge y(z) = (z - q u1)(u1 z - h1)/z * ytilde(z), take the eps^0 part
// (throws EpsilonPoleSurvives if an eps^-1 term remains), and normalize the
// overall scale so the coefficients match the displayed limit equation
ThreeTermEq take_limit_equation(const E8LimitInput& in);

// the displayed coefficients of the limit equation and its accessory data
RatFn e8_B_minus(const E8LimitInput& in);
RatFn e8_B_plus(const E8LimitInput& in);
RatFn e8_B_zero(const E8LimitInput& in);
RatFn e8_C0(const E8LimitInput& in);

// H(z) built from the three-term display, and from its partial-fraction
// form (with the undetermined constant set to zero); their difference is a
// constant in z
RatFn e8_H_direct(const E8LimitInput& in);
RatFn e8_H_partial_fraction(const E8LimitInput& in);
// the four loci where the direct form's apparent poles must cancel:
// +-(q h1)^{1/2}, h1 u1 / h2, q h2 / u1
std::vector<Rat> e8_H_cancelled_poles(const E8LimitInput& in);

struct LimitTheoremReport {
    bool bMinusMatch = false;
    bool bPlusMatch = false;
    bool bZeroMatch = false;
    bool c0Match = false;
    bool c0PrimeConstant = false;
    bool hPolesCancelled = false;
    RatFn residualC0Prime;  // the constant the displays leave implicit
    bool ok() const {
        return bMinusMatch && bPlusMatch && bZeroMatch && c0Match &&
               c0PrimeConstant && hPolesCancelled;
    }
};

// machine check of the limit theorem: coefficient identities, the closed
// form of the accessory coefficient, and the z/c1/c2-independence of the
// residual constant
LimitTheoremReport check_theorem31(const E8LimitInput& in);

// equivalence of the limit equation with the firstly degenerated
// Ruijsenaars-van Diejen operator under the multiplicative dictionary
// x = e^{2 pi i z}, q = e^{-2 pi a_-}, v_n = e^{2 pi i h~_n}
bool check_theorem32_rvd(const E8LimitInput& in);

}  // namespace qh

#endif

#ifndef QH_BLOWUP_HPP
#define QH_BLOWUP_HPP

#include "qh/binding.hpp"
#include "qh/qdiff.hpp"

namespace qh {

// A blow-up chart: expressions for the original (f, g) in terms of the
// chart coordinates.  The exceptional divisor is {except = 0}.
struct Chart {
    RatFn f_expr, g_expr;  // in terms of f1, g1 (or a subset)
    Var except = 0;        // f1 or g1
};

// substitute (f, g) -> chart expressions in every coefficient
ShiftOperator apply_chart(const ShiftOperator& op, const Chart& ch);

// restriction to {v = 0}: cancel the common power of v between numerator
// and denominator, then evaluate at v = 0.  Throws Error("PoleAtDivisor")
// when the denominator still vanishes.
RatFn restrict_to_exceptional(const RatFn& e, Var v);
ShiftOperator restrict_to_exceptional(const ShiftOperator& op, Var v);

// ---------------------------------------------------------------------------
// q-P(D5) dynamics on P^1 x P^1

// one step of the time evolution; kappa evolves as
// kappa1 -> kappa1/q, kappa2 -> q kappa2
struct D5State {
    Rat f, g;
    bool f_inf = false, g_inf = false;  // projective points at infinity
};

// the eight base points P_1..P_8 (positions depend on kappa1, kappa2)
D5State d5_base_point(int i, const ParamBinding& b);
// index of the base point hit by the state, or 0
int d5_detect_base_point(const D5State& s, const ParamBinding& b);

// evolve one step; throws Error("Indeterminate") when (f,g) is a base
// point whose image is of the form 0/0
D5State d5_evolve(const D5State& s, const ParamBinding& b);

// resolved evolution map on the exceptional line of the blow-up at base
// point i, as a rational expression of the exceptional coordinate t:
// returns (fbar(t), gbar(t))
std::pair<RatFn, RatFn> d5_resolved_map(int i, Var tv);

}  // namespace qh

#endif

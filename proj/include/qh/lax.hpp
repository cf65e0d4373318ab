#ifndef QH_LAX_HPP
#define QH_LAX_HPP

#include "qh/binding.hpp"
#include "qh/qdiff.hpp"
#include "qh/unipoly.hpp"

namespace qh {

// Square-root-level parameters shared by the degree-2/3/4 families:
// nu_i = m_i^2, kappa_j = k_j^2, q = p^2.  The constraint
// kappa_1^2 kappa_2^2 = q nu_1 ... nu_8 holds identically once
// m_8 = k_1^2 k_2^2 / (p m_1 ... m_7).
struct StdParams {
    RatFn nu[9];  // 1-based
    RatFn kappa1, kappa2;
    RatFn q, sq;  // q and q^{1/2} = p
    Var zv, fv, gv;
};
const StdParams& std_params();

// L1 of the Lax pair, acting in z with f, g symbolic; support {-1,0,+1}
ShiftOperator lax_l1_d5();
ShiftOperator lax_l1_e6();
ShiftOperator lax_l1_e7();

// E8 side: u_i = M_i^2, h_j = H_j^2, q = P^2 with
// M_8 = H_1^2 H_2^2 / (P M_1 ... M_7).
struct E8Params {
    RatFn u[9];  // 1-based
    RatFn h1, h2;
    RatFn q, sq;   // q and q^{1/2} = P
    RatFn sh1;     // h_1^{1/2} = H_1
    Var zv, fv, gv;
};
const E8Params& e8_params();

// U(z) = prod (z - u_i) and the quartics of the defining relations
// (z - h2/z) Pn(z + h2/z) = U(z)/z^3 - (z/h2)^3 U(h2/z)
// (z - h2/z) Pd(z + h2/z) = z^5 U(h2/z) - (h2/z)^5 U(z)
// An optional binding specializes the parameters (the fully symbolic
// assembly of the complete operator is far too large to be practical,
// so the binding is threaded through every constructor).
RatFn e8_U(const RatFn& arg, const ParamBinding* b = nullptr);
RatFn e8_Pn(Var wv, const ParamBinding* b = nullptr);
RatFn e8_Pd(Var wv, const ParamBinding* b = nullptr);

// auxiliary functions of the E8 Lax pair
RatFn e8_psi_n(const RatFn& f1, const RatFn& f2, const RatFn& g,
               const ParamBinding* b = nullptr);
RatFn e8_psi_d(const RatFn& f1, const RatFn& f2, const RatFn& g,
               const ParamBinding* b = nullptr);
RatFn e8_V(const RatFn& f1, const RatFn& f2, const RatFn& g,
           const ParamBinding* b = nullptr);
RatFn e8_phi(const RatFn& f, const RatFn& g, const ParamBinding* b = nullptr);

// the three coefficients of L1 y(z) = 0 with f, g symbolic
struct E8Lax {
    RatFn aMinus, aZero, aPlus;  // of y(z/q), y(z), y(qz)
};
E8Lax lax_l1_e8(const ParamBinding* b = nullptr);

}  // namespace qh

#endif

#ifndef QH_QDIFF_HPP
#define QH_QDIFF_HPP

#include "qh/algebra.hpp"

namespace qh {

// Linear q-difference operator sum_k c_k(z) T^k with (T y)(z) = y(q z).
// Coefficients are rational in z and the parameters; q itself is a rational
// expression in the square-root-level variables (q = p^2 or P^2).
class ShiftOperator {
  public:
    Var zv = 0;
    RatFn q;
    std::map<int, RatFn> c;

    ShiftOperator() = default;
    ShiftOperator(Var z, RatFn qq) : zv(z), q(std::move(qq)) {}

    static ShiftOperator term(Var z, const RatFn& qq, int k, const RatFn& coef);

    RatFn coeff(int k) const;
    void add(int k, const RatFn& coef);
    bool is_zero() const { return c.empty(); }

    ShiftOperator operator+(const ShiftOperator& o) const;
    ShiftOperator operator-(const ShiftOperator& o) const;
    // composition: (a_j T^j)(b_k T^k) = a_j b_k(q^j z) T^{j+k}
    ShiftOperator operator*(const ShiftOperator& o) const;
    ShiftOperator scaled(const RatFn& s) const;

    // apply to an explicit rational function of z (symbolic in the rest)
    RatFn apply(const RatFn& y) const;
};

// a_-(z) y(z/q) + a_0(z) y(z) + a_+(z) y(qz) = 0, considered projectively
struct ThreeTermEq {
    Var zv = 0;
    RatFn q;
    RatFn aMinus, aZero, aPlus;
};

// requires support within {-1, 0, +1}
ThreeTermEq to_three_term(const ShiftOperator& op);
ShiftOperator to_operator(const ThreeTermEq& eq);

// projective equality: the three pairwise cross-products agree
bool proj_equal(const ThreeTermEq& a, const ThreeTermEq& b);

// clear denominators, cancel the common z-gcd of the three coefficients
// (primitive PRS), strip cheap content; idempotent
ThreeTermEq clear_and_primitive(const ThreeTermEq& eq);

// u(z) = Q^{log_q z} y(z):  (Q a_-, a_0, a_+ / Q)
ThreeTermEq gauge_power(const ThreeTermEq& eq, const RatFn& Q);
// u(z) = (alpha q z; q)_inf y(z):  (a_- / (1 - alpha z), a_0, a_+ (1 - alpha q z))
ThreeTermEq gauge_pochhammer(const ThreeTermEq& eq, const RatFn& alpha);
// y(z) = r(z) u(z):  (a_- r(z/q), a_0 r(z), a_+ r(qz))
ThreeTermEq gauge_rational(const ThreeTermEq& eq, const RatFn& r);

}  // namespace qh

#endif

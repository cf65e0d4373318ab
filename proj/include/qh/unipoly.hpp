#ifndef QH_UNIPOLY_HPP
#define QH_UNIPOLY_HPP

#include <map>

#include "qh/algebra.hpp"

namespace qh {

// Univariate-in-v view of MPoly with the remaining variables as parameters.
// The gcd is computed fraction-free (subresultant pseudo-remainder sequence)
// to control coefficient growth; the result is primitive up to rational and
// monomial content, with no attempt at full multivariate content removal.
MPoly uni_gcd(const MPoly& a, const MPoly& b, Var v);

// Laurent polynomial in z with rational-function coefficients in the
// parameters (z itself must not occur inside coefficients).
class LaurentZ {
  public:
    std::map<int, RatFn> c;  // exponent -> coefficient, no zeros stored

    void add(int k, const RatFn& v);
    bool is_zero() const { return c.empty(); }
    int top() const;     // highest exponent; requires nonzero
    int bottom() const;  // lowest exponent

    LaurentZ operator+(const LaurentZ& o) const;
    LaurentZ operator-(const LaurentZ& o) const;
    LaurentZ operator*(const LaurentZ& o) const;
    LaurentZ scaled(const RatFn& s) const;

    static LaurentZ monomial(int k, const RatFn& v);
    // expand prod (z - r_i)
    static LaurentZ from_roots(const std::vector<RatFn>& roots);
    // substitute z -> a/z (a a parameter expression)
    LaurentZ flip(const RatFn& a) const;

    // convert to a rational function of zvar
    RatFn to_ratfn(Var zvar) const;
};

// exact quotient n/d in the Laurent ring; throws Error("NotDivisible")
LaurentZ laurent_divide_exact(const LaurentZ& n, const LaurentZ& d);

// Given L invariant under z -> h2/z, find P with P(z + h2/z) = L(z).
// Returns the coefficients of P in wvar.  Throws Error("NotSymmetric").
RatFn laurent_to_w_poly(const LaurentZ& L, const RatFn& h2, Var wvar);

}  // namespace qh

#endif

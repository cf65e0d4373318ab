#ifndef QH_ALGEBRA_HPP
#define QH_ALGEBRA_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic kernel: sparse multivariate polynomials over Q and
// rational functions with cross-multiplication equality.  Every parameter
// with a fractional power in the source formulas is represented at
// square-root level (nu_i = m_i^2, kappa_j = k_j^2, q = p^2, and the
// upper-case counterparts M/H/P), so all expressions here are honest
// rational functions.

namespace qh {

using Rat = mpq_class;

struct Error : std::runtime_error {
    std::string kind;
    Error(std::string k, const std::string& msg)
        : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

// ---------------------------------------------------------------------------
// Variable registry (interned names, process-wide)

using Var = int;

Var var(const std::string& name);
const std::string& var_name(Var v);

// ---------------------------------------------------------------------------
// Monomial: sorted sparse exponent vector

struct Mono {
    // sorted by Var, exponents > 0
    std::vector<std::pair<Var, int>> e;

    bool operator<(const Mono& o) const { return e < o.e; }
    bool operator==(const Mono& o) const { return e == o.e; }
    bool is_one() const { return e.empty(); }
    int deg(Var v) const;
    int total_deg() const;

    static Mono one() { return {}; }
    static Mono of(Var v, int k = 1);
    Mono mul(const Mono& o) const;
    // componentwise min (common monomial factor)
    Mono gcd(const Mono& o) const;
    // requires divisibility
    Mono div(const Mono& o) const;
    bool divisible_by(const Mono& o) const;
};

// ---------------------------------------------------------------------------
// Sparse multivariate polynomial over Q

class MPoly {
  public:
    std::map<Mono, Rat> t;  // no zero coefficients stored

    MPoly() = default;
    explicit MPoly(const Rat& c);
    explicit MPoly(long c);
    static MPoly variable(Var v, int power = 1);

    bool is_zero() const { return t.empty(); }
    bool is_constant() const;
    // constant value; requires is_constant()
    Rat constant() const;
    bool is_monomial() const { return t.size() == 1; }

    size_t n_terms() const { return t.size(); }
    int deg(Var v) const;
    bool depends_on(Var v) const;
    void vars(std::vector<Var>& out) const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly mul_term(const Mono& m, const Rat& c) const;
    MPoly pow(int n) const;

    bool operator==(const MPoly& o) const { return t == o.t; }

    void add_term(const Mono& m, const Rat& c);

    // gcd of all coefficients (positive; sign of leading term preserved
    // separately by caller if needed)
    Rat rational_content() const;
    // componentwise min of all monomials
    Mono monomial_content() const;
    void divide_content(const Rat& c, const Mono& m);

    MPoly derivative(Var v) const;
    // coefficient of v^k, as a polynomial in the remaining variables
    MPoly coeff_of(Var v, int k) const;

    std::string str() const;
};

// ---------------------------------------------------------------------------
// Rational function num/den, den != 0.  Not kept in lowest terms; equality
// is by cross-multiplication.  Cheap normalization (rational and monomial
// content, plus univariate gcd when the support is small) keeps sizes in
// check without a full multivariate gcd.

class RatFn {
  public:
    MPoly num, den;

    RatFn() : num(), den(1) {}
    RatFn(MPoly n, MPoly d);
    explicit RatFn(const Rat& c) : num(c), den(1) {}
    explicit RatFn(long c) : num(c), den(1) {}
    explicit RatFn(const MPoly& p) : num(p), den(1) {}
    static RatFn variable(Var v, int power = 1);

    bool is_zero() const { return num.is_zero(); }
    bool is_poly() const { return den.is_constant(); }
    bool is_rational() const { return num.is_constant() && den.is_constant(); }
    Rat rational() const;

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;  // throws DivisionByZero
    RatFn inv() const;
    RatFn pow(int n) const;  // negative n inverts

    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator/=(const RatFn& o) { return *this = *this / o; }

    bool eq(const RatFn& o) const;  // cross-multiplication
    bool depends_on(Var v) const;
    // true iff d/dv (num/den) == 0 identically
    bool is_free_of(Var v) const;

    // cancel rational + monomial content; if num and den share a single
    // support variable, cancel their univariate gcd as well
    void normalize();
    // cancel the univariate-in-v gcd of num and den (PRS based)
    RatFn reduced(Var v) const;

    std::string str() const;
};

RatFn operator+(long a, const RatFn& b);
RatFn operator-(long a, const RatFn& b);
RatFn operator*(long a, const RatFn& b);
RatFn operator/(long a, const RatFn& b);
inline RatFn operator+(const RatFn& a, long b) { return a + RatFn(b); }
inline RatFn operator-(const RatFn& a, long b) { return a - RatFn(b); }
inline RatFn operator*(const RatFn& a, long b) { return a * RatFn(b); }
inline RatFn operator/(const RatFn& a, long b) { return a / RatFn(b); }

// substitute vars by rational functions; unmapped vars stay symbolic
RatFn subst(const RatFn& e, const std::map<Var, RatFn>& assign);
MPoly subst_poly(const MPoly& p, const std::map<Var, RatFn>& assign, MPoly& den_out);

// z -> q^k z style shift helper: substitute v by c*v
RatFn scale_var(const RatFn& e, Var v, const RatFn& c);

// parse an expression over registered variable names:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-'? primary ('^' '-'? integer)?
//   primary:= integer | name | '(' expr ')'
RatFn parse_ratfn(const std::string& text);

// square root of a rational function whose num and den are monomials with
// perfect-square rational coefficients and even exponents (positive branch).
// Throws Error("BranchMismatch") otherwise.
RatFn sqrt_monomial(const RatFn& e);

}  // namespace qh

#endif

#ifndef QH_EPSLAURENT_HPP
#define QH_EPSLAURENT_HPP

#include <limits>
#include <map>

#include "qh/algebra.hpp"

namespace qh {

// Truncated Laurent series in a formal small parameter.  Coefficients are
// rational functions (typically in z, c1, c2 with parameters already bound).
// `order` is the exclusive truncation bound: powers >= order are unknown,
// powers < order absent from `c` are exact zeros.  Exact (untruncated)
// values carry order = EXACT.
class EpsLaurent {
  public:
    static constexpr int EXACT = std::numeric_limits<int>::max() / 4;

    std::map<int, RatFn> c;
    int order = EXACT;

    EpsLaurent() = default;
    explicit EpsLaurent(const RatFn& v) {
        if (!v.is_zero()) c.emplace(0, v);
    }
    static EpsLaurent eps(int k = 1) {
        EpsLaurent s;
        s.c.emplace(k, RatFn(1L));
        return s;
    }

    bool is_zero() const { return c.empty(); }
    // lowest stored power; requires nonzero
    int valuation() const;
    RatFn at(int k) const;  // throws if k >= order (unknown)

    void add(int k, const RatFn& v);
    void truncate(int ord);

    EpsLaurent operator-() const;
    EpsLaurent operator+(const EpsLaurent& o) const;
    EpsLaurent operator-(const EpsLaurent& o) const;
    EpsLaurent operator*(const EpsLaurent& o) const;
    EpsLaurent operator/(const EpsLaurent& o) const;
    EpsLaurent inv() const;  // leading coefficient must be nonzero
    EpsLaurent pow(int n) const;
};

// evaluate a rational expression with some variables bound to series (the
// rest stay symbolic inside coefficients)
EpsLaurent eval_series(const RatFn& e, const std::map<Var, EpsLaurent>& assign);

}  // namespace qh

#endif

#ifndef QH_BINDING_HPP
#define QH_BINDING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "qh/algebra.hpp"

namespace qh {

// numeric assignment of square-root-level parameters
struct ParamBinding {
    std::map<Var, Rat> v;

    bool has(Var x) const { return v.count(x) != 0; }
    void set(Var x, const Rat& r) { v[x] = r; }
    Rat get(Var x) const;  // throws UnboundIndeterminate
};

// substitute the bound variables; remaining variables stay symbolic.
// Throws DenominatorVanishes if the denominator becomes identically zero.
RatFn specialize(const RatFn& e, const ParamBinding& b);
// fully numeric value; throws UnboundIndeterminate on leftover variables
Rat eval_rat(const RatFn& e, const ParamBinding& b);

// A parameter family at square-root level: `base` are sampled independently,
// `derived` is fixed by the product constraint `derived_expr`, and variables
// in `squares` are sampled as perfect squares of rationals.
struct Family {
    std::vector<Var> base;
    Var derived = 0;
    RatFn derived_expr;
    std::vector<Var> squares;
};

// m1..m7, k1, k2, p with m8 = k1^2 k2^2 / (p m1...m7)
const Family& family_d5();
// same shape, shared across the degree-2 dictionary cases
const Family& family_e6();
const Family& family_e7();
// M1..M7, H1, H2, P with M8 = H1^2 H2^2 / (P M1...M7); H1 a perfect square
const Family& family_e8();

class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng(seed) {}

    // small positive rational: odd integer in [3, 23] or its reciprocal,
    // occasionally scaled by 2 to break accidental symmetries
    Rat small_positive();
    // all base values pairwise distinct
    ParamBinding sample(const Family& fam);

    std::mt19937_64 rng;
};

}  // namespace qh

#endif

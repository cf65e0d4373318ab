#include "qh/binding.hpp"

#include <algorithm>
#include <set>

namespace qh {

Rat ParamBinding::get(Var x) const {
    auto it = v.find(x);
    if (it == v.end()) throw Error("UnboundIndeterminate", "no value for " + var_name(x));
    return it->second;
}

RatFn specialize(const RatFn& e, const ParamBinding& b) {
    std::map<Var, RatFn> a;
    for (auto& [x, r] : b.v) a.emplace(x, RatFn(r));
    RatFn s = subst(e, a);
    if (s.den.is_zero()) throw Error("DenominatorVanishes", "binding kills denominator");
    s.normalize();
    return s;
}

Rat eval_rat(const RatFn& e, const ParamBinding& b) {
    RatFn s = specialize(e, b);
    if (!s.is_rational()) {
        std::vector<Var> vs;
        s.num.vars(vs);
        s.den.vars(vs);
        throw Error("UnboundIndeterminate",
                    "leftover variable " + (vs.empty() ? std::string("?") : var_name(vs[0])));
    }
    return s.rational();
}

namespace {
Family make_family(const char* const* names, int n, const char* derived, const char* k1,
                   const char* k2, const char* pp, const char* square_var) {
    Family f;
    for (int i = 0; i < n; ++i) f.base.push_back(var(names[i]));
    f.base.push_back(var(k1));
    f.base.push_back(var(k2));
    f.base.push_back(var(pp));
    f.derived = var(derived);
    // derived = k1^2 k2^2 / (p * prod(base m's))
    RatFn e = RatFn::variable(var(k1), 2) * RatFn::variable(var(k2), 2) /
              RatFn::variable(var(pp));
    for (int i = 0; i < n; ++i) e = e / RatFn::variable(var(names[i]));
    f.derived_expr = e;
    if (square_var) f.squares.push_back(var(square_var));
    return f;
}
}  // namespace

const Family& family_d5() {
    static const char* ms[] = {"m1", "m2", "m3", "m4", "m5", "m6", "m7"};
    static Family f = make_family(ms, 7, "m8", "k1", "k2", "p", nullptr);
    return f;
}

const Family& family_e6() { return family_d5(); }
const Family& family_e7() { return family_d5(); }

const Family& family_e8() {
    static const char* ms[] = {"M1", "M2", "M3", "M4", "M5", "M6", "M7"};
    static Family f = make_family(ms, 7, "M8", "H1", "H2", "P", "H1");
    return f;
}

Rat Sampler::small_positive() {
    std::uniform_int_distribution<int> odd(1, 11), kind(0, 5);
    Rat r(2 * odd(rng) + 1);  // 3..23
    int k = kind(rng);
    if (k == 0) r = 1 / r;
    if (k == 1) r *= 2;
    return r;
}

ParamBinding Sampler::sample(const Family& fam) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        ParamBinding b;
        std::set<Rat> used;
        bool ok = true;
        for (Var x : fam.base) {
            Rat r = small_positive();
            if (std::find(fam.squares.begin(), fam.squares.end(), x) != fam.squares.end())
                r = r * r;
            if (!used.insert(r).second) {
                ok = false;
                break;
            }
            b.set(x, r);
        }
        if (!ok) continue;
        b.set(fam.derived, eval_rat(fam.derived_expr, b));
        return b;
    }
    throw Error("SamplerExhausted", "could not draw distinct parameter values");
}

}  // namespace qh

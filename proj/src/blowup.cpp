#include "qh/blowup.hpp"

#include "qh/lax.hpp"

namespace qh {

ShiftOperator apply_chart(const ShiftOperator& op, const Chart& ch) {
    const StdParams& P = std_params();
    std::map<Var, RatFn> a{{P.fv, ch.f_expr}, {P.gv, ch.g_expr}};
    ShiftOperator r(op.zv, op.q);
    for (auto& [k, c] : op.c) r.add(k, subst(c, a));
    return r;
}

namespace {
int val_of(const MPoly& p, Var v) {
    int m = -1;
    for (auto& [mono, c] : p.t) {
        int d = mono.deg(v);
        if (m < 0 || d < m) m = d;
        if (m == 0) break;
    }
    return m < 0 ? 0 : m;
}

MPoly shift_down(const MPoly& p, Var v, int k) {
    if (k == 0) return p;
    MPoly r;
    Mono d = Mono::of(v, k);
    for (auto& [mono, c] : p.t) r.add_term(mono.div(d), c);
    return r;
}
}  // namespace

RatFn restrict_to_exceptional(const RatFn& e, Var v) {
    if (e.is_zero()) return e;
    int a = val_of(e.num, v), b = val_of(e.den, v);
    int c = std::min(a, b);
    MPoly n = shift_down(e.num, v, c), d = shift_down(e.den, v, c);
    std::map<Var, RatFn> zero{{v, RatFn(0L)}};
    MPoly dden;
    MPoly n0 = subst_poly(n, zero, dden), d0 = subst_poly(d, zero, dden);
    if (d0.is_zero()) throw Error("PoleAtDivisor", "pole on the exceptional divisor");
    return RatFn(n0, d0);
}

ShiftOperator restrict_to_exceptional(const ShiftOperator& op, Var v) {
    // the equation is projective: divide by the minimal common power of v
    // across the coefficients before evaluating at v = 0
    struct Item {
        int k, w;
        MPoly n, d;
    };
    std::vector<Item> items;
    int vmin = 0;
    bool first = true;
    for (auto& [k, c] : op.c) {
        if (c.is_zero()) continue;
        int a = val_of(c.num, v), b = val_of(c.den, v);
        items.push_back({k, a - b, shift_down(c.num, v, a), shift_down(c.den, v, b)});
        if (first || a - b < vmin) vmin = a - b;
        first = false;
    }
    ShiftOperator r(op.zv, op.q);
    std::map<Var, RatFn> zero{{v, RatFn(0L)}};
    for (auto& it : items) {
        if (it.w > vmin) continue;  // vanishes after normalization
        MPoly dden;
        MPoly n0 = subst_poly(it.n, zero, dden), d0 = subst_poly(it.d, zero, dden);
        r.add(it.k, RatFn(n0, d0));
    }
    return r;
}

// ---------------------------------------------------------------------------
// D5 dynamics

namespace {
// fbar(f, g) of the time evolution, symbolically
RatFn d5_fbar_expr() {
    const StdParams& P = std_params();
    RatFn f = RatFn::variable(P.fv), g = RatFn::variable(P.gv);
    return P.nu[3] * P.nu[4] * (g - P.nu[5] / P.kappa2) * (g - P.nu[6] / P.kappa2) /
           (f * (g - 1 / P.nu[1]) * (g - 1 / P.nu[2]));
}

// gbar * g = (1/(nu1 nu2)) (fbar - kb1/nu7)(fbar - kb1/nu8) /
//            ((fbar - nu3)(fbar - nu4)) with kb1 = kappa1/q
RatFn d5_gbar_expr() {
    const StdParams& P = std_params();
    RatFn g = RatFn::variable(P.gv);
    RatFn fb = d5_fbar_expr();
    RatFn kb1 = P.kappa1 / P.q;
    return (fb - kb1 / P.nu[7]) * (fb - kb1 / P.nu[8]) /
           (P.nu[1] * P.nu[2] * (fb - P.nu[3]) * (fb - P.nu[4]) * g);
}

Chart d5_chart(int i) {
    const StdParams& P = std_params();
    Var f1 = var("f1"), g1 = var("g1");
    RatFn rf1 = RatFn::variable(f1), rg1 = RatFn::variable(g1);
    Chart ch;
    if (i == 1 || i == 2) {  // (infinity, 1/nu_i)
        ch.f_expr = 1 / rf1;
        ch.g_expr = rf1 * rg1 + 1 / P.nu[i];
        ch.except = f1;
    } else if (i == 3 || i == 4) {  // (nu_i, infinity)
        ch.f_expr = rf1 * rg1 + P.nu[i];
        ch.g_expr = 1 / rg1;
        ch.except = g1;
    } else if (i == 5 || i == 6) {  // (0, nu_i/kappa2)
        ch.f_expr = rf1;
        ch.g_expr = rf1 * rg1 + P.nu[i] / P.kappa2;
        ch.except = f1;
    } else {  // (kappa1/nu_i, 0)
        ch.f_expr = rf1 * rg1 + P.kappa1 / P.nu[i];
        ch.g_expr = rg1;
        ch.except = g1;
    }
    return ch;
}

// numeric evaluation of a symbolic map component at (f, g) with binding
struct PNum {
    Rat v;
    bool inf = false, indet = false;
};

PNum eval_proj(const RatFn& e, const ParamBinding& b, const Rat& fval, const Rat& gval) {
    const StdParams& P = std_params();
    ParamBinding full = b;
    full.set(P.fv, fval);
    full.set(P.gv, gval);
    std::map<Var, RatFn> a;
    for (auto& [x, r] : full.v) a.emplace(x, RatFn(r));
    // evaluate numerator and denominator separately to classify 0/0
    MPoly dn, dd;
    MPoly n = subst_poly(e.num, a, dn), d = subst_poly(e.den, a, dd);
    PNum r;
    bool nz = n.is_zero(), dz = d.is_zero();
    if (!dz) {
        r.v = nz ? Rat(0) : (n.constant() * dd.constant()) / (d.constant() * dn.constant());
    } else if (nz) {
        r.indet = true;
    } else {
        r.inf = true;
    }
    return r;
}
}  // namespace

D5State d5_base_point(int i, const ParamBinding& b) {
    const StdParams& P = std_params();
    D5State s;
    if (i == 1 || i == 2) {
        s.f_inf = true;
        s.g = eval_rat(1 / P.nu[i], b);
    } else if (i == 3 || i == 4) {
        s.f = eval_rat(P.nu[i], b);
        s.g_inf = true;
    } else if (i == 5 || i == 6) {
        s.f = 0;
        s.g = eval_rat(P.nu[i] / P.kappa2, b);
    } else {
        s.f = eval_rat(P.kappa1 / P.nu[i], b);
        s.g = 0;
    }
    return s;
}

int d5_detect_base_point(const D5State& s, const ParamBinding& b) {
    for (int i = 1; i <= 8; ++i) {
        D5State p = d5_base_point(i, b);
        if (p.f_inf == s.f_inf && p.g_inf == s.g_inf &&
            (p.f_inf || p.f == s.f) && (p.g_inf || p.g == s.g))
            return i;
    }
    return 0;
}

D5State d5_evolve(const D5State& s, const ParamBinding& b) {
    if (int i = d5_detect_base_point(s, b))
        throw Error("Indeterminate",
                    "time evolution is 0/0 at base point P" + std::to_string(i));
    const StdParams& P = std_params();
    // work in a chart where the state is finite: invert f and/or g
    RatFn f = RatFn::variable(P.fv), g = RatFn::variable(P.gv);
    std::map<Var, RatFn> inv;
    if (s.f_inf) inv.emplace(P.fv, 1 / f);
    if (s.g_inf) inv.emplace(P.gv, 1 / g);
    RatFn fbar = d5_fbar_expr(), gbar = d5_gbar_expr();
    if (!inv.empty()) {
        fbar = subst(fbar, inv);
        gbar = subst(gbar, inv);
    }
    Rat fv = s.f_inf ? Rat(0) : s.f, gv = s.g_inf ? Rat(0) : s.g;
    PNum rf = eval_proj(fbar, b, fv, gv);
    D5State out;
    if (rf.indet) throw Error("Indeterminate", "fbar is 0/0");
    out.f_inf = rf.inf;
    if (!rf.inf) out.f = rf.v;
    // gbar may hit 0/0 through the fbar factors even off base points
    PNum rg = eval_proj(gbar, b, fv, gv);
    if (rg.indet) throw Error("Indeterminate", "gbar is 0/0");
    out.g_inf = rg.inf;
    if (!rg.inf) out.g = rg.v;
    return out;
}

std::pair<RatFn, RatFn> d5_resolved_map(int i, Var tv) {
    const StdParams& P = std_params();
    Chart ch = d5_chart(i);
    std::map<Var, RatFn> a{{P.fv, ch.f_expr}, {P.gv, ch.g_expr}};
    RatFn fbar = subst(d5_fbar_expr(), a), gbar = subst(d5_gbar_expr(), a);
    // the cancellations at P7/P8 hold only on the constrained parameter
    // space, so impose nu8 = kappa1^2 kappa2^2 / (q nu1 ... nu7)
    std::map<Var, RatFn> con{{family_d5().derived, family_d5().derived_expr}};
    fbar = subst(fbar, con);
    gbar = subst(gbar, con);
    fbar = restrict_to_exceptional(fbar, ch.except);
    gbar = restrict_to_exceptional(gbar, ch.except);
    // rename the surviving chart coordinate to tv
    Var coord = ch.except == var("f1") ? var("g1") : var("f1");
    std::map<Var, RatFn> ren{{coord, RatFn::variable(tv)}};
    return {subst(fbar, ren), subst(gbar, ren)};
}

}  // namespace qh

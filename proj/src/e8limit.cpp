#include "qh/e8limit.hpp"

namespace qh {

namespace {

// numeric values of the bound parameters, plus the symbolic z / c1 / c2
struct Ctx {
    RatFn z, q, sq, h1, h2, sh1, c1, c2;
    RatFn u[9];  // 1-based
    Var zv;

    explicit Ctx(const E8LimitInput& in) {
        const E8Params& P = e8_params();
        zv = P.zv;
        z = RatFn::variable(zv);
        q = RatFn(eval_rat(P.q, in.binding));
        sq = RatFn(eval_rat(P.sq, in.binding));
        h1 = RatFn(eval_rat(P.h1, in.binding));
        h2 = RatFn(eval_rat(P.h2, in.binding));
        sh1 = RatFn(eval_rat(P.sh1, in.binding));
        for (int i = 1; i <= 8; ++i) u[i] = RatFn(eval_rat(P.u[i], in.binding));
        c1 = in.c1 ? RatFn(*in.c1) : RatFn::variable(var("c1"));
        c2 = in.c2 ? RatFn(*in.c2) : RatFn::variable(var("c2"));
    }

    RatFn U7(const RatFn& arg) const {
        RatFn r(1L);
        for (int j = 2; j <= 8; ++j) r *= arg - u[j];
        return r;
    }
    // (u1 u2 ... u8)^{1/2} resolved on the positive branch
    RatFn sqrtUprod() const { return h1 * h2 / sq; }
};

// truncated series for w + h/w at w = u1 + eps*c
EpsLaurent branch_series(const RatFn& u1, const RatFn& c, const RatFn& h, int ord) {
    EpsLaurent w = EpsLaurent(u1) + EpsLaurent::eps() * EpsLaurent(c);
    w.truncate(ord);
    return w + EpsLaurent(h) * w.inv();
}

void require_no_eps_pole(const EpsLaurent& s, const char* which) {
    for (auto& [k, v] : s.c)
        if (k < 0 && !v.is_zero())
            throw Error("EpsilonPoleSurvives",
                        std::string("eps^-1 term remains in the ") + which +
                            " coefficient of the limit equation");
}

RatFn shift_z(const RatFn& e, Var zv, const RatFn& to) {
    std::map<Var, RatFn> m{{zv, to}};
    return subst(e, m);
}

}  // namespace

ParamBinding e8_sample_binding(Sampler& smp) {
    const E8Params& P = e8_params();
    for (int tries = 0; tries < 64; ++tries) {
        ParamBinding b = smp.sample(family_e8());
        Rat h1 = eval_rat(P.h1, b), h2 = eval_rat(P.h2, b), u1 = eval_rat(P.u[1], b);
        if (h1 != h2 && u1 * u1 != h1 && u1 * u1 != h2) return b;
    }
    throw Error("DenominatorVanishes", "no admissible binding found");
}

EpsEq eps_expand_L1(const E8LimitInput& in) {
    const E8Params& P = e8_params();
    Ctx ctx(in);
    if (in.c1 && in.c2 && *in.c1 == *in.c2)
        throw Error("ValuationUnexpected", "c1 = c2 degenerates the expansion");
    E8Lax L = lax_l1_e8(&in.binding);
    std::map<Var, EpsLaurent> as{
        {P.fv, branch_series(ctx.u[1], ctx.c1, ctx.h1, in.truncation)},
        {P.gv, branch_series(ctx.u[1], ctx.c2, ctx.h2, in.truncation)}};
    RatFn phi = e8_phi(RatFn::variable(P.fv), RatFn::variable(P.gv), &in.binding);
    EpsLaurent phis = eval_series(phi, as);
    if (phis.is_zero() || phis.valuation() != 1)
        throw Error("ValuationUnexpected",
                    "phi(f,g) does not vanish to exactly first order");
    EpsEq eq;
    eq.aMinus = eval_series(L.aMinus, as);
    eq.aZero = eval_series(L.aZero, as);
    eq.aPlus = eval_series(L.aPlus, as);
    return eq;
}

ThreeTermEq take_limit_equation(const E8LimitInput& in) {
    Ctx ctx(in);
    EpsEq E = eps_expand_L1(in);
    const RatFn &z = ctx.z, &q = ctx.q, &u1 = ctx.u[1], &h1 = ctx.h1;
    RatFn r = (z - q * u1) * (u1 * z - h1) / z;
    EpsLaurent aM = E.aMinus * EpsLaurent(shift_z(r, ctx.zv, z / q));
    EpsLaurent aZ = E.aZero * EpsLaurent(r);
    EpsLaurent aP = E.aPlus * EpsLaurent(shift_z(r, ctx.zv, q * z));
    require_no_eps_pole(aM, "y(z/q)");
    require_no_eps_pole(aZ, "y(z)");
    require_no_eps_pole(aP, "y(qz)");
    // overall scale normalization matching the displayed limit equation
    RatFn scale = -h1 / q * u1 * z * z * (z * z - q * h1);
    ThreeTermEq eq;
    eq.zv = ctx.zv;
    eq.q = q;
    eq.aMinus = aM.at(0) / scale;
    eq.aZero = aZ.at(0) / scale;
    eq.aPlus = aP.at(0) / scale;
    return eq;
}

RatFn e8_B_minus(const E8LimitInput& in) {
    Ctx c(in);
    const RatFn &z = c.z, &q = c.q, &h1 = c.h1, &u1 = c.u[1];
    RatFn num = (z - q * q * u1);
    for (int j = 2; j <= 8; ++j) num *= z - q * c.u[j];
    return num / (q * q * h1 * z * z * (z * z - q * h1) * (z * z - q * q * h1));
}

RatFn e8_B_plus(const E8LimitInput& in) {
    Ctx c(in);
    const RatFn &z = c.z, &q = c.q, &h1 = c.h1, &u1 = c.u[1];
    RatFn num = q * (q * u1 * z - h1);
    for (int j = 2; j <= 8; ++j) num *= c.u[j] * z - h1;
    return num / (h1.pow(5) * z * z * (z * z - q * h1) * (z * z - h1));
}

RatFn e8_B_zero(const E8LimitInput& in) {
    Ctx c(in);
    const RatFn &z = c.z, &q = c.q, &h1 = c.h1, &u1 = c.u[1], &sh1 = c.sh1;
    RatFn minus = -q * z * (sh1 - q * u1);
    RatFn plus = q * z * (sh1 + q * u1);
    for (int j = 2; j <= 8; ++j) {
        minus *= sh1 - c.u[j];
        plus *= sh1 + c.u[j];
    }
    // both signed terms carry h1^{7/2}
    RatFn h72 = h1.pow(3) * sh1;
    RatFn sum;
    for (int j = 2; j <= 8; ++j) sum += c.u[j] / h1 + 1 / c.u[j];
    sum += q * u1 / h1 + 1 / (q * u1);
    return minus / (2 * h72 * (z - sh1) * (z - q * sh1)) +
           plus / (2 * h72 * (z + sh1) * (z + q * sh1)) -
           c.sq.pow(3) / h1 * c.sqrtUprod() *
               ((q + 1) * (z * z / (q * h1).pow(2) + 1 / (z * z)) -
                (z / (q * h1) + 1 / z) * sum);
}

RatFn e8_C0(const E8LimitInput& in) {
    Ctx c(in);
    const RatFn &q = c.q, &h1 = c.h1, &h2 = c.h2, &u1 = c.u[1];
    RatFn num = q * (h2 - h1);
    for (int j = 2; j <= 8; ++j) num *= u1 - c.u[j];
    return num / (h1 * h1 * u1 * (h1 - u1 * u1) * (h2 - u1 * u1));
}

RatFn e8_H_direct(const E8LimitInput& in) {
    Ctx c(in);
    const RatFn &z = c.z, &q = c.q, &h1 = c.h1, &h2 = c.h2, &u1 = c.u[1];
    return q.pow(5) * (h2 * z - q * h1 * u1) * (u1 * z - h1) * c.U7(z / q) /
               (h1 * z * z * (z * z - q * h1) * (z * z - q * q * h1) *
                (u1 * z - h2 * q)) -
           z.pow(5) * (u1 * z - h2) * (z - q * u1) * c.U7(h1 / z) /
               (h1.pow(3) * (z * z - q * h1) * (z * z - h1) * (h2 * z - h1 * u1)) -
           u1.pow(5) * c.U7(h2 / u1) * (z - q * u1) * (u1 * z - h1) /
               (h1 * h2 * h2 * (h2 - u1 * u1) * (h2 * z - h1 * u1) *
                (u1 * z - q * h2));
}

RatFn e8_H_partial_fraction(const E8LimitInput& in) {
    Ctx c(in);
    const RatFn &z = c.z, &q = c.q, &h1 = c.h1, &h2 = c.h2, &u1 = c.u[1],
                &sh1 = c.sh1;
    RatFn minus = z * (sh1 - q * u1);
    RatFn plus = z * (sh1 + q * u1);
    RatFn sum;
    for (int j = 2; j <= 8; ++j) {
        minus *= sh1 - c.u[j];
        plus *= sh1 + c.u[j];
        sum += c.u[j] + h1 / c.u[j];
    }
    sum += q * u1 + h1 / (q * u1);
    RatFn h52 = h1 * h1 * sh1;
    return minus / (2 * h52 * (z - sh1) * (z - q * sh1)) -
           plus / (2 * h52 * (z + sh1) * (z + q * sh1)) +
           h1 * h2 * (q + 1) * (z * z / (q * h1).pow(2) + 1 / (z * z)) -
           (z / (q * h1) + 1 / z) * h2 * sum;
}

std::vector<Rat> e8_H_cancelled_poles(const E8LimitInput& in) {
    Ctx c(in);
    Rat sqh1 = c.sq.num.constant() * c.sh1.num.constant();
    Rat h1 = c.h1.num.constant(), h2 = c.h2.num.constant(),
        u1 = c.u[1].num.constant(), q = c.q.num.constant();
    return {sqh1, -sqh1, h1 * u1 / h2, q * h2 / u1};
}

LimitTheoremReport check_theorem31(const E8LimitInput& in) {
    Ctx ctx(in);
    LimitTheoremReport rep;
    ThreeTermEq der = take_limit_equation(in);
    rep.bMinusMatch = der.aMinus.eq(e8_B_minus(in));
    rep.bPlusMatch = der.aPlus.eq(e8_B_plus(in));
    // the remainder B0 - a0 must be C0 c2/(c1-c2) plus a constant
    RatFn R = e8_B_zero(in) - der.aZero;
    RatFn C0p = R - e8_C0(in) * ctx.c2 / (ctx.c1 - ctx.c2);
    Var c1v = var("c1"), c2v = var("c2");
    rep.c0Match = C0p.is_free_of(c1v) && C0p.is_free_of(c2v);
    rep.c0PrimeConstant = C0p.is_free_of(ctx.zv);
    rep.bZeroMatch = rep.c0Match && rep.c0PrimeConstant;
    if (rep.bZeroMatch) {
        // pin the constant down to a plain rational for reporting
        for (long t : {3, 5, 7, 11}) {
            std::map<Var, RatFn> pt{{ctx.zv, RatFn(Rat(t, 2))},
                                    {c1v, RatFn(Rat(t))},
                                    {c2v, RatFn(Rat(t, 13))}};
            try {
                rep.residualC0Prime = RatFn(eval_rat(subst(C0p, pt), ParamBinding{}));
                break;
            } catch (const Error&) {
                continue;
            }
        }
    } else {
        rep.residualC0Prime = C0p;
    }
    // explicit cancellation of the direct form's apparent poles
    RatFn Hred = e8_H_direct(in).reduced(ctx.zv);
    rep.hPolesCancelled = true;
    for (const Rat& s : e8_H_cancelled_poles(in)) {
        ParamBinding at;
        at.set(ctx.zv, s);
        if (eval_rat(RatFn(Hred.den), at) == 0) rep.hPolesCancelled = false;
    }
    return rep;
}

bool check_theorem32_rvd(const E8LimitInput& in) {
    Ctx ctx(in);
    ThreeTermEq der = take_limit_equation(in);
    // accessory value realized by the limit: C0 c2/(c1-c2) plus the constant
    // remainder of the middle coefficient against B0
    RatFn C0p = e8_B_zero(in) - der.aZero - e8_C0(in) * ctx.c2 / (ctx.c1 - ctx.c2);
    if (!C0p.is_free_of(var("c1")) || !C0p.is_free_of(var("c2")) ||
        !C0p.is_free_of(ctx.zv))
        return false;
    // z = (q h1)^{1/2} x
    Var xv = var("x");
    RatFn x = RatFn::variable(xv);
    RatFn sqh1 = ctx.sq * ctx.sh1;
    RatFn aM = shift_z(der.aMinus, ctx.zv, sqh1 * x);
    RatFn aZ = shift_z(der.aZero, ctx.zv, sqh1 * x);
    RatFn aP = shift_z(der.aPlus, ctx.zv, sqh1 * x);
    // multiplicative dictionary values: v_1 = q u_1 / h1^{1/2}, v_j = u_j / h1^{1/2}
    const RatFn &q = ctx.q, &sq = ctx.sq;
    RatFn v[9], sv[9];
    v[1] = q * ctx.u[1] / ctx.sh1;
    for (int j = 2; j <= 8; ++j) v[j] = ctx.u[j] / ctx.sh1;
    for (int n = 1; n <= 8; ++n) sv[n] = sqrt_monomial(v[n]);
    // firstly degenerated Ruijsenaars-van Diejen coefficients with
    // x = e^{2 pi i z}, q = e^{-2 pi a_-}, v_n = e^{2 pi i h~_n}
    RatFn Vn(1L), Wn(1L), Um(1L), Up(1L), svProd(1L), vSum;
    for (int n = 1; n <= 8; ++n) {
        Vn *= 1 - v[n] * sq / x;
        Wn *= 1 - v[n] * sq * x;
        Um *= v[n] - 1;
        Up *= v[n] + 1;
        svProd *= sv[n];
        vSum += v[n] + 1 / v[n];
    }
    RatFn Vt = Vn / (q / (x * x) * (1 - 1 / (x * x)) * (1 - q / (x * x)));
    RatFn Wt = Wn / (q * x * x * (1 - x * x) * (1 - q * x * x));
    RatFn Ut = Um / (2 * (1 - x / sq) * (1 - 1 / (sq * x))) +
               Up / (2 * (1 + x / sq) * (1 + 1 / (sq * x))) +
               sq * svProd *
                   ((x + 1 / x) * vSum - (sq + 1 / sq) * (x * x + 1 / (x * x)));
    RatFn C0pin;
    for (long t : {3, 5, 7, 11}) {
        std::map<Var, RatFn> pt{{ctx.zv, RatFn(Rat(t, 2))},
                                {var("c1"), RatFn(Rat(t))},
                                {var("c2"), RatFn(Rat(t, 13))}};
        try {
            C0pin = RatFn(eval_rat(subst(C0p, pt), ParamBinding{}));
            break;
        } catch (const Error&) {
            continue;
        }
    }
    RatFn Elim = e8_C0(in) * ctx.c2 / (ctx.c1 - ctx.c2) + C0pin;
    return aM.eq(Vt) && aP.eq(Wt) && aZ.eq(Ut - Elim);
}

}  // namespace qh

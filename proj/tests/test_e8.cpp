#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/e8limit.hpp"

using namespace qh;

namespace {

E8LimitInput sample_input(unsigned seed) {
    Sampler smp(seed);
    E8LimitInput in;
    in.binding = e8_sample_binding(smp);
    return in;
}

struct Nums {
    RatFn q, h1, h2, u1, c1, c2, z;
    std::map<Var, EpsLaurent> fg;  // f, g as eps-series
};

Nums numbers(const E8LimitInput& in) {
    const E8Params& P = e8_params();
    Nums n;
    n.q = RatFn(eval_rat(P.q, in.binding));
    n.h1 = RatFn(eval_rat(P.h1, in.binding));
    n.h2 = RatFn(eval_rat(P.h2, in.binding));
    n.u1 = RatFn(eval_rat(P.u[1], in.binding));
    n.c1 = RatFn::variable(var("c1"));
    n.c2 = RatFn::variable(var("c2"));
    n.z = RatFn::variable(P.zv);
    // f = w + h1/w and g = w' + h2/w' at w = u1 + eps c1, w' = u1 + eps c2
    auto series = [&](const RatFn& c, const RatFn& h) {
        EpsLaurent w;
        w.add(0, n.u1);
        w.add(1, c);
        w.truncate(4);
        return w + EpsLaurent(h) * w.inv();
    };
    n.fg.emplace(P.fv, series(n.c1, n.h1));
    n.fg.emplace(P.gv, series(n.c2, n.h2));
    return n;
}

}  // namespace

TEST_CASE("f - f(z) degenerates as displayed") {
    E8LimitInput in = sample_input(41);
    Nums n = numbers(in);
    const E8Params& P = e8_params();
    RatFn fz = n.z + n.h1 / n.z;
    EpsLaurent diff = n.fg.at(P.fv) - EpsLaurent(fz);
    // eps^0 part: -(z - u1)(u1 z - h1)/(u1 z)
    RatFn want = -(n.z - n.u1) * (n.u1 * n.z - n.h1) / (n.u1 * n.z);
    CHECK(diff.at(0).eq(want));
    CHECK(diff.at(1).eq(n.c1 * (1 - n.h1 / (n.u1 * n.u1))));
}

TEST_CASE("psi_n, psi_d and phi degenerate as displayed") {
    E8LimitInput in = sample_input(42);
    Nums n = numbers(in);
    const E8Params& P = e8_params();
    RatFn fbar_zq = n.z / n.q + n.h1 / n.z;  // \bar f(z/q)
    Var F2 = var("tmp_f2"), G = var("tmp_g");
    std::map<Var, EpsLaurent> assign{{F2, n.fg.at(P.fv)}, {G, n.fg.at(P.gv)}};
    EpsLaurent psin = eval_series(
        e8_psi_n(fbar_zq, RatFn::variable(F2), RatFn::variable(G), &in.binding),
        assign);
    EpsLaurent psid = eval_series(
        e8_psi_d(fbar_zq, RatFn::variable(F2), RatFn::variable(G), &in.binding),
        assign);
    const RatFn &q = n.q, &h1 = n.h1, &h2 = n.h2, &u1 = n.u1, &z = n.z;
    RatFn want_n =
        (h1 - h2) * (u1 * z - q * h2) * (h2 * z - h1 * u1) / (q * h2 * u1 * u1 * z);
    RatFn want_d = -(h1 - h2) * (u1 * z - q * h2) * (h2 * z - h1 * u1) /
                   (h1 * h1 * h2 * h2 * z);
    CHECK(psin.at(0).eq(want_n));
    CHECK(psid.at(0).eq(want_d));
    // the leading ratio is the constant -h1^2 h2 / (q u1^2)
    CHECK((psin.at(0) / psid.at(0)).eq(-h1 * h1 * h2 / (q * u1 * u1)));

    // phi(f, g) vanishes to exactly first order with the displayed leading
    // coefficient
    EpsLaurent phi = eval_series(
        e8_phi(RatFn::variable(F2), RatFn::variable(G), &in.binding),
        {{F2, n.fg.at(P.fv)}, {G, n.fg.at(P.gv)}});
    CHECK(phi.valuation() == 1);
    RatFn lead = -(h1 - h2) * (h1 - u1 * u1) * (h2 - u1 * u1) * (n.c1 - n.c2) /
                 (u1.pow(3) * h1 * h2);
    CHECK(phi.at(1).eq(lead));
}

TEST_CASE("degenerate bindings are rejected") {
    Sampler smp(43);
    ParamBinding b = e8_sample_binding(smp);
    const E8Params& P = e8_params();
    CHECK(eval_rat(P.h1, b) != eval_rat(P.h2, b));
    CHECK(eval_rat(P.u[1] * P.u[1], b) != eval_rat(P.h1, b));
    CHECK(eval_rat(P.u[1] * P.u[1], b) != eval_rat(P.h2, b));
    // forcing h1 = h2 makes the expansion throw
    ParamBinding bad = b;
    bad.set(var("H2"), b.get(var("H1")));
    // the derived M8 must be refreshed for the constraint
    const Family& fam = family_e8();
    bad.set(fam.derived, eval_rat(fam.derived_expr, bad));
    E8LimitInput in;
    in.binding = bad;
    CHECK_THROWS_AS((void)eps_expand_L1(in), Error);
}

TEST_CASE("limit theorem holds with symbolic c1, c2") {
    for (unsigned seed : {44u, 45u}) {
        E8LimitInput in = sample_input(seed);
        LimitTheoremReport rep = check_theorem31(in);
        INFO("seed " << seed);
        CHECK(rep.bMinusMatch);
        CHECK(rep.bPlusMatch);
        CHECK(rep.bZeroMatch);
        CHECK(rep.c0Match);
        CHECK(rep.c0PrimeConstant);
        CHECK(rep.hPolesCancelled);
        CHECK(rep.residualC0Prime.is_rational());
    }
}

TEST_CASE("limit theorem holds with bound c1, c2, including c2 = 0") {
    E8LimitInput in = sample_input(46);
    in.c2 = Rat(0);  // c1 stays symbolic
    CHECK(check_theorem31(in).ok());
    // with c2 = 0 the accessory term C0 c2/(c1 - c2) drops out of the limit
    // equation: the eps^0 coefficient must then be free of c1 entirely
    ThreeTermEq lim = take_limit_equation(in);
    CHECK(lim.aZero.is_free_of(var("c1")));
    // and equal bound shift speeds are refused
    E8LimitInput bad = in;
    bad.c1 = Rat(7);
    bad.c2 = Rat(7);
    CHECK_THROWS_AS((void)eps_expand_L1(bad), Error);
}

TEST_CASE("H: direct and partial-fraction forms differ by a constant") {
    E8LimitInput in = sample_input(47);
    RatFn diff = e8_H_direct(in) - e8_H_partial_fraction(in);
    Var zv = e8_params().zv;
    CHECK(diff.is_free_of(zv));
    // apparent poles of the direct form cancel: the reduced form stays
    // finite at all four loci
    RatFn red = e8_H_direct(in).reduced(zv);
    for (const Rat& pole : e8_H_cancelled_poles(in)) {
        std::map<Var, RatFn> at{{zv, RatFn(pole)}};
        CHECK_NOTHROW((void)subst(red, at));
    }
}

TEST_CASE("relabeling u2 <-> u3 leaves the limit equation unchanged") {
    E8LimitInput in = sample_input(48);
    E8LimitInput swapped = in;
    Rat m2 = in.binding.get(var("M2"));
    swapped.binding.set(var("M2"), in.binding.get(var("M3")));
    swapped.binding.set(var("M3"), m2);
    ThreeTermEq a = take_limit_equation(in), b = take_limit_equation(swapped);
    CHECK(a.aMinus.eq(b.aMinus));
    CHECK(a.aZero.eq(b.aZero));
    CHECK(a.aPlus.eq(b.aPlus));
}

TEST_CASE("dictionary equivalence with the degenerated operator") {
    for (unsigned seed : {49u, 50u}) {
        E8LimitInput in = sample_input(seed);
        INFO("seed " << seed);
        CHECK(check_theorem32_rvd(in));
    }
}

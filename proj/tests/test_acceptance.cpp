#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "flat_eval.hpp"
#include "qh/e8limit.hpp"
#include "qh/normalform.hpp"
#include "qh/report.hpp"

using namespace qh;

// Acceptance gate: each criterion prints exactly one PASS/FAIL line with its
// wall-clock time, and fails the binary through doctest when violated.

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
        .count();
}

void line(int n, bool ok, const char* desc, long long ms) {
    std::printf("[%d] %s %s (%lld ms)\n", n, ok ? "PASS" : "FAIL", desc, ms);
    std::fflush(stdout);
}

// verify one case against `seeds` random bindings, resampling degenerate
// bindings; returns false on any failure or per-case budget overrun
bool run_family_case(const CaseSpec& c, int seeds, long long budget_ms,
                     long long& worst_ms) {
    auto t0 = Clock::now();
    Sampler smp(1);
    for (int s = 0; s < seeds; ++s) {
        VerifyResult r;
        bool sampled = false;
        for (int attempt = 0; attempt < 20 && !sampled; ++attempt) {
            ParamBinding b = smp.sample(family_d5());
            r = verify_case(c, &b);
            sampled = r.fail_kind != "DenominatorVanishes";
        }
        if (!sampled || !r.ok) return false;
    }
    long long ms = ms_since(t0);
    if (ms > worst_ms) worst_ms = ms;
    return ms <= budget_ms;
}

bool family_criterion(FamilyKind fam, int expected, long long budget_ms,
                      long long& worst_ms) {
    int count = 0;
    bool ok = true;
    for (const CaseSpec& c : all_cases()) {
        if (c.fam != fam) continue;
        ++count;
        ok = run_family_case(c, 3, budget_ms, worst_ms) && ok;
    }
    return ok && count == expected;
}

Rat rand_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(3, 97), den(1, 13);
    Rat r(num(rng), 2 * den(rng) + 1);
    r.canonicalize();
    return r;
}

RatFn rand_ratfn(std::mt19937_64& rng, const std::vector<Var>& vars) {
    std::uniform_int_distribution<int> coef(-4, 4), pick(0, (int)vars.size() - 1),
        ex(0, 2), terms(1, 4);
    auto poly = [&] {
        MPoly p;
        int n = terms(rng);
        for (int i = 0; i < n; ++i) {
            Mono m = Mono::of(vars[pick(rng)], ex(rng) + 1);
            int c = coef(rng);
            if (c != 0) p.add_term(m, Rat(c));
        }
        p.add_term(Mono::one(), Rat(coef(rng)));
        if (p.is_zero()) p = MPoly(1);
        return p;
    };
    return RatFn(poly(), poly());
}

}  // namespace

TEST_CASE("criterion 1: d5 cases") {
    auto t0 = Clock::now();
    long long worst = 0;
    bool ok = family_criterion(FamilyKind::D5, 12, 5000, worst);
    line(1, ok, "d5: 12 cases exact over 3 random bindings, < 5s per case",
         ms_since(t0));
    CHECK(ok);
}

TEST_CASE("criterion 2: e6 cases") {
    auto t0 = Clock::now();
    long long worst = 0;
    bool ok = family_criterion(FamilyKind::E6, 14, 10000, worst);
    line(2, ok, "e6: 14 cases exact over 3 random bindings, < 10s per case",
         ms_since(t0));
    CHECK(ok);
}

TEST_CASE("criterion 3: e7 cases") {
    auto t0 = Clock::now();
    long long worst = 0;
    bool ok = family_criterion(FamilyKind::E7, 16, 20000, worst);
    // the extracted accessory slot must not depend on z or g
    Sampler smp(1);
    ParamBinding b = smp.sample(family_d5());
    VerifyResult r = verify_case(*find_case("e7:P1"), &b);
    ok = ok && r.ok && r.E_derived.is_free_of(var("z")) &&
         r.E_derived.is_free_of(var("g"));
    line(3, ok,
         "e7: 16 cases exact over 3 random bindings, < 20s per case, "
         "accessory slot free of z and g",
         ms_since(t0));
    CHECK(ok);
}

TEST_CASE("criterion 4: e8 limit-equation identities") {
    auto t0 = Clock::now();
    bool ok = true;
    Sampler smp(1);
    for (int s = 0; s < 5 && ok; ++s) {
        E8LimitInput in;  // z, c1, c2 stay symbolic
        in.binding = e8_sample_binding(smp);
        ok = check_theorem31(in).ok();
    }
    long long ms = ms_since(t0);
    ok = ok && ms < 60000;
    line(4, ok,
         "e8 limit theorem: exact over 5 random bindings with z, c1, c2 "
         "symbolic, < 60s total",
         ms);
    CHECK(ok);
}

TEST_CASE("criterion 5: e8 operator dictionary") {
    auto t0 = Clock::now();
    bool ok = true;
    Sampler smp(2);
    for (int s = 0; s < 5 && ok; ++s) {
        E8LimitInput in;
        in.binding = e8_sample_binding(smp);
        ok = check_theorem32_rvd(in);
    }
    long long ms = ms_since(t0);
    ok = ok && ms < 30000;
    line(5, ok,
         "e8 dictionary: limit equation equals the degenerated operator over "
         "5 random bindings, < 30s total",
         ms);
    CHECK(ok);
}

TEST_CASE("criterion 6: d5 dynamics") {
    auto t0 = Clock::now();
    bool ok = true;
    const StdParams& P = std_params();
    Sampler smp(6);
    ParamBinding b = smp.sample(family_d5());

    // indeterminacy is detected exactly at the eight base points
    for (int i = 1; i <= 8 && ok; ++i) {
        D5State s = d5_base_point(i, b);
        ok = d5_detect_base_point(s, b) == i;
        try {
            (void)d5_evolve(s, b);
            ok = false;
        } catch (const Error& e) {
            ok = ok && e.kind == "Indeterminate";
        }
    }

    // resolved map on the exceptional line of P5 matches the display
    Var tv = var("t_dir");
    {
        auto [fb, gb] = d5_resolved_map(5, tv);
        RatFn t = RatFn::variable(tv);
        RatFn want = P.nu[3] * P.nu[4] * t * ((P.nu[5] - P.nu[6]) / P.kappa2) /
                     ((P.nu[5] / P.kappa2 - 1 / P.nu[1]) *
                      (P.nu[5] / P.kappa2 - 1 / P.nu[2]));
        ok = ok && fb.eq(want) && !gb.is_zero();
    }

    // directional limits: approaching P_i along a chart direction agrees
    // with the resolved map at that direction
    RatFn f = RatFn::variable(P.fv), g = RatFn::variable(P.gv);
    RatFn fbar = P.nu[3] * P.nu[4] * (g - P.nu[5] / P.kappa2) *
                 (g - P.nu[6] / P.kappa2) /
                 (f * (g - 1 / P.nu[1]) * (g - 1 / P.nu[2]));
    RatFn gbar = (fbar - P.kappa1 / (P.q * P.nu[7])) *
                 (fbar - P.kappa1 / (P.q * P.nu[8])) /
                 (P.nu[1] * P.nu[2] * (fbar - P.nu[3]) * (fbar - P.nu[4]) * g);
    Var ev = var("eps_dir");
    RatFn e = RatFn::variable(ev), t = RatFn::variable(tv);
    for (int i = 1; i <= 8 && ok; ++i) {
        RatFn fe, ge;
        if (i <= 2) {
            fe = 1 / e;
            ge = e * t + 1 / P.nu[i];
        } else if (i <= 4) {
            fe = e * t + P.nu[i];
            ge = 1 / e;
        } else if (i <= 6) {
            fe = e;
            ge = e * t + P.nu[i] / P.kappa2;
        } else {
            fe = e * t + P.kappa1 / P.nu[i];
            ge = e;
        }
        std::map<Var, RatFn> onto{{P.fv, fe}, {P.gv, ge}};
        std::map<Var, RatFn> dir{{tv, RatFn(Rat(4, 7))}};
        RatFn fraw = subst(specialize(subst(fbar, onto), b), dir);
        RatFn graw = subst(specialize(subst(gbar, onto), b), dir);
        auto [fres, gres] = d5_resolved_map(i, tv);
        ok = ok &&
             restrict_to_exceptional(fraw, ev).eq(
                 subst(specialize(fres, b), dir)) &&
             restrict_to_exceptional(graw, ev).eq(
                 subst(specialize(gres, b), dir));
    }

    // ten evolution steps keep the parameter constraint and stay resolved
    D5State s;
    s.f = Rat(17, 4);
    s.g = Rat(5, 13);
    for (int step = 0; step < 10 && ok; ++step) {
        ok = d5_detect_base_point(s, b) == 0;
        if (!ok) break;
        try {
            s = d5_evolve(s, b);
        } catch (const Error&) {
            ok = false;
            break;
        }
        Rat p = b.get(var("p"));
        b.set(var("k1"), b.get(var("k1")) / p);
        b.set(var("k2"), b.get(var("k2")) * p);
        Rat gap = eval_rat(P.kappa1 * P.kappa1 * P.kappa2 * P.kappa2 -
                               P.q * P.nu[1] * P.nu[2] * P.nu[3] * P.nu[4] *
                                   P.nu[5] * P.nu[6] * P.nu[7] * P.nu[8],
                           b);
        ok = ok && gap == 0;
    }

    line(6, ok,
         "d5 dynamics: base-point detection, resolved map at P5, directional "
         "limits at all 8 points, constraint kept over 10 steps",
         ms_since(t0));
    CHECK(ok);
}

TEST_CASE("criterion 7: randomized property suites") {
    auto t0 = Clock::now();
    std::mt19937_64 rng(77);
    int cases = 0;
    bool ok = true;
    Var x = var("x"), y = var("y"), w = var("w");
    std::vector<Var> vars{x, y, w};

    // field laws and substitution homomorphism
    for (int i = 0; i < 450 && ok; ++i, ++cases) {
        RatFn a = rand_ratfn(rng, vars), bq = rand_ratfn(rng, vars),
              c = rand_ratfn(rng, vars);
        ok = ((a + bq) * c).eq(a * c + bq * c) && ((a - bq) + (bq - a)).is_zero() &&
             a.pow(3).eq(a * a * a);
        if (ok && !bq.is_zero()) ok = ((a * bq) / bq).eq(a);
        if (ok) {
            std::map<Var, RatFn> pt{{x, RatFn(rand_point(rng))},
                                    {y, RatFn(rand_point(rng))}};
            try {
                ok = subst(a * bq + c, pt).eq(subst(a, pt) * subst(bq, pt) +
                                              subst(c, pt));
            } catch (const Error&) {
                // substitution hit a pole; still a valid draw
            }
        }
    }

    // projective equality laws and gauge composition
    Var zv = var("z");
    RatFn q(Rat(4)), z = RatFn::variable(zv);
    auto rand_eq = [&] {
        ThreeTermEq eq;
        eq.zv = zv;
        eq.q = q;
        eq.aMinus = rand_ratfn(rng, {zv}) + 1;
        eq.aZero = rand_ratfn(rng, {zv}) + 2;
        eq.aPlus = rand_ratfn(rng, {zv}) + 3;
        return eq;
    };
    for (int i = 0; i < 250 && ok; ++i, ++cases) {
        ThreeTermEq a = rand_eq();
        RatFn s = rand_ratfn(rng, {zv});
        if (s.is_zero()) s = z + 5;
        ThreeTermEq b{a.zv, a.q, a.aMinus * s, a.aZero * s, a.aPlus * s};
        ok = proj_equal(a, a) && proj_equal(a, b) && proj_equal(b, a);
        ThreeTermEq d = a;
        d.aZero = a.aZero + z.pow(7) + 11;
        ok = ok && !proj_equal(a, d);
    }
    for (int i = 0; i < 150 && ok; ++i, ++cases) {
        ThreeTermEq eq = rand_eq();
        RatFn Q1(rand_point(rng)), Q2(rand_point(rng));
        ThreeTermEq twice = gauge_power(gauge_power(eq, Q1), Q2);
        ThreeTermEq once = gauge_power(eq, Q1 * Q2);
        ok = twice.aMinus.eq(once.aMinus) && twice.aZero.eq(once.aZero) &&
             twice.aPlus.eq(once.aPlus);
        RatFn r1 = z + RatFn(rand_point(rng)), r2 = z + RatFn(rand_point(rng));
        ThreeTermEq rr = gauge_rational(gauge_rational(eq, r1), r2);
        ThreeTermEq ro = gauge_rational(eq, r1 * r2);
        ok = ok && rr.aMinus.eq(ro.aMinus) && rr.aZero.eq(ro.aZero) &&
             rr.aPlus.eq(ro.aPlus);
    }

    // extract/build round trip
    for (int i = 0; i < 150 && ok; ++i, ++cases) {
        ThreeTermEq eq = rand_eq();
        ThreeTermEq back = to_three_term(to_operator(eq));
        ok = back.aMinus.eq(eq.aMinus) && back.aZero.eq(eq.aZero) &&
             back.aPlus.eq(eq.aPlus);
    }

    // laurent_to_w_poly round trip on symmetric Laurent polynomials
    Var wv = var("w_rt");
    for (int i = 0; i < 100 && ok; ++i, ++cases) {
        RatFn h2(rand_point(rng));
        LaurentZ wlz;
        wlz.add(1, RatFn(1L));
        wlz.add(-1, h2);
        RatFn wexpr = RatFn::variable(wv);
        LaurentZ acc = LaurentZ::monomial(0, RatFn(1L));
        std::uniform_int_distribution<int> deg(0, 4);
        int d = deg(rng);
        RatFn want(0L);
        LaurentZ sum;
        for (int k = 0; k <= d; ++k) {
            Rat ck = rand_point(rng);
            sum = sum + acc.scaled(RatFn(ck));
            want = want + RatFn(ck) * wexpr.pow(k);
            acc = acc * wlz;
        }
        ok = laurent_to_w_poly(sum, h2, wv).eq(want);
    }

    bool enough = cases >= 1000;
    line(7, ok && enough,
         "property suites: >= 1000 randomized algebra/gauge/round-trip cases",
         ms_since(t0));
    CHECK(ok);
    CHECK(enough);
}

TEST_CASE("criterion 8: dual-transcription oracle") {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(88);

    auto numeric = [&](const RatFn& expr, const ParamBinding& b, const Rat& fv,
                       const Rat& gv, const Rat& zval) {
        ParamBinding full = b;
        full.set(var("f"), fv);
        full.set(var("g"), gv);
        full.set(var("z"), zval);
        return eval_rat(expr, full);
    };

    // degree-2/3/4 families: structured operator vs flat transcription
    struct Fam {
        const char* tag;
        ShiftOperator op;
        flat::Triple (*flat_fn)(const flat::StdVals&);
    };
    std::vector<Fam> fams{{"d5", lax_l1_d5(), flat::l1_d5},
                          {"e6", lax_l1_e6(), flat::l1_e6},
                          {"e7", lax_l1_e7(), flat::l1_e7}};
    Sampler smp(8);
    for (const Fam& fam : fams) {
        for (int bi = 0; bi < 5 && ok; ++bi) {
            ParamBinding b = smp.sample(family_d5());
            flat::StdVals v;
            for (int i = 1; i <= 8; ++i) {
                Rat m = b.get(var("m" + std::to_string(i)));
                v.nu[i] = m * m;
            }
            Rat k1 = b.get(var("k1")), k2 = b.get(var("k2")), p = b.get(var("p"));
            v.k1 = k1 * k1;
            v.k2 = k2 * k2;
            v.q = p * p;
            for (int attempt = 0;; ++attempt) {
                if (attempt >= 20) {
                    ok = false;
                    break;
                }
                v.f = rand_point(rng);
                v.g = rand_point(rng);
                v.z = rand_point(rng);
                try {
                    flat::Triple want = fam.flat_fn(v);
                    ok = numeric(fam.op.coeff(-1), b, v.f, v.g, v.z) == want[0] &&
                         numeric(fam.op.coeff(0), b, v.f, v.g, v.z) == want[1] &&
                         numeric(fam.op.coeff(1), b, v.f, v.g, v.z) == want[2];
                } catch (const std::exception&) {
                    continue;  // pole; redraw
                }
                break;
            }
        }
    }

    // e8
    for (int bi = 0; bi < 5 && ok; ++bi) {
        ParamBinding b = smp.sample(family_e8());
        E8Lax L = lax_l1_e8(&b);
        flat::E8Vals v;
        for (int i = 1; i <= 8; ++i) {
            Rat m = b.get(var("M" + std::to_string(i)));
            v.u[i] = m * m;
        }
        Rat h1 = b.get(var("H1")), h2 = b.get(var("H2")), p = b.get(var("P"));
        v.h1 = h1 * h1;
        v.h2 = h2 * h2;
        v.q = p * p;
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 20) {
                ok = false;
                break;
            }
            v.f = rand_point(rng);
            v.g = rand_point(rng);
            v.z = rand_point(rng);
            try {
                flat::Triple want = flat::l1_e8(v);
                ok = numeric(L.aMinus, b, v.f, v.g, v.z) == want[0] &&
                     numeric(L.aZero, b, v.f, v.g, v.z) == want[1] &&
                     numeric(L.aPlus, b, v.f, v.g, v.z) == want[2];
            } catch (const std::exception&) {
                continue;
            }
            break;
        }
    }

    line(8, ok,
         "dual transcription: structured L1 equals the flat re-transcription "
         "for all four families over 5 bindings and random (f, g)",
         ms_since(t0));
    CHECK(ok);
}

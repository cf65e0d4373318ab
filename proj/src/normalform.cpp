#include "qh/normalform.hpp"

#include <limits>

namespace qh {

namespace {

const StdParams& SP() { return std_params(); }

RatFn zvar() { return RatFn::variable(SP().zv); }

// ---------------------------------------------------------------------------
// normal forms

ThreeTermEq build_nf(const CaseSpec& c, int branch) {
    const StdParams& P = SP();
    RatFn z = zvar();
    const RatFn& p = P.sq;
    RatFn E = RatFn::variable(var("E"));
    ThreeTermEq nf;
    nf.zv = P.zv;
    nf.q = P.q;
    const HeunClaims& cl = c.claims;
    RatFn hl(1L);
    for (auto& h : cl.h) hl *= h;
    for (auto& l : cl.l) hl *= l;
    if (c.kind == NormalKind::Deg2) {
        nf.aMinus = (z - cl.h[0] * p) * (z - cl.h[1] * p);
        nf.aPlus = cl.l[2] * cl.l[3] * (z - cl.l[0] / p) * (z - cl.l[1] / p);
        RatFn S = sqrt_monomial(cl.l[0] * cl.l[1] * cl.l[2] * cl.l[3] * cl.h[0] * cl.h[1] *
                                cl.hratio) +
                  sqrt_monomial(cl.l[0] * cl.l[1] * cl.l[2] * cl.l[3] * cl.h[0] * cl.h[1] /
                                cl.hratio);
        nf.aZero = -((cl.l[2] + cl.l[3]) * z * z + E * z + branch * S);
    } else if (c.kind == NormalKind::Deg3) {
        nf.aMinus = (z - cl.h[0] * p) * (z - cl.h[1] * p) * (z - cl.h[2] * p);
        nf.aPlus = (z - cl.l[0] / p) * (z - cl.l[1] / p) * (z - cl.l[2] / p);
        RatFn sum(0L);
        for (auto& h : cl.h) sum += h;
        for (auto& l : cl.l) sum += l;
        RatFn S = sqrt_monomial(hl * cl.hratio) + sqrt_monomial(hl / cl.hratio);
        nf.aZero = -(p + 1 / p) * z.pow(3) + sum * z * z - E * z + RatFn(branch) * S;
    } else {
        nf.aMinus = (z - cl.h[0] * p) * (z - cl.h[1] * p) * (z - cl.h[2] * p) *
                    (z - cl.h[3] * p);
        nf.aPlus = (z - cl.l[0] / p) * (z - cl.l[1] / p) * (z - cl.l[2] / p) *
                   (z - cl.l[3] / p);
        RatFn sum(0L), isum(0L);
        for (auto& h : cl.h) {
            sum += h;
            isum += 1 / h;
        }
        for (auto& l : cl.l) {
            sum += l;
            isum += 1 / l;
        }
        RatFn S = sqrt_monomial(hl);
        nf.aZero = -(p + 1 / p) * z.pow(4) + sum * z.pow(3) + E * z * z +
                   RatFn(branch) * S * (isum * z - (p + 1 / p));
    }
    return nf;
}

// ---------------------------------------------------------------------------
// case registry

struct Reg {
    std::vector<CaseSpec> cases;
};

RatFn rsum(std::initializer_list<RatFn> xs) {
    RatFn s(0L);
    for (auto& x : xs) s += x;
    return s;
}

const CaseSpec* find_case_in(const std::vector<CaseSpec>& cs, const std::string& id) {
    for (auto& c : cs)
        if (c.id == id) return &c;
    throw Error("UnknownCase", "no case named " + id);
}

Reg build_registry() {
    const StdParams& P = SP();
    Var f1v = var("f1"), g1v = var("g1");
    RatFn F1 = RatFn::variable(f1v), G1 = RatFn::variable(g1v);
    RatFn z = zvar();
    const RatFn& q = P.q;
    const RatFn& p = P.sq;
    const RatFn& k1 = P.kappa1;
    const RatFn& k2 = P.kappa2;
    auto nu = [&](int i) { return P.nu[i]; };

    Reg R;
    auto add = [&](CaseSpec c) { R.cases.push_back(std::move(c)); };
    auto swapped = [&](const std::string& base, const std::string& id, const char* a,
                       const char* b) {
        add(swap_case(*find_case_in(R.cases, base), id, var(a), var(b)));
    };

    // ---- D5 ------------------------------------------------------------
    {
        CaseSpec c;
        c.id = "d5:P5";
        c.fam = FamilyKind::D5;
        c.kind = NormalKind::Deg2;
        c.chart = {F1, F1 * G1 + nu(5) / k2, f1v};
        c.claims.h = {p * nu(3), p * nu(4)};
        c.claims.hratio = q * nu(5) / nu(6);
        c.claims.l = {p * k1 / nu(7), p * k1 / nu(8), 1 / nu(1), 1 / nu(2)};
        c.claims.E = q * G1 * nu(3) * nu(4) * (1 - nu(6) / nu(5)) -
                     q * nu(5) * (nu(3) + nu(4)) / k2 -
                     k1 * k2 * (nu(7) + nu(8)) / (nu(1) * nu(2) * nu(5) * nu(7) * nu(8));
        c.claims.accessory = g1v;
        add(c);
    }
    {
        CaseSpec c;
        c.id = "d5:P7";
        c.fam = FamilyKind::D5;
        c.kind = NormalKind::Deg2;
        c.chart = {F1 * G1 + k1 / nu(7), G1, g1v};
        c.gauges.push_back({GaugeStep::Rational, nu(7) * z - k1});
        c.claims.h = {p * nu(3), p * nu(4)};
        c.claims.hratio = nu(6) / nu(5);
        c.claims.l = {k1 / (p * nu(7)), p * k1 / nu(8), q / nu(1), q / nu(2)};
        c.claims.E = q * F1 / (nu(1) * nu(2)) * (1 - nu(7) / nu(8)) -
                     k1 * q / nu(7) * (1 / nu(1) + 1 / nu(2)) -
                     q * q * nu(3) * nu(4) * nu(7) * (nu(5) + nu(6)) / (k1 * k2);
        c.claims.accessory = f1v;
        add(c);
    }
    {
        CaseSpec c;
        c.id = "d5:P1";
        c.fam = FamilyKind::D5;
        c.kind = NormalKind::Deg2;
        c.chart = {1 / F1, F1 * G1 + 1 / nu(1), f1v};
        c.claims.h = {p * nu(3), p * nu(4)};
        c.claims.hratio = nu(6) / nu(5);
        c.claims.l = {p * k1 / nu(7), p * k1 / nu(8), 1 / nu(1), q / nu(2)};
        c.claims.E = G1 * q * (1 - nu(1) / nu(2)) - q * (nu(3) + nu(4)) / nu(1) -
                     k1 * q / nu(2) * (1 / nu(7) + 1 / nu(8));
        c.claims.accessory = g1v;
        add(c);
    }
    {
        CaseSpec c;
        c.id = "d5:P3";
        c.fam = FamilyKind::D5;
        c.kind = NormalKind::Deg2;
        c.chart = {F1 * G1 + nu(3), 1 / G1, g1v};
        c.gauges.push_back({GaugeStep::Rational, z - q * nu(3)});
        c.claims.h = {p.pow(3) * nu(3), p * nu(4)};
        c.claims.hratio = nu(6) / nu(5);
        c.claims.l = {p * k1 / nu(7), p * k1 / nu(8), q / nu(1), q / nu(2)};
        c.claims.E = q * q *
                     (F1 * (1 - nu(4) / nu(3)) - nu(3) * (1 / nu(1) + 1 / nu(2)) -
                      nu(4) * (nu(5) + nu(6)) / k2);
        c.claims.accessory = f1v;
        add(c);
    }
    {
        CaseSpec c;
        c.id = "d5:f=k1/nu7";
        c.fam = FamilyKind::D5;
        c.kind = NormalKind::Deg2;
        c.is_chart = false;
        c.f_value = k1 / nu(7);
        c.claims.h = {p * nu(3), p * nu(4)};
        c.claims.hratio = nu(6) / nu(5);
        c.claims.l = {p.pow(3) * k1 / nu(7), p * k1 / nu(8), 1 / nu(1), 1 / nu(2)};
        c.claims.E = q * (nu(3) * nu(7) - k1) * (nu(4) * nu(7) - k1) *
                         RatFn::variable(P.gv) / (nu(7) * k1) -
                     k1 * q / nu(7) * (1 / nu(1) + 1 / nu(2)) -
                     q * nu(3) * nu(4) * nu(7) * (nu(5) + nu(6)) / (k1 * k2);
        c.claims.accessory = P.gv;
        add(c);
    }
    {
        CaseSpec c;
        c.id = "d5:f=nu3";
        c.fam = FamilyKind::D5;
        c.kind = NormalKind::Deg2;
        c.is_chart = false;
        c.f_value = nu(3);
        c.claims.h = {nu(3) / p, p * nu(4)};
        c.claims.hratio = nu(6) / nu(5);
        c.claims.l = {p * k1 / nu(7), p * k1 / nu(8), 1 / nu(1), 1 / nu(2)};
        c.claims.E = (nu(3) - k1 / nu(7)) * (nu(3) - k1 / nu(8)) /
                         (nu(1) * nu(2) * nu(3) * RatFn::variable(P.gv)) -
                     (nu(3) / nu(1) + nu(3) / nu(2) + q * nu(4) * nu(5) / k2 +
                      q * nu(4) * nu(6) / k2);
        c.claims.accessory = P.gv;
        add(c);
    }
    swapped("d5:P5", "d5:P6", "m5", "m6");
    swapped("d5:P7", "d5:P8", "m7", "m8");
    swapped("d5:P1", "d5:P2", "m1", "m2");
    swapped("d5:P3", "d5:P4", "m3", "m4");
    swapped("d5:f=k1/nu7", "d5:f=k1/nu8", "m7", "m8");
    swapped("d5:f=nu3", "d5:f=nu4", "m3", "m4");

    // ---- E6 ------------------------------------------------------------
    RatFn alpha1 = 1 / (q * nu(1));  // pochhammer parameter (z/nu1; q)_inf
    {
        CaseSpec c;
        c.id = "e6:P5";
        c.fam = FamilyKind::E6;
        c.kind = NormalKind::Deg3;
        c.chart = {F1 * G1, G1 + nu(5) / k2, g1v};
        c.gauges.push_back({GaugeStep::Pochhammer, alpha1});
        c.claims.h = {p * nu(2), p * nu(3), p * nu(4)};
        c.claims.hratio = q * nu(5) / nu(6);
        c.claims.l = {p * nu(1), p * k1 / nu(7), p * k1 / nu(8)};
        c.claims.E =
            p.pow(3) *
            (nu(1) * nu(2) * nu(3) * nu(4) * (nu(6) / nu(5) - 1) *
                 (1 / F1 + nu(5) * nu(5) / (k2 * k2)) +
             nu(1) * nu(2) * nu(3) * nu(4) * nu(5) / k2 *
                 rsum({1 / nu(1), 1 / nu(2), 1 / nu(3), 1 / nu(4)}) +
             k2 / (q * nu(5)) * (k1 / nu(7) + k1 / nu(8)));
        c.claims.accessory = f1v;
        add(c);
    }
    {
        CaseSpec c;
        c.id = "e6:P7";
        c.fam = FamilyKind::E6;
        c.kind = NormalKind::Deg3;
        c.chart = {F1 * G1 + k1 / nu(7), G1, g1v};
        c.gauges.push_back({GaugeStep::Rational, z - k1 / nu(7)});
        c.gauges.push_back({GaugeStep::Pochhammer, alpha1});
        c.claims.h = {p * nu(2), p * nu(3), p * nu(4)};
        c.claims.hratio = nu(5) / nu(6);
        c.claims.l = {p * nu(1), k1 / (p * nu(7)), p * k1 / nu(8)};
        c.claims.E =
            p * ((F1 + k1 * k1 / (nu(7) * nu(7))) * (nu(7) / nu(8) - 1) +
                 k1 / nu(7) * rsum({nu(1), nu(2), nu(3), nu(4)}) +
                 k1 / nu(8) * (k2 / nu(5) + k2 / nu(6)));
        c.claims.accessory = f1v;
        add(c);
    }
    {
        CaseSpec c;
        c.id = "e6:P1";
        c.fam = FamilyKind::E6;
        c.kind = NormalKind::Deg3;
        c.chart = {F1 * G1 + nu(1), G1 + 1 / nu(1), g1v};
        c.gauges.push_back({GaugeStep::Pochhammer, alpha1});
        c.claims.h = {p * nu(2), p * nu(3), p * nu(4)};
        c.claims.hratio = nu(5) / nu(6);
        c.claims.l = {p.pow(3) * nu(1), p * k1 / nu(7), p * k1 / nu(8)};
        c.claims.E =
            p.pow(3) *
            (nu(1) * (nu(2) - nu(1)) * (nu(3) - nu(1)) * (nu(4) - nu(1)) /
                 (F1 + nu(1) * nu(1)) +
             nu(1) * (k1 / nu(7) + k1 / nu(8)) +
             nu(2) * nu(3) * nu(4) *
                 rsum({-1 / nu(1), 1 / nu(2), 1 / nu(3), 1 / nu(4), nu(5) / k2,
                       nu(6) / k2}));
        c.claims.accessory = f1v;
        add(c);
    }
    {
        CaseSpec c;
        c.id = "e6:f=k1/nu7";
        c.fam = FamilyKind::E6;
        c.kind = NormalKind::Deg3;
        c.is_chart = false;
        c.f_value = k1 / nu(7);
        c.gauges.push_back({GaugeStep::Pochhammer, alpha1});
        c.claims.h = {p * nu(2), p * nu(3), p * nu(4)};
        c.claims.hratio = nu(5) / nu(6);
        c.claims.l = {p * nu(1), p.pow(3) * k1 / nu(7), p * k1 / nu(8)};
        RatFn g = RatFn::variable(P.gv);
        c.claims.E =
            p.pow(3) *
            ((1 - nu(1) * nu(7) / k1) * (1 - nu(2) * nu(7) / k1) *
                 (1 - nu(3) * nu(7) / k1) * (1 - nu(4) * nu(7) / k1) /
                 ((g - nu(7) / k1) * nu(7) / k1) +
             k1 * k1 / (nu(7) * nu(8)) +
             nu(1) * nu(2) * nu(3) * nu(4) * nu(7) / k1 *
                 rsum({-1 / nu(1), -1 / nu(2), -1 / nu(3), -1 / nu(4), nu(5) / k2,
                       nu(6) / k2, nu(7) / k1}) +
             rsum({nu(1) * nu(2), nu(1) * nu(3), nu(1) * nu(4), nu(2) * nu(3),
                   nu(2) * nu(4), nu(3) * nu(4)}));
        c.claims.accessory = P.gv;
        add(c);
    }
    {
        CaseSpec c;
        c.id = "e6:f=nu1";
        c.fam = FamilyKind::E6;
        c.kind = NormalKind::Deg3;
        c.is_chart = false;
        c.f_value = nu(1);
        c.gauges.push_back({GaugeStep::Pochhammer, 1 / nu(1)});
        c.claims.h = {p * nu(2), p * nu(3), p * nu(4)};
        c.claims.hratio = nu(5) / nu(6);
        c.claims.l = {nu(1) / p, p * k1 / nu(7), p * k1 / nu(8)};
        RatFn g = RatFn::variable(P.gv);
        c.claims.E = p * (-(nu(1) - k1 / nu(7)) * (nu(1) - k1 / nu(8)) / (g * nu(1)) +
                          nu(1) * (nu(2) + nu(3) + nu(4)) + k1 * k1 / (nu(7) * nu(8)) +
                          k1 * k1 / (nu(1) * nu(7) * nu(8)) * (k2 / nu(5) + k2 / nu(6)));
        c.claims.accessory = P.gv;
        add(c);
    }
    swapped("e6:P5", "e6:P6", "m5", "m6");
    swapped("e6:P7", "e6:P8", "m7", "m8");
    swapped("e6:P1", "e6:P2", "m1", "m2");
    swapped("e6:P1", "e6:P3", "m1", "m3");
    swapped("e6:P1", "e6:P4", "m1", "m4");
    swapped("e6:f=k1/nu7", "e6:f=k1/nu8", "m7", "m8");
    swapped("e6:f=nu1", "e6:f=nu2", "m1", "m2");
    swapped("e6:f=nu1", "e6:f=nu3", "m1", "m3");
    swapped("e6:f=nu1", "e6:f=nu4", "m1", "m4");

    // ---- E7 ------------------------------------------------------------
    {
        CaseSpec c;
        c.id = "e7:P1";
        c.fam = FamilyKind::E7;
        c.kind = NormalKind::Deg4;
        c.chart = {F1 * G1 + nu(1), G1 + 1 / nu(1), g1v};
        c.gauges.push_back({GaugeStep::Rational, q * nu(1) - z});
        c.claims.h = {p.pow(3) * nu(1), p * nu(2), p * nu(3), p * nu(4)};
        c.claims.l = {p * k1 / nu(5), p * k1 / nu(6), p * k1 / nu(7), p * k1 / nu(8)};
        RatFn K1 = nu(1) * (k1 - k2) * (nu(1) - nu(2)) * (nu(1) - nu(3)) *
                   (nu(1) - nu(4));
        RatFn K2 = k1 * nu(1) *
                       rsum({(-nu(1) + nu(2) + nu(3) + nu(4)) / k2, 1 / nu(5),
                             1 / nu(6), 1 / nu(7), 1 / nu(8)}) +
                   nu(2) * nu(3) * nu(4) *
                       rsum({-1 / nu(1), 1 / nu(2), 1 / nu(3), 1 / nu(4),
                             (nu(5) + nu(6) + nu(7) + nu(8)) / k2});
        c.claims.E = -p.pow(3) * (K1 / (k2 * (F1 + nu(1) * nu(1))) + K2);
        c.claims.accessory = f1v;
        add(c);
    }
    {
        CaseSpec c;
        c.id = "e7:P5";
        c.fam = FamilyKind::E7;
        c.kind = NormalKind::Deg4;
        c.chart = {F1 * G1 + k1 / nu(5), G1 + nu(5) / k2, g1v};
        c.gauges.push_back({GaugeStep::Rational, k1 - nu(5) * z});
        c.claims.h = {p * nu(1), p * nu(2), p * nu(3), p * nu(4)};
        c.claims.l = {k1 / (p * nu(5)), p * k1 / nu(6), p * k1 / nu(7), p * k1 / nu(8)};
        RatFn K1 = q * nu(1) * nu(2) * nu(3) * nu(4) * (k1 - k2) * (nu(5) - nu(6)) *
                   (nu(5) - nu(7)) * (nu(5) - nu(8));
        RatFn K2 = k1 * k2 / nu(5) *
                       rsum({(nu(1) + nu(2) + nu(3) + nu(4)) / k2, -1 / nu(5),
                             1 / nu(6), 1 / nu(7), 1 / nu(8)}) +
                   q * nu(1) * nu(2) * nu(3) * nu(4) * nu(5) / k2 *
                       rsum({1 / nu(1), 1 / nu(2), 1 / nu(3), 1 / nu(4),
                             (-nu(5) + nu(6) + nu(7) + nu(8)) / k2});
        c.claims.E = -p * (K1 / (k2 * nu(5) * (F1 * nu(5) * nu(5) + k1 * k2)) + K2);
        c.claims.accessory = f1v;
        add(c);
    }
    {
        CaseSpec c;
        c.id = "e7:f=nu1";
        c.fam = FamilyKind::E7;
        c.kind = NormalKind::Deg4;
        c.is_chart = false;
        c.f_value = nu(1);
        c.claims.h = {nu(1) / p, p * nu(2), p * nu(3), p * nu(4)};
        c.claims.l = {p * k1 / nu(5), p * k1 / nu(6), p * k1 / nu(7), p * k1 / nu(8)};
        RatFn g = RatFn::variable(P.gv);
        c.claims.E_accessory_part =
            -p * (nu(1) - k1 / nu(5)) * (nu(1) - k1 / nu(6)) * (nu(1) - k1 / nu(7)) *
            (nu(1) - k1 / nu(8)) * (k1 - k2) /
            (nu(1) * nu(1) * (g * nu(1) * k2 - k1));
        c.claims.accessory = P.gv;
        add(c);
    }
    {
        CaseSpec c;
        c.id = "e7:f=k1/nu5";
        c.fam = FamilyKind::E7;
        c.kind = NormalKind::Deg4;
        c.is_chart = false;
        c.f_value = k1 / nu(5);
        c.claims.h = {p * nu(1), p * nu(2), p * nu(3), p * nu(4)};
        c.claims.l = {p.pow(3) * k1 / nu(5), p * k1 / nu(6), p * k1 / nu(7),
                      p * k1 / nu(8)};
        RatFn g = RatFn::variable(P.gv);
        c.claims.E_accessory_part =
            -p.pow(3) * (k1 - k2) * (k1 - nu(1) * nu(5)) * (k1 - nu(2) * nu(5)) *
            (k1 - nu(3) * nu(5)) * (k1 - nu(4) * nu(5)) /
            (k1 * k1 * k2 * nu(5) * (nu(5) - k1 * g));
        c.claims.accessory = P.gv;
        add(c);
    }
    swapped("e7:P1", "e7:P2", "m1", "m2");
    swapped("e7:P1", "e7:P3", "m1", "m3");
    swapped("e7:P1", "e7:P4", "m1", "m4");
    swapped("e7:P5", "e7:P6", "m5", "m6");
    swapped("e7:P5", "e7:P7", "m5", "m7");
    swapped("e7:P5", "e7:P8", "m5", "m8");
    swapped("e7:f=nu1", "e7:f=nu2", "m1", "m2");
    swapped("e7:f=nu1", "e7:f=nu3", "m1", "m3");
    swapped("e7:f=nu1", "e7:f=nu4", "m1", "m4");
    swapped("e7:f=k1/nu5", "e7:f=k1/nu6", "m5", "m6");
    swapped("e7:f=k1/nu5", "e7:f=k1/nu7", "m5", "m7");
    swapped("e7:f=k1/nu5", "e7:f=k1/nu8", "m5", "m8");
    return R;
}

}  // namespace

const std::vector<CaseSpec>& all_cases() {
    static const Reg R = build_registry();
    return R.cases;
}

const CaseSpec* find_case(const std::string& id) {
    for (auto& c : all_cases())
        if (c.id == id) return &c;
    return nullptr;
}

CaseSpec swap_case(const CaseSpec& c, const std::string& id, Var a, Var b) {
    std::map<Var, RatFn> sw{{a, RatFn::variable(b)}, {b, RatFn::variable(a)}};
    auto sub = [&](const RatFn& e) { return subst(e, sw); };
    CaseSpec r = c;
    r.id = id;
    r.chart.f_expr = sub(r.chart.f_expr);
    r.chart.g_expr = sub(r.chart.g_expr);
    r.f_value = sub(r.f_value);
    for (auto& gs : r.gauges) gs.param = sub(gs.param);
    for (auto& h : r.claims.h) h = sub(h);
    for (auto& l : r.claims.l) l = sub(l);
    r.claims.hratio = sub(r.claims.hratio);
    if (r.claims.E) r.claims.E = sub(*r.claims.E);
    if (r.claims.E_accessory_part) r.claims.E_accessory_part = sub(*r.claims.E_accessory_part);
    return r;
}

ThreeTermEq normal_form(const CaseSpec& c) { return build_nf(c, 1); }

namespace {
// impose the product constraint: specialize under a binding (which fixes
// the derived variable), or substitute it symbolically
RatFn impose(const RatFn& e, const ParamBinding* b) {
    if (b) return specialize(e, *b);
    const Family& fam = family_d5();
    std::map<Var, RatFn> m{{fam.derived, fam.derived_expr}};
    return subst(e, m);
}

// classic lex order (exponents compared variable by variable, absent = 0);
// unlike the map order of MPoly this is compatible with multiplication
bool lex_less(const Mono& a, const Mono& b) {
    size_t i = 0, j = 0;
    while (i < a.e.size() || j < b.e.size()) {
        Var va = i < a.e.size() ? a.e[i].first : std::numeric_limits<Var>::max();
        Var vb = j < b.e.size() ? b.e[j].first : std::numeric_limits<Var>::max();
        Var v = std::min(va, vb);
        int ea = va == v ? a.e[i++].second : 0;
        int eb = vb == v ? b.e[j++].second : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

// If e equals a ratio of monomials times a common polynomial factor,
// collapse it to that ratio: match the lex-leading terms and verify the
// division exactly.  Returns false when e is not of that form.
bool to_monomial(RatFn& e) {
    if (e.num.is_zero()) {
        e = RatFn(0L);
        return true;
    }
    auto lead = [](const MPoly& p) {
        auto it = p.t.begin();
        for (auto j = p.t.begin(); j != p.t.end(); ++j)
            if (lex_less(it->first, j->first)) it = j;
        return it;
    };
    auto n = lead(e.num);
    auto d = lead(e.den);
    MPoly Mn, Md;
    Mn.add_term(n->first, n->second);
    Md.add_term(d->first, d->second);
    if (!(e.num * Md - e.den * Mn).is_zero()) return false;
    e = RatFn(Mn, Md);
    return true;
}
}  // namespace

ThreeTermEq derive_case(const CaseSpec& c, const ParamBinding* b) {
    const StdParams& P = SP();
    ShiftOperator L = c.fam == FamilyKind::D5   ? lax_l1_d5()
                      : c.fam == FamilyKind::E6 ? lax_l1_e6()
                                                : lax_l1_e7();
    // impose the constraint (or the binding) on the coefficients first:
    // the chart substitution is much cheaper afterwards
    ShiftOperator Ls(L.zv, L.q);
    for (auto& [k, coef] : L.c) Ls.add(k, impose(coef, b));
    ShiftOperator op(L.zv, L.q);
    if (c.is_chart) {
        Chart ch{impose(c.chart.f_expr, b), impose(c.chart.g_expr, b), c.chart.except};
        op = apply_chart(Ls, ch);
        op = restrict_to_exceptional(op, c.chart.except);
    } else {
        std::map<Var, RatFn> a{{P.fv, impose(c.f_value, b)}};
        for (auto& [k, coef] : Ls.c) op.add(k, subst(coef, a));
    }
    ThreeTermEq eq = to_three_term(op);
    if (b) eq.q = specialize(eq.q, *b);
    for (auto& gs : c.gauges) {
        RatFn par = impose(gs.param, b);
        eq = gs.kind == GaugeStep::Rational ? gauge_rational(eq, par)
                                            : gauge_pochhammer(eq, par);
    }
    return eq;
}

VerifyResult verify_case(const CaseSpec& c, const ParamBinding* b) {
    VerifyResult res;
    res.accessory = var_name(c.claims.accessory);
    Var zv = SP().zv;
    Var Ev = var("E");
    try {
        ThreeTermEq der = derive_case(c, b);
        std::string softfail;
        for (int branch : {1, -1}) {
            ThreeTermEq nf = build_nf(c, branch);
            nf.aMinus = impose(nf.aMinus, b);
            nf.aZero = impose(nf.aZero, b);
            nf.aPlus = impose(nf.aPlus, b);
            RatFn claimE, claimEpart;
            if (c.claims.E) claimE = impose(*c.claims.E, b);
            if (c.claims.E_accessory_part)
                claimEpart = impose(*c.claims.E_accessory_part, b);
            // the raw derived equation may carry a common z-factor; only the
            // cross-ratios are meaningful, so s0 and t0 need not be z-free
            // individually
            RatFn s0 = nf.aMinus / der.aMinus;
            RatFn t0 = nf.aPlus / der.aPlus;
            RatFn Q2 = s0 / t0;
            // to_monomial verifies the collapse exactly (single-monomial cross
            // product, so linear cost even on large unreduced inputs); the
            // z-freeness test then reduces to inspecting one monomial ratio
            if (!to_monomial(Q2)) {
                if (softfail.empty())
                    softfail = "ScaleNotConstant: power-gauge ratio is not monomial";
                continue;
            }
            if (!Q2.is_free_of(zv)) {
                if (softfail.empty())
                    softfail = "ScaleNotConstant: a-/a+ cross-ratio depends on z";
                continue;
            }
            RatFn Q;
            try {
                Q = sqrt_monomial(Q2);
            } catch (const Error&) {
                if (softfail.empty()) softfail = "BranchMismatch: power-gauge ratio is not a square";
                continue;
            }
            RatFn s = s0 / Q;
            // middle slot
            std::map<Var, RatFn> e0{{Ev, RatFn(0L)}}, e1{{Ev, RatFn(1L)}};
            RatFn base = subst(nf.aZero, e0);
            RatFn coefE = subst(nf.aZero, e1) - base;
            // A/coefE is the derived accessory term; testing its z-freeness
            // directly multiplies two large unreduced polynomials, so instead
            // each claim is verified as a single exact identity against A
            // (large times small cross products only)
            RatFn A = s * der.aZero - base;
            RatFn Ed;
            if (c.claims.E) {
                if (!A.eq(coefE * claimE)) {
                    if (softfail.empty())
                        softfail = "ClaimMismatch: accessory slot differs from claim";
                    continue;
                }
                Ed = claimE;
            } else {
                // residual after the claimed accessory-dependent part must be
                // a constant in z and the accessory variable: pin it down by
                // evaluating at a rational point, then prove the identity
                RatFn diff = A - coefE * claimEpart;
                RatFn C0;
                bool pinned = false;
                for (long t : {17, 23, 31, 41, 53}) {
                    std::map<Var, RatFn> pt{{zv, RatFn(Rat(t, 5))},
                                            {c.claims.accessory, RatFn(Rat(t, 7))}};
                    try {
                        RatFn cn = subst(coefE, pt);
                        if (cn.is_zero()) continue;
                        C0 = subst(diff, pt) / cn;
                    } catch (const Error&) {
                        continue;
                    }
                    pinned = true;
                    break;
                }
                if (!pinned || !A.eq(coefE * (claimEpart + C0))) {
                    if (softfail.empty())
                        softfail = "ClaimMismatch: accessory-dependent part differs";
                    continue;
                }
                Ed = claimEpart + C0;
            }
            if (branch == -1) {
                res.fail_kind = "BranchMismatch";
                res.detail = "match only under square-root sign flip";
                return res;
            }
            res.ok = true;
            res.power_witness = Q;
            res.E_derived = Ed;
            return res;
        }
        res.fail_kind = "VerifyFailed";
        res.detail = softfail;
        return res;
    } catch (const Error& e) {
        res.fail_kind = e.kind;
        res.detail = e.what();
        return res;
    }
}

}  // namespace qh

#include "qh/lax.hpp"

namespace qh {

namespace {
RatFn v(const char* n) { return RatFn::variable(var(n)); }
}  // namespace

const StdParams& std_params() {
    static const StdParams sp = [] {
        StdParams s;
        for (int i = 1; i <= 8; ++i)
            s.nu[i] = RatFn::variable(var("m" + std::to_string(i)), 2);
        s.kappa1 = RatFn::variable(var("k1"), 2);
        s.kappa2 = RatFn::variable(var("k2"), 2);
        s.sq = v("p");
        s.q = s.sq * s.sq;
        s.zv = var("z");
        s.fv = var("f");
        s.gv = var("g");
        return s;
    }();
    return sp;
}

ShiftOperator lax_l1_d5() {
    const StdParams& P = std_params();
    RatFn z = RatFn::variable(P.zv), f = RatFn::variable(P.fv), g = RatFn::variable(P.gv);
    const RatFn& q = P.q;
    ShiftOperator L(P.zv, q);
    L.add(0, z * (g * P.nu[1] - 1) * (g * P.nu[2] - 1) / (q * g) -
                 P.nu[1] * P.nu[2] * P.nu[3] * P.nu[4] * (g - P.nu[5] / P.kappa2) *
                     (g - P.nu[6] / P.kappa2) / (f * g));
    RatFn B = P.nu[1] * P.nu[2] * (z - q * P.nu[3]) * (z - q * P.nu[4]) / (q * (q * f - z));
    L.add(0, B * g);
    L.add(-1, -B);
    RatFn C = (z - P.kappa1 / P.nu[7]) * (z - P.kappa1 / P.nu[8]) / (q * (f - z));
    L.add(0, C / g);
    L.add(1, -C);
    return L;
}

ShiftOperator lax_l1_e6() {
    const StdParams& P = std_params();
    RatFn z = RatFn::variable(P.zv), f = RatFn::variable(P.fv), g = RatFn::variable(P.gv);
    const RatFn& q = P.q;
    ShiftOperator L(P.zv, q);
    L.add(0, z * (g * P.nu[1] - 1) * (g * P.nu[2] - 1) * (g * P.nu[3] - 1) *
                     (g * P.nu[4] - 1) / (g * (f * g - 1) * (g * z - q)) -
                 (g * P.kappa2 / P.nu[5] - 1) * (g * P.kappa2 / P.nu[6] - 1) * P.kappa1 *
                     P.kappa1 / (q * f * g * P.nu[7] * P.nu[8]));
    RatFn B = (P.nu[1] - z / q) * (P.nu[2] - z / q) * (P.nu[3] - z / q) * (P.nu[4] - z / q) /
              (f - z / q);
    L.add(0, B * g / (1 - g * z / q));
    L.add(-1, -B);
    RatFn C = (P.kappa1 / P.nu[7] - z) * (P.kappa1 / P.nu[8] - z) / (q * (f - z));
    L.add(0, C * (1 / g - z));
    L.add(1, -C);
    return L;
}

ShiftOperator lax_l1_e7() {
    const StdParams& P = std_params();
    RatFn z = RatFn::variable(P.zv), f = RatFn::variable(P.fv), g = RatFn::variable(P.gv);
    const RatFn& q = P.q;
    const RatFn &k1 = P.kappa1, &k2 = P.kappa2;
    ShiftOperator L(P.zv, q);
    L.add(0, q * (k1 - k2) * (g * k2 - P.nu[5]) * (g * k2 - P.nu[6]) * (g * k2 - P.nu[7]) *
                 (g * k2 - P.nu[8]) /
                 (g * k1 * k2 * k2 * (f * g * k2 - k1) * (g * k2 * z - k1)));
    L.add(0, -q * (k1 - k2) * (g * P.nu[1] - 1) * (g * P.nu[2] - 1) * (g * P.nu[3] - 1) *
                 (g * P.nu[4] - 1) /
                 (g * (f * g - 1) * k1 * P.nu[1] * P.nu[2] * P.nu[3] * P.nu[4] * (g * z - q)));
    RatFn B = (q * P.nu[1] - z) * (q * P.nu[2] - z) * (q * P.nu[3] - z) * (q * P.nu[4] - z) /
              (q * k1 * P.nu[1] * P.nu[2] * P.nu[3] * P.nu[4] * (f * q - z) * z * z *
               (q - g * z));
    L.add(0, B * (g * k2 * z - k1 * q));
    L.add(-1, -B * k1 * (g * z - q));
    RatFn C = -q * (k1 - P.nu[5] * z) * (k1 - P.nu[6] * z) * (k1 - P.nu[7] * z) *
              (k1 - P.nu[8] * z) /
              (k1.pow(4) * (f - z) * z * z * (g * k2 * z - k1));
    L.add(0, C * k1 * (g * z - 1));
    L.add(1, -C * (g * k2 * z - k1));
    return L;
}

// ---------------------------------------------------------------------------
// E8

const E8Params& e8_params() {
    static const E8Params ep = [] {
        E8Params s;
        for (int i = 1; i <= 8; ++i)
            s.u[i] = RatFn::variable(var("M" + std::to_string(i)), 2);
        s.sh1 = v("H1");
        s.h1 = s.sh1 * s.sh1;
        s.h2 = RatFn::variable(var("H2"), 2);
        s.sq = v("P");
        s.q = s.sq * s.sq;
        s.zv = var("z");
        s.fv = var("f");
        s.gv = var("g");
        return s;
    }();
    return ep;
}

namespace {
RatFn pv(const RatFn& e, const ParamBinding* b) { return b ? specialize(e, *b) : e; }
}  // namespace

RatFn e8_U(const RatFn& arg, const ParamBinding* b) {
    const E8Params& P = e8_params();
    RatFn r(1L);
    for (int i = 1; i <= 8; ++i) r *= (arg - pv(P.u[i], b));
    return r;
}

namespace {
LaurentZ e8_U_laurent() {
    const E8Params& P = e8_params();
    std::vector<RatFn> roots;
    for (int i = 1; i <= 8; ++i) roots.push_back(P.u[i]);
    return LaurentZ::from_roots(roots);
}

RatFn e8_quartic(bool numerator, Var wv) {
    const E8Params& P = e8_params();
    LaurentZ U = e8_U_laurent();
    LaurentZ Uf = U.flip(P.h2);  // U(h2/z)
    LaurentZ rhs;
    if (numerator) {
        // U(z)/z^3 - (z/h2)^3 U(h2/z)
        rhs = U * LaurentZ::monomial(-3, RatFn(1L)) -
              LaurentZ::monomial(3, P.h2.pow(-3)) * Uf;
    } else {
        // z^5 U(h2/z) - (h2/z)^5 U(z)
        rhs = LaurentZ::monomial(5, RatFn(1L)) * Uf -
              LaurentZ::monomial(-5, P.h2.pow(5)) * U;
    }
    LaurentZ div;
    div.add(1, RatFn(1L));
    div.add(-1, -P.h2);
    return laurent_to_w_poly(laurent_divide_exact(rhs, div), P.h2, wv);
}
}  // namespace

RatFn e8_Pn(Var wv, const ParamBinding* b) {
    static std::map<Var, RatFn> cache;
    auto it = cache.find(wv);
    if (it == cache.end()) it = cache.emplace(wv, e8_quartic(true, wv)).first;
    return pv(it->second, b);
}

RatFn e8_Pd(Var wv, const ParamBinding* b) {
    static std::map<Var, RatFn> cache;
    auto it = cache.find(wv);
    if (it == cache.end()) it = cache.emplace(wv, e8_quartic(false, wv)).first;
    return pv(it->second, b);
}

RatFn e8_psi_n(const RatFn& f1, const RatFn& f2, const RatFn& g, const ParamBinding* b) {
    const E8Params& P = e8_params();
    RatFn q = pv(P.q, b), h1 = pv(P.h1, b), h2 = pv(P.h2, b);
    return (f1 - g) * (f2 - g) - (h1 / q - h2) * (h1 - h2) / h2;
}

RatFn e8_psi_d(const RatFn& f1, const RatFn& f2, const RatFn& g, const ParamBinding* b) {
    const E8Params& P = e8_params();
    RatFn q = pv(P.q, b), h1 = pv(P.h1, b), h2 = pv(P.h2, b);
    return (f1 / h1 * q - g / h2) * (f2 / h1 - g / h2) -
           (q / h1 - 1 / h2) * (1 / h1 - 1 / h2) * h2;
}

RatFn e8_V(const RatFn& f1, const RatFn& f2, const RatFn& g, const ParamBinding* b) {
    const E8Params& P = e8_params();
    RatFn q = pv(P.q, b), h1 = pv(P.h1, b), h2 = pv(P.h2, b);
    Var wv = var("w");
    std::map<Var, RatFn> at_g{{wv, g}};
    RatFn Pn = subst(e8_Pn(wv, b), at_g), Pd = subst(e8_Pd(wv, b), at_g);
    return q * e8_psi_n(f1, f2, g, b) * Pd -
           h1 * h1 * h2.pow(4) * e8_psi_d(f1, f2, g, b) * Pn;
}

RatFn e8_phi(const RatFn& f, const RatFn& g, const ParamBinding* b) {
    const E8Params& P = e8_params();
    RatFn h1 = pv(P.h1, b), h2 = pv(P.h2, b);
    return (f - g) * (f / h1 - g / h2) - (h1 - h2) * (1 / h1 - 1 / h2);
}

E8Lax lax_l1_e8(const ParamBinding* b) {
    const E8Params& P = e8_params();
    RatFn z = RatFn::variable(P.zv), f = RatFn::variable(P.fv),
          g = RatFn::variable(P.gv);
    RatFn q = pv(P.q, b), h1 = pv(P.h1, b), h2 = pv(P.h2, b);
    {
        // f(u) = u + h1/u, g(u) = u + h2/u at the shifted arguments
        RatFn f_zq = z / q + q * h1 / z;      // f(z/q)
        RatFn f_z = z + h1 / z;               // f(z)
        RatFn fbar_zq = z / q + h1 / z;       // \bar f(z/q)
        RatFn g_zq = z / q + q * h2 / z;      // g(z/q)
        RatFn g_qh1z = q * h1 / z + h2 * z / (q * h1);  // g(q h1/z)
        RatFn g_h1z = h1 / z + h2 * z / h1;   // g(h1/z)
        RatFn g_z = z + h2 / z;               // g(z)
        RatFn Uzq = e8_U(z / q, b), Uh1z = e8_U(h1 / z, b);
        E8Lax L;
        RatFn A = q.pow(5) * Uzq / ((z * z - h1 * q * q) * (f - f_zq));
        RatFn B = z.pow(8) * Uh1z / (h1.pow(4) * (z * z - h1) * (f - f_z));
        L.aMinus = A;
        L.aPlus = B;
        L.aZero = -A * (g - g_qh1z) / (g - g_zq) - B * (g - g_z) / (g - g_h1z) +
                  (h1 - h2) * z * z * (z * z - q * h1) * e8_V(fbar_zq, f, g, b) /
                      (q * h1.pow(3) * h2.pow(3) * g * e8_phi(f, g, b) * (g - g_h1z) *
                       (g - g_zq));
        return L;
    }
}

}  // namespace qh

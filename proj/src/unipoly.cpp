#include "qh/unipoly.hpp"

#include <algorithm>

namespace qh {

namespace {

// p as vector of MPoly coefficients in v, low to high
std::vector<MPoly> to_uni(const MPoly& p, Var v) {
    std::vector<MPoly> c(static_cast<size_t>(p.deg(v)) + 1);
    for (auto& [m, coef] : p.t) {
        int k = m.deg(v);
        c[static_cast<size_t>(k)].add_term(m.div(Mono::of(v, k)), coef);
    }
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    return c;
}

MPoly from_uni(const std::vector<MPoly>& c, Var v) {
    MPoly p;
    for (size_t k = 0; k < c.size(); ++k)
        for (auto& [m, coef] : c[k].t) p.add_term(m.mul(Mono::of(v, static_cast<int>(k))), coef);
    return p;
}

void cheap_primitive(std::vector<MPoly>& c) {
    bool any = false;
    Rat rc(1);
    Mono mc;
    mpz_class gn(0), ld(1);
    bool first = true;
    for (auto& p : c)
        for (auto& [m, coef] : p.t) {
            any = true;
            mpz_gcd(gn.get_mpz_t(), gn.get_mpz_t(), coef.get_num().get_mpz_t());
            mpz_lcm(ld.get_mpz_t(), ld.get_mpz_t(), coef.get_den().get_mpz_t());
            if (first) {
                mc = m;
                first = false;
            } else {
                mc = mc.gcd(m);
            }
        }
    if (!any) return;
    rc = Rat(gn, ld);
    rc.canonicalize();
    if (rc == 0) rc = 1;
    if (rc == 1 && mc.is_one()) return;
    for (auto& p : c) p.divide_content(rc, mc);
}

int udeg(const std::vector<MPoly>& c) { return static_cast<int>(c.size()) - 1; }

bool uzero(const std::vector<MPoly>& c) {
    for (auto& p : c)
        if (!p.is_zero()) return false;
    return true;
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
std::vector<MPoly> prem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
    int db = udeg(b);
    const MPoly& lb = b.back();
    while (udeg(a) >= db && !uzero(a)) {
        int da = udeg(a);
        MPoly la = a.back();
        for (auto& p : a) p = p * lb;
        for (int j = 0; j <= db; ++j)
            a[static_cast<size_t>(da - db + j)] -= la * b[static_cast<size_t>(j)];
        while (a.size() > 1 && a.back().is_zero()) a.pop_back();
        if (a.size() == 1 && a[0].is_zero()) break;
    }
    return a;
}

}  // namespace

MPoly uni_gcd(const MPoly& a, const MPoly& b, Var v) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<MPoly> f = to_uni(a, v), g = to_uni(b, v);
    if (udeg(f) < udeg(g)) std::swap(f, g);
    cheap_primitive(f);
    cheap_primitive(g);
    // primitive PRS with per-step cheap content removal; adequate at the
    // sizes arising here (coefficients are rationals or small parameter
    // polynomials)
    while (!uzero(g)) {
        if (udeg(g) == 0) return MPoly(1);
        std::vector<MPoly> r = prem(f, g);
        cheap_primitive(r);
        f = std::move(g);
        g = std::move(r);
    }
    cheap_primitive(f);
    return from_uni(f, v);
}

// ---------------------------------------------------------------------------
// LaurentZ

void LaurentZ::add(int k, const RatFn& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = c.emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) c.erase(it);
    }
}

int LaurentZ::top() const {
    if (c.empty()) throw Error("ZeroLaurent", "top() of zero Laurent polynomial");
    return c.rbegin()->first;
}

int LaurentZ::bottom() const {
    if (c.empty()) throw Error("ZeroLaurent", "bottom() of zero Laurent polynomial");
    return c.begin()->first;
}

LaurentZ LaurentZ::operator+(const LaurentZ& o) const {
    LaurentZ r = *this;
    for (auto& [k, v] : o.c) r.add(k, v);
    return r;
}

LaurentZ LaurentZ::operator-(const LaurentZ& o) const {
    LaurentZ r = *this;
    for (auto& [k, v] : o.c) r.add(k, -v);
    return r;
}

LaurentZ LaurentZ::operator*(const LaurentZ& o) const {
    LaurentZ r;
    for (auto& [k1, v1] : c)
        for (auto& [k2, v2] : o.c) r.add(k1 + k2, v1 * v2);
    return r;
}

LaurentZ LaurentZ::scaled(const RatFn& s) const {
    LaurentZ r;
    for (auto& [k, v] : c) r.add(k, v * s);
    return r;
}

LaurentZ LaurentZ::monomial(int k, const RatFn& v) {
    LaurentZ r;
    r.add(k, v);
    return r;
}

LaurentZ LaurentZ::from_roots(const std::vector<RatFn>& roots) {
    LaurentZ r = monomial(0, RatFn(1L));
    for (auto& root : roots) {
        LaurentZ lin = monomial(1, RatFn(1L));
        lin.add(0, -root);
        r = r * lin;
    }
    return r;
}

LaurentZ LaurentZ::flip(const RatFn& a) const {
    LaurentZ r;
    for (auto& [k, v] : c) r.add(-k, v * a.pow(k));
    return r;
}

RatFn LaurentZ::to_ratfn(Var zvar) const {
    RatFn r;
    for (auto& [k, v] : c) r += v * RatFn::variable(zvar, k);
    return r;
}

LaurentZ laurent_divide_exact(const LaurentZ& n, const LaurentZ& d) {
    if (d.is_zero()) throw Error("DivisionByZero", "Laurent division by zero");
    LaurentZ r = n, q;
    int dt = d.top();
    const RatFn& dl = d.c.at(dt);
    // an exact quotient lives in exponents [n.bottom - d.bottom, n.top - d.top]
    int kmin = n.is_zero() ? 0 : n.bottom() - d.bottom();
    while (!r.is_zero()) {
        int rt = r.top();
        RatFn coef = r.c.at(rt) / dl;
        int k = rt - dt;
        if (k < kmin) throw Error("NotDivisible", "no exact Laurent quotient");
        q.add(k, coef);
        LaurentZ sub;
        for (auto& [kk, vv] : d.c) sub.add(kk + k, vv * coef);
        r = r - sub;
        if (!r.is_zero() && r.top() >= rt) throw Error("NotDivisible", "Laurent division does not terminate");
    }
    return q;
}

RatFn laurent_to_w_poly(const LaurentZ& L, const RatFn& h2, Var wvar) {
    // check z -> h2/z invariance
    if (!(L - L.flip(h2)).is_zero())
        throw Error("NotSymmetric", "Laurent polynomial is not invariant under z -> h2/z");
    LaurentZ r = L;
    RatFn p;
    LaurentZ w;  // z + h2/z
    w.add(1, RatFn(1L));
    w.add(-1, h2);
    while (!r.is_zero() && r.top() >= 1) {
        int d = r.top();
        RatFn coef = r.c.at(d);
        p += coef * RatFn::variable(wvar, d);
        LaurentZ wd = LaurentZ::monomial(0, RatFn(1L));
        for (int i = 0; i < d; ++i) wd = wd * w;
        r = r - wd.scaled(coef);
    }
    if (!r.is_zero()) {
        if (r.top() != 0 || r.bottom() != 0)
            throw Error("NotSymmetric", "nonconstant residue in symmetric reduction");
        p += r.c.at(0);
    }
    return p;
}

}  // namespace qh

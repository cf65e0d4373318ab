#include "qh/qdiff.hpp"

#include "qh/unipoly.hpp"

namespace qh {

ShiftOperator ShiftOperator::term(Var z, const RatFn& qq, int k, const RatFn& coef) {
    ShiftOperator s(z, qq);
    s.add(k, coef);
    return s;
}

RatFn ShiftOperator::coeff(int k) const {
    auto it = c.find(k);
    return it == c.end() ? RatFn(0L) : it->second;
}

void ShiftOperator::add(int k, const RatFn& coef) {
    if (coef.is_zero()) return;
    auto [it, fresh] = c.emplace(k, coef);
    if (!fresh) {
        it->second += coef;
        if (it->second.is_zero()) c.erase(it);
    }
}

ShiftOperator ShiftOperator::operator+(const ShiftOperator& o) const {
    ShiftOperator r = *this;
    if (r.c.empty()) {
        r.zv = o.zv;
        r.q = o.q;
    }
    for (auto& [k, v] : o.c) r.add(k, v);
    return r;
}

ShiftOperator ShiftOperator::operator-(const ShiftOperator& o) const {
    return *this + o.scaled(RatFn(-1L));
}

ShiftOperator ShiftOperator::operator*(const ShiftOperator& o) const {
    ShiftOperator r(zv, q);
    for (auto& [j, a] : c)
        for (auto& [k, b] : o.c) r.add(j + k, a * scale_var(b, zv, q.pow(j)));
    return r;
}

ShiftOperator ShiftOperator::scaled(const RatFn& s) const {
    ShiftOperator r(zv, q);
    for (auto& [k, v] : c) r.add(k, s * v);
    return r;
}

RatFn ShiftOperator::apply(const RatFn& y) const {
    RatFn out(0L);
    for (auto& [k, v] : c) out += v * scale_var(y, zv, q.pow(k));
    return out;
}

ThreeTermEq to_three_term(const ShiftOperator& op) {
    ThreeTermEq eq;
    eq.zv = op.zv;
    eq.q = op.q;
    for (auto& [k, v] : op.c) {
        if (k < -1 || k > 1) throw Error("BadSupport", "shift support outside {-1,0,1}");
        (k < 0 ? eq.aMinus : k == 0 ? eq.aZero : eq.aPlus) = v;
    }
    return eq;
}

ShiftOperator to_operator(const ThreeTermEq& eq) {
    ShiftOperator op(eq.zv, eq.q);
    op.add(-1, eq.aMinus);
    op.add(0, eq.aZero);
    op.add(1, eq.aPlus);
    return op;
}

bool proj_equal(const ThreeTermEq& a, const ThreeTermEq& b) {
    return (a.aMinus * b.aZero).eq(a.aZero * b.aMinus) &&
           (a.aMinus * b.aPlus).eq(a.aPlus * b.aMinus) &&
           (a.aZero * b.aPlus).eq(a.aPlus * b.aZero);
}

namespace {
Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    mpz_class n, d;
    mpz_gcd(n.get_mpz_t(), mpz_class(a.get_num() * b.get_den()).get_mpz_t(),
            mpz_class(b.get_num() * a.get_den()).get_mpz_t());
    d = a.get_den() * b.get_den();
    Rat g(n, d);
    g.canonicalize();
    return abs(g);
}
}  // namespace

ThreeTermEq clear_and_primitive(const ThreeTermEq& eq) {
    ThreeTermEq r = eq;
    r.aMinus.normalize();
    r.aZero.normalize();
    r.aPlus.normalize();
    // clear each denominator against the others
    MPoly nm = r.aMinus.num * r.aZero.den * r.aPlus.den;
    MPoly nz = r.aZero.num * r.aMinus.den * r.aPlus.den;
    MPoly np = r.aPlus.num * r.aMinus.den * r.aZero.den;
    // cancel the common z-gcd of the three coefficients
    MPoly g = uni_gcd(uni_gcd(nm, nz, eq.zv), np, eq.zv);
    RatFn fm(nm, MPoly(1L)), fz(nz, MPoly(1L)), fp(np, MPoly(1L));
    if (g.deg(eq.zv) > 0) {
        fm = RatFn(nm, g).reduced(eq.zv);
        fz = RatFn(nz, g).reduced(eq.zv);
        fp = RatFn(np, g).reduced(eq.zv);
        // leftover denominators are z-free; re-clear them symmetrically
        nm = fm.num * fz.den * fp.den;
        nz = fz.num * fm.den * fp.den;
        np = fp.num * fm.den * fz.den;
    }
    // strip common cheap content
    Rat rc = rat_gcd(rat_gcd(nm.rational_content(), nz.rational_content()),
                     np.rational_content());
    Mono mc = nm.monomial_content().gcd(nz.monomial_content()).gcd(np.monomial_content());
    if (rc == 0) rc = 1;
    nm.divide_content(rc, mc);
    nz.divide_content(rc, mc);
    np.divide_content(rc, mc);
    r.aMinus = RatFn(nm);
    r.aZero = RatFn(nz);
    r.aPlus = RatFn(np);
    return r;
}

ThreeTermEq gauge_power(const ThreeTermEq& eq, const RatFn& Q) {
    ThreeTermEq r = eq;
    r.aMinus = Q * r.aMinus;
    r.aPlus = r.aPlus / Q;
    return r;
}

ThreeTermEq gauge_pochhammer(const ThreeTermEq& eq, const RatFn& alpha) {
    ThreeTermEq r = eq;
    RatFn z = RatFn::variable(eq.zv);
    r.aMinus = (r.aMinus / (1 - alpha * z)).reduced(eq.zv);
    r.aPlus = r.aPlus * (1 - alpha * eq.q * z);
    return r;
}

ThreeTermEq gauge_rational(const ThreeTermEq& eq, const RatFn& r) {
    ThreeTermEq out = eq;
    out.aMinus = out.aMinus * scale_var(r, eq.zv, eq.q.inv());
    out.aZero = out.aZero * r;
    out.aPlus = out.aPlus * scale_var(r, eq.zv, eq.q);
    return out;
}

}  // namespace qh

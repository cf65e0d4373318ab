#include "qh/epslaurent.hpp"

namespace qh {

namespace {
// effective valuation: lowest known nonzero power, or the truncation order
// when every known coefficient vanishes
int eff_val(const EpsLaurent& s) { return s.c.empty() ? s.order : s.c.begin()->first; }
}  // namespace

int EpsLaurent::valuation() const {
    if (c.empty()) throw Error("ZeroSeries", "valuation of zero series");
    return c.begin()->first;
}

RatFn EpsLaurent::at(int k) const {
    if (k >= order) throw Error("TruncationExceeded", "coefficient beyond truncation order");
    auto it = c.find(k);
    return it == c.end() ? RatFn(0L) : it->second;
}

void EpsLaurent::add(int k, const RatFn& v) {
    if (k >= order || v.is_zero()) return;
    auto [it, fresh] = c.emplace(k, v);
    if (!fresh) {
        it->second = it->second + v;
        if (it->second.is_zero()) c.erase(it);
    }
}

void EpsLaurent::truncate(int ord) {
    if (ord < order) order = ord;
    c.erase(c.lower_bound(order), c.end());
}

EpsLaurent EpsLaurent::operator-() const {
    EpsLaurent r;
    r.order = order;
    for (auto& [k, v] : c) r.c.emplace(k, -v);
    return r;
}

EpsLaurent EpsLaurent::operator+(const EpsLaurent& o) const {
    EpsLaurent r;
    r.order = std::min(order, o.order);
    for (auto& [k, v] : c) r.add(k, v);
    for (auto& [k, v] : o.c) r.add(k, v);
    return r;
}

EpsLaurent EpsLaurent::operator-(const EpsLaurent& o) const { return *this + (-o); }

EpsLaurent EpsLaurent::operator*(const EpsLaurent& o) const {
    EpsLaurent r;
    long ord = std::min((long)order + eff_val(o), (long)o.order + eff_val(*this));
    r.order = (int)std::min(ord, (long)EXACT);
    for (auto& [ka, va] : c)
        for (auto& [kb, vb] : o.c) r.add(ka + kb, va * vb);
    return r;
}

EpsLaurent EpsLaurent::inv() const {
    if (c.empty()) throw Error("ZeroSeries", "inverse of zero series");
    int v = c.begin()->first;
    const RatFn& lead = c.begin()->second;
    // relative order of knowledge
    long rel = order == EXACT ? (long)EXACT : (long)order - v;
    // u = (self / lead eps^v) - 1, valuation >= 1
    EpsLaurent u;
    u.order = (int)std::min(rel, (long)EXACT);
    RatFn linv = lead.inv();
    for (auto it = std::next(c.begin()); it != c.end(); ++it)
        u.add(it->first - v, it->second * linv);
    // geometric series 1 - u + u^2 - ...
    EpsLaurent acc(RatFn(1L)), pw(RatFn(1L));
    acc.order = pw.order = u.order;
    if (!u.c.empty()) {
        int uval = u.c.begin()->first;
        for (long k = uval; k < u.order; k += uval) {
            pw = pw * (-u);
            acc = acc + pw;
            if (pw.c.empty()) break;
        }
    }
    EpsLaurent r;
    r.order = (int)std::min((long)acc.order - v, (long)EXACT);
    for (auto& [k, w] : acc.c) r.add(k - v, w * linv);
    return r;
}

EpsLaurent EpsLaurent::operator/(const EpsLaurent& o) const { return *this * o.inv(); }

EpsLaurent EpsLaurent::pow(int n) const {
    if (n < 0) return inv().pow(-n);
    EpsLaurent r(RatFn(1L));
    EpsLaurent b = *this;
    for (int m = n; m > 0; m >>= 1) {
        if (m & 1) r = r * b;
        b = b * b;
    }
    return r;
}

namespace {
EpsLaurent poly_series(const MPoly& p, const std::map<Var, EpsLaurent>& assign) {
    EpsLaurent out;
    for (auto& [m, q] : p.t) {
        MPoly rest(q);
        EpsLaurent term(RatFn(1L));
        for (auto& [v, e] : m.e) {
            auto it = assign.find(v);
            if (it == assign.end())
                rest = rest * MPoly::variable(v, e);
            else
                term = term * it->second.pow(e);
        }
        out = out + term * EpsLaurent(RatFn(rest));
    }
    return out;
}
}  // namespace

EpsLaurent eval_series(const RatFn& e, const std::map<Var, EpsLaurent>& assign) {
    return poly_series(e.num, assign) / poly_series(e.den, assign);
}

}  // namespace qh

#include "qh/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace qh {

// ---------------------------------------------------------------------------
// variable registry

namespace {
struct VarTable {
    std::mutex mu;
    std::vector<std::string> names;
    std::unordered_map<std::string, Var> index;
};
VarTable& table() {
    static VarTable t;
    return t;
}
}  // namespace

Var var(const std::string& name) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.index.find(name);
    if (it != t.index.end()) return it->second;
    Var v = static_cast<Var>(t.names.size());
    t.names.push_back(name);
    t.index.emplace(name, v);
    return v;
}

const std::string& var_name(Var v) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.names.at(static_cast<size_t>(v));
}

// ---------------------------------------------------------------------------
// Mono

int Mono::deg(Var v) const {
    for (auto& [w, k] : e)
        if (w == v) return k;
    return 0;
}

int Mono::total_deg() const {
    int d = 0;
    for (auto& [w, k] : e) d += k;
    return d;
}

Mono Mono::of(Var v, int k) {
    Mono m;
    if (k != 0) m.e.push_back({v, k});
    return m;
}

Mono Mono::mul(const Mono& o) const {
    Mono r;
    size_t i = 0, j = 0;
    while (i < e.size() || j < o.e.size()) {
        if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first)) {
            r.e.push_back(e[i++]);
        } else if (i == e.size() || o.e[j].first < e[i].first) {
            r.e.push_back(o.e[j++]);
        } else {
            int k = e[i].second + o.e[j].second;
            if (k != 0) r.e.push_back({e[i].first, k});
            ++i, ++j;
        }
    }
    return r;
}

Mono Mono::gcd(const Mono& o) const {
    Mono r;
    size_t i = 0, j = 0;
    while (i < e.size() && j < o.e.size()) {
        if (e[i].first < o.e[j].first) {
            ++i;
        } else if (o.e[j].first < e[i].first) {
            ++j;
        } else {
            r.e.push_back({e[i].first, std::min(e[i].second, o.e[j].second)});
            ++i, ++j;
        }
    }
    return r;
}

bool Mono::divisible_by(const Mono& o) const {
    size_t i = 0;
    for (auto& [w, k] : o.e) {
        while (i < e.size() && e[i].first < w) ++i;
        if (i == e.size() || e[i].first != w || e[i].second < k) return false;
    }
    return true;
}

Mono Mono::div(const Mono& o) const {
    Mono inv;
    inv.e = o.e;
    for (auto& [w, k] : inv.e) k = -k;
    return mul(inv);
}

// ---------------------------------------------------------------------------
// MPoly

MPoly::MPoly(const Rat& c) {
    if (c != 0) t.emplace(Mono::one(), c);
}

MPoly::MPoly(long c) {
    if (c != 0) t.emplace(Mono::one(), Rat(c));
}

MPoly MPoly::variable(Var v, int power) {
    MPoly p;
    p.t.emplace(Mono::of(v, power), Rat(1));
    return p;
}

bool MPoly::is_constant() const {
    return t.empty() || (t.size() == 1 && t.begin()->first.is_one());
}

Rat MPoly::constant() const {
    if (t.empty()) return Rat(0);
    return t.begin()->second;
}

int MPoly::deg(Var v) const {
    int d = 0;
    for (auto& [m, c] : t) d = std::max(d, m.deg(v));
    return d;
}

bool MPoly::depends_on(Var v) const {
    for (auto& [m, c] : t)
        if (m.deg(v) != 0) return true;
    return false;
}

void MPoly::vars(std::vector<Var>& out) const {
    for (auto& [m, c] : t)
        for (auto& [w, k] : m.e)
            if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
}

void MPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t) c = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (auto& [m, c] : o.t) add_term(m, c);
    return *this;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (auto& [m, c] : o.t) add_term(m, -c);
    return *this;
}

MPoly MPoly::mul_term(const Mono& m, const Rat& c) const {
    MPoly r;
    if (c == 0) return r;
    for (auto& [mm, cc] : t) r.t.emplace(mm.mul(m), cc * c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    if (is_zero() || o.is_zero()) return MPoly();
    const MPoly& small = (t.size() <= o.t.size()) ? *this : o;
    const MPoly& big = (t.size() <= o.t.size()) ? o : *this;
    MPoly r;
    for (auto& [m, c] : small.t)
        for (auto& [mm, cc] : big.t) r.add_term(m.mul(mm), c * cc);
    return r;
}

MPoly MPoly::pow(int n) const {
    if (n < 0) throw Error("BadExponent", "negative power on polynomial");
    MPoly r(1);
    MPoly b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

Rat MPoly::rational_content() const {
    // gcd of numerators over lcm of denominators, positive
    if (t.empty()) return Rat(1);
    mpz_class gn(0), ld(1);
    for (auto& [m, c] : t) {
        mpz_gcd(gn.get_mpz_t(), gn.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(ld.get_mpz_t(), ld.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat r(gn, ld);
    r.canonicalize();
    if (r == 0) r = 1;
    return r;
}

Mono MPoly::monomial_content() const {
    if (t.empty()) return Mono::one();
    Mono g = t.begin()->first;
    for (auto& [m, c] : t) {
        g = g.gcd(m);
        if (g.is_one()) break;
    }
    return g;
}

void MPoly::divide_content(const Rat& c, const Mono& m) {
    std::map<Mono, Rat> nt;
    for (auto& [mm, cc] : t) nt.emplace(mm.div(m), cc / c);
    t = std::move(nt);
}

MPoly MPoly::derivative(Var v) const {
    MPoly r;
    for (auto& [m, c] : t) {
        int k = m.deg(v);
        if (k == 0) continue;
        Mono mm = m.div(Mono::of(v, 1));
        r.add_term(mm, c * k);
    }
    return r;
}

MPoly MPoly::coeff_of(Var v, int k) const {
    MPoly r;
    for (auto& [m, c] : t) {
        if (m.deg(v) != k) continue;
        r.add_term(m.div(Mono::of(v, k)), c);
    }
    return r;
}

std::string MPoly::str() const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest total degree first for readability
    std::vector<const std::pair<const Mono, Rat>*> terms;
    for (auto& kv : t) terms.push_back(&kv);
    std::stable_sort(terms.begin(), terms.end(), [](auto* a, auto* b) {
        return a->first.total_deg() > b->first.total_deg();
    });
    for (auto* kv : terms) {
        const Mono& m = kv->first;
        Rat c = kv->second;
        bool neg = c < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool coef = (c != 1) || m.is_one();
        if (coef) os << c.get_str();
        bool sep = coef;
        for (auto& [w, k] : m.e) {
            if (sep) os << "*";
            os << var_name(w);
            if (k != 1) os << "^" << k;
            sep = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// univariate gcd helper used by RatFn::normalize / reduced (defined in
// unipoly.cpp)

MPoly uni_gcd(const MPoly& a, const MPoly& b, Var v);

// ---------------------------------------------------------------------------
// RatFn

RatFn::RatFn(MPoly n, MPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw Error("DivisionByZero", "zero denominator");
    normalize();
}

RatFn RatFn::variable(Var v, int power) {
    if (power >= 0) return RatFn(MPoly::variable(v, power));
    return RatFn(MPoly(1), MPoly::variable(v, -power));
}

Rat RatFn::rational() const {
    if (!is_rational()) throw Error("NotRational", "value is not a plain rational: " + str());
    if (num.is_zero()) return Rat(0);
    return num.constant() / den.constant();
}

void RatFn::normalize() {
    if (num.is_zero()) {
        den = MPoly(1);
        return;
    }
    Rat rc = num.rational_content() / den.rational_content();
    Mono mc = num.monomial_content().gcd(den.monomial_content());
    num.divide_content(num.rational_content(), mc);
    den.divide_content(den.rational_content(), mc);
    // reattach the rational content, den kept at content 1 with positive lead
    if (den.t.begin()->second < 0) {
        // make leading (lowest mono) den coefficient positive
        for (auto& [m, c] : den.t) c = -c;
        rc = -rc;
    }
    for (auto& [m, c] : num.t) c = c * rc;
    if (den.is_constant() && den.constant() != 1) {
        Rat d = den.constant();
        for (auto& [m, c] : num.t) c = c / d;
        den = MPoly(1);
    }
    // single shared variable: full univariate cancellation is cheap
    if (!den.is_constant()) {
        std::vector<Var> vs;
        num.vars(vs);
        size_t nv = vs.size();
        den.vars(vs);
        if (nv == vs.size() && vs.size() == 1 && num.n_terms() + den.n_terms() < 4000) {
            Var v = vs[0];
            if (den.depends_on(v)) {
                MPoly g = uni_gcd(num, den, v);
                if (g.deg(v) > 0) *this = reduced(v);
            }
        }
    }
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num = -r.num;
    return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den == o.den) return RatFn(num + o.num, den);
    return RatFn(num * o.den + o.num * den, den * o.den);
}

RatFn RatFn::operator-(const RatFn& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return -o;
    if (den == o.den) return RatFn(num - o.num, den);
    return RatFn(num * o.den - o.num * den, den * o.den);
}

RatFn RatFn::operator*(const RatFn& o) const {
    if (is_zero() || o.is_zero()) return RatFn();
    return RatFn(num * o.num, den * o.den);
}

RatFn RatFn::inv() const {
    if (is_zero()) throw Error("DivisionByZero", "inverting zero rational function");
    return RatFn(den, num);
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw Error("DivisionByZero", "dividing by zero rational function");
    if (is_zero()) return RatFn();
    return RatFn(num * o.den, den * o.num);
}

RatFn RatFn::pow(int n) const {
    if (n < 0) return inv().pow(-n);
    RatFn r(1L);
    RatFn b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

bool RatFn::eq(const RatFn& o) const {
    return (num * o.den - o.num * den).is_zero();
}

bool RatFn::depends_on(Var v) const { return num.depends_on(v) || den.depends_on(v); }

bool RatFn::is_free_of(Var v) const {
    if (!depends_on(v)) return true;
    // d/dv (n/d) = (n'd - nd')/d^2
    return (num.derivative(v) * den - num * den.derivative(v)).is_zero();
}

RatFn RatFn::reduced(Var v) const {
    if (num.is_zero()) return RatFn();
    MPoly g = uni_gcd(num, den, v);
    if (g.deg(v) == 0) return *this;
    // exact division via univariate synthetic division over the parameter
    // fraction field; falls back to *this if anything is off
    auto divide = [&](const MPoly& p, bool& ok) -> RatFn {
        int dg = g.deg(v);
        int dp = p.deg(v);
        std::vector<RatFn> pc(static_cast<size_t>(dp) + 1), gc(static_cast<size_t>(dg) + 1);
        for (int i = 0; i <= dp; ++i) pc[static_cast<size_t>(i)] = RatFn(p.coeff_of(v, i));
        for (int i = 0; i <= dg; ++i) gc[static_cast<size_t>(i)] = RatFn(g.coeff_of(v, i));
        std::vector<RatFn> q(static_cast<size_t>(std::max(dp - dg + 1, 0)));
        std::vector<RatFn> r = pc;
        for (int i = dp - dg; i >= 0; --i) {
            RatFn c = r[static_cast<size_t>(i + dg)] / gc[static_cast<size_t>(dg)];
            q[static_cast<size_t>(i)] = c;
            for (int j = 0; j <= dg; ++j)
                r[static_cast<size_t>(i + j)] -= c * gc[static_cast<size_t>(j)];
        }
        for (auto& c : r)
            if (!c.is_zero()) {
                ok = false;
                return RatFn();
            }
        RatFn res;
        for (int i = 0; i < static_cast<int>(q.size()); ++i)
            res += q[static_cast<size_t>(i)] * RatFn::variable(v, i);
        ok = true;
        return res;
    };
    bool okn = false, okd = false;
    RatFn qn = divide(num, okn);
    RatFn qd = divide(den, okd);
    if (!okn || !okd || qd.is_zero()) return *this;
    return qn / qd;
}

std::string RatFn::str() const {
    if (den.is_constant() && den.constant() == 1) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
}

RatFn operator+(long a, const RatFn& b) { return RatFn(a) + b; }
RatFn operator-(long a, const RatFn& b) { return RatFn(a) - b; }
RatFn operator*(long a, const RatFn& b) { return RatFn(a) * b; }
RatFn operator/(long a, const RatFn& b) { return RatFn(a) / b; }

// ---------------------------------------------------------------------------
// substitution

MPoly subst_poly(const MPoly& p, const std::map<Var, RatFn>& assign, MPoly& den_out) {
    // evaluates p with vars replaced; returns numerator, den_out the common
    // denominator.  Implemented as sum over terms with per-term fraction
    // accumulation through RatFn.
    RatFn acc;
    for (auto& [m, c] : p.t) {
        RatFn term{Rat(c)};
        for (auto& [w, k] : m.e) {
            auto it = assign.find(w);
            if (it == assign.end()) {
                term *= RatFn::variable(w, k);
            } else {
                term *= it->second.pow(k);
            }
        }
        acc += term;
    }
    den_out = acc.den;
    return acc.num;
}

RatFn subst(const RatFn& e, const std::map<Var, RatFn>& assign) {
    MPoly dn, dd;
    MPoly nn = subst_poly(e.num, assign, dn);
    MPoly nd = subst_poly(e.den, assign, dd);
    if (nd.is_zero()) throw Error("DenominatorVanishes", "substitution annihilates denominator");
    return RatFn(nn * dd, nd * dn);
}

RatFn scale_var(const RatFn& e, Var v, const RatFn& c) {
    std::map<Var, RatFn> a;
    a.emplace(v, c * RatFn::variable(v));
    return subst(e, a);
}

// ---------------------------------------------------------------------------
// parser

namespace {
struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }

    RatFn expr() {
        RatFn r = eat('-') ? -term() : term();
        while (true) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                break;
        }
        return r;
    }

    RatFn term() {
        RatFn r = factor();
        while (true) {
            if (eat('*'))
                r *= factor();
            else if (eat('/'))
                r /= factor();
            else
                break;
        }
        return r;
    }

    RatFn factor() {
        bool neg = eat('-');
        RatFn p = primary();
        if (eat('^')) {
            bool eneg = eat('-');
            long e = integer();
            p = p.pow(static_cast<int>(eneg ? -e : e));
        }
        return neg ? -p : p;
    }

    long integer() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw Error("ParseError", "expected integer at offset " + std::to_string(start) + " in '" + s + "'");
        return std::stol(s.substr(start, i - start));
    }

    RatFn primary() {
        skip();
        if (eat('(')) {
            RatFn r = expr();
            if (!eat(')')) throw Error("ParseError", "missing ')' in '" + s + "'");
            return r;
        }
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) return RatFn(Rat(integer()));
        size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (start == i) throw Error("ParseError", "unexpected character at offset " + std::to_string(start) + " in '" + s + "'");
        return RatFn::variable(var(s.substr(start, i - start)));
    }
};
}  // namespace

RatFn parse_ratfn(const std::string& text) {
    Parser p(text);
    RatFn r = p.expr();
    p.skip();
    if (p.i != text.size()) throw Error("ParseError", "trailing input in '" + text + "'");
    return r;
}

// ---------------------------------------------------------------------------
// monomial square root

namespace {
bool rat_sqrt(const Rat& c, Rat& out) {
    if (c < 0) return false;
    mpz_class n = c.get_num(), d = c.get_den(), rn, rd;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = Rat(rn, rd);
    out.canonicalize();
    return true;
}

bool mono_sqrt(const Mono& m, Mono& out) {
    out.e.clear();
    for (auto& [w, k] : m.e) {
        if (k % 2 != 0) return false;
        out.e.push_back({w, k / 2});
    }
    return true;
}
}  // namespace

RatFn sqrt_monomial(const RatFn& e) {
    if (e.is_zero()) return RatFn();
    if (!e.num.is_monomial() || !e.den.is_monomial())
        throw Error("BranchMismatch", "square root of a non-monomial expression: " + e.str());
    auto& [nm, nc] = *e.num.t.begin();
    auto& [dm, dc] = *e.den.t.begin();
    Rat c = nc / dc, rc;
    Mono rn, rd;
    if (!rat_sqrt(c, rc) || !mono_sqrt(nm, rn) || !mono_sqrt(dm, rd))
        throw Error("BranchMismatch", "expression has no square root on the chosen branch: " + e.str());
    MPoly num, den;
    num.add_term(rn, rc);
    den.add_term(rd, Rat(1));
    return RatFn(num, den);
}

}  // namespace qh

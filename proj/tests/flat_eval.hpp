#ifndef QH_TESTS_FLAT_EVAL_HPP
#define QH_TESTS_FLAT_EVAL_HPP

// Independent flat transcription of the four L1 displays over plain
// rationals.  Deliberately shares no code with the structured builders in
// src/lax.cpp: everything here is spelled out term by term, and the E8
// quartics are recovered by Lagrange interpolation from their defining
// relations instead of the Laurent-ring division used by the library.
// Serves as a second, structurally different witness of the operators.

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <vector>

namespace flat {

using Rat = mpq_class;

// coefficients of y(z/q), y(z), y(qz), in that order
using Triple = std::array<Rat, 3>;

// mpq division by zero is undefined behaviour, so every display denominator
// is checked up front; callers treat the throw as "redraw the point"
inline void require_nonzero(std::initializer_list<Rat> dens) {
    for (const Rat& d : dens)
        if (d == 0) throw std::runtime_error("flat evaluator hit a pole");
}

struct StdVals {
    Rat nu[9];  // 1-based
    Rat k1, k2, q;
    Rat f, g, z;
};

inline Triple l1_d5(const StdVals& v) {
    const Rat &q = v.q, &f = v.f, &g = v.g, &z = v.z;
    require_nonzero({f, g, q * f - z, f - z});
    Rat a0 = z * (g * v.nu[1] - 1) * (g * v.nu[2] - 1) / (q * g) -
             v.nu[1] * v.nu[2] * v.nu[3] * v.nu[4] * (g - v.nu[5] / v.k2) *
                 (g - v.nu[6] / v.k2) / (f * g);
    Rat B = v.nu[1] * v.nu[2] * (z - q * v.nu[3]) * (z - q * v.nu[4]) /
            (q * (q * f - z));
    Rat C = (z - v.k1 / v.nu[7]) * (z - v.k1 / v.nu[8]) / (q * (f - z));
    return {-B, a0 + B * g + C / g, -C};
}

inline Triple l1_e6(const StdVals& v) {
    const Rat &q = v.q, &f = v.f, &g = v.g, &z = v.z;
    require_nonzero({f, g, f * g - 1, g * z - q, f - z / q, f - z});
    Rat a0 = z * (g * v.nu[1] - 1) * (g * v.nu[2] - 1) * (g * v.nu[3] - 1) *
                 (g * v.nu[4] - 1) / (g * (f * g - 1) * (g * z - q)) -
             (g * v.k2 / v.nu[5] - 1) * (g * v.k2 / v.nu[6] - 1) * v.k1 * v.k1 /
                 (q * f * g * v.nu[7] * v.nu[8]);
    Rat B = (v.nu[1] - z / q) * (v.nu[2] - z / q) * (v.nu[3] - z / q) *
            (v.nu[4] - z / q) / (f - z / q);
    Rat C = (v.k1 / v.nu[7] - z) * (v.k1 / v.nu[8] - z) / (q * (f - z));
    return {-B, a0 + B * g / (1 - g * z / q) + C * (1 / g - z), -C};
}

inline Triple l1_e7(const StdVals& v) {
    const Rat &q = v.q, &f = v.f, &g = v.g, &z = v.z, &k1 = v.k1, &k2 = v.k2;
    require_nonzero({g, z, f * g * k2 - k1, g * k2 * z - k1, f * g - 1,
                     g * z - q, f * q - z, f - z});
    Rat n1234 = v.nu[1] * v.nu[2] * v.nu[3] * v.nu[4];
    Rat a0 = q * (k1 - k2) * (g * k2 - v.nu[5]) * (g * k2 - v.nu[6]) *
                 (g * k2 - v.nu[7]) * (g * k2 - v.nu[8]) /
                 (g * k1 * k2 * k2 * (f * g * k2 - k1) * (g * k2 * z - k1)) -
             q * (k1 - k2) * (g * v.nu[1] - 1) * (g * v.nu[2] - 1) *
                 (g * v.nu[3] - 1) * (g * v.nu[4] - 1) /
                 (g * (f * g - 1) * k1 * n1234 * (g * z - q));
    Rat B = (q * v.nu[1] - z) * (q * v.nu[2] - z) * (q * v.nu[3] - z) *
            (q * v.nu[4] - z) /
            (q * k1 * n1234 * (f * q - z) * z * z * (q - g * z));
    Rat k14 = k1 * k1 * k1 * k1;
    Rat C = q * (k1 - v.nu[5] * z) * (k1 - v.nu[6] * z) * (k1 - v.nu[7] * z) *
            (k1 - v.nu[8] * z) / (k14 * (f - z) * z * z * (g * k2 * z - k1));
    // the display carries the C block with an explicit leading minus sign
    return {-B * k1 * (g * z - q),
            a0 + B * (g * k2 * z - k1 * q) - C * k1 * (g * z - 1),
            C * (g * k2 * z - k1)};
}

// ---------------------------------------------------------------------------
// E8

struct E8Vals {
    Rat u[9];  // 1-based
    Rat h1, h2, q;
    Rat f, g, z;
};

inline Rat U8(const E8Vals& v, const Rat& z) {
    Rat r = 1;
    for (int i = 1; i <= 8; ++i) r *= z - v.u[i];
    return r;
}

// interpolate the quartic P from its defining relation
//   (z - h2/z) P(z + h2/z) = rhs(z)
// through five sample points with pairwise distinct w = z + h2/z
inline Rat e8_quartic_at(const E8Vals& v, bool numerator, const Rat& x) {
    std::vector<Rat> ws, ys;
    for (long cand = 2; cand <= 60 && ws.size() < 5; ++cand) {
        Rat z(cand);
        if (z * z == v.h2) continue;  // z - h2/z = 0
        Rat w = z + v.h2 / z;
        bool dup = false;
        for (const Rat& prev : ws) dup = dup || prev == w;
        if (dup) continue;  // happens when z1 z2 = h2
        Rat rhs;
        if (numerator) {
            Rat z3 = z * z * z;
            rhs = U8(v, z) / z3 - z3 / (v.h2 * v.h2 * v.h2) * U8(v, v.h2 / z);
        } else {
            Rat z5 = z * z * z * z * z;
            Rat h2z = v.h2 / z;
            rhs = z5 * U8(v, v.h2 / z) - h2z * h2z * h2z * h2z * h2z * U8(v, z);
        }
        ws.push_back(w);
        ys.push_back(rhs / (z - v.h2 / z));
    }
    if (ws.size() < 5) throw std::runtime_error("quartic interpolation starved");
    Rat p = 0;
    for (size_t j = 0; j < 5; ++j) {
        Rat term = ys[j];
        for (size_t l = 0; l < 5; ++l)
            if (l != j) term *= (x - ws[l]) / (ws[j] - ws[l]);
        p += term;
    }
    return p;
}

inline Rat e8_psi_n(const E8Vals& v, const Rat& f1, const Rat& f2, const Rat& g) {
    return (f1 - g) * (f2 - g) - (v.h1 / v.q - v.h2) * (v.h1 - v.h2) / v.h2;
}

inline Rat e8_psi_d(const E8Vals& v, const Rat& f1, const Rat& f2, const Rat& g) {
    return (f1 / v.h1 * v.q - g / v.h2) * (f2 / v.h1 - g / v.h2) -
           (v.q / v.h1 - 1 / v.h2) * (1 / v.h1 - 1 / v.h2) * v.h2;
}

inline Rat e8_V(const E8Vals& v, const Rat& f1, const Rat& f2, const Rat& g) {
    Rat h24 = v.h2 * v.h2 * v.h2 * v.h2;
    return v.q * e8_psi_n(v, f1, f2, g) * e8_quartic_at(v, false, g) -
           v.h1 * v.h1 * h24 * e8_psi_d(v, f1, f2, g) * e8_quartic_at(v, true, g);
}

inline Rat e8_phi(const E8Vals& v, const Rat& f, const Rat& g) {
    return (f - g) * (f / v.h1 - g / v.h2) -
           (v.h1 - v.h2) * (1 / v.h1 - 1 / v.h2);
}

inline Triple l1_e8(const E8Vals& v) {
    const Rat &q = v.q, &h1 = v.h1, &h2 = v.h2, &f = v.f, &g = v.g, &z = v.z;
    // explicit Rat return: deducing GMP's expression-template type here
    // would dangle once the lambda frame is gone
    auto fn = [&](const Rat& u) -> Rat { return u + h1 / u; };
    auto gn = [&](const Rat& u) -> Rat { return u + h2 / u; };
    require_nonzero({z, g});
    require_nonzero({f - fn(z / q), f - fn(z), z * z - h1 * q * q, z * z - h1,
                     g - gn(z / q), g - gn(h1 / z), e8_phi(v, f, g)});
    Rat z2 = z * z;
    Rat q5 = q * q * q * q * q;
    Rat h14 = h1 * h1 * h1 * h1;
    Rat z8 = z2 * z2 * z2 * z2;
    Rat A = q5 * U8(v, z / q) / ((z2 - h1 * q * q) * (f - fn(z / q)));
    Rat B = z8 * U8(v, h1 / z) / (h14 * (z2 - h1) * (f - fn(z)));
    Rat fbar_zq = z / q + h1 / z;  // \bar f(u) = u + h1/(q u) at u = z/q
    Rat a0 = -A * (g - gn(q * h1 / z)) / (g - gn(z / q)) -
             B * (g - gn(z)) / (g - gn(h1 / z)) +
             (h1 - h2) * z2 * (z2 - q * h1) * e8_V(v, fbar_zq, f, g) /
                 (q * h1 * h1 * h1 * h2 * h2 * h2 * g * e8_phi(v, f, g) *
                  (g - gn(h1 / z)) * (g - gn(z / q)));
    return {A, a0, B};
}

}  // namespace flat

#endif

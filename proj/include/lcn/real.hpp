#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "lcn/rational.hpp"

namespace lcn {

// High-precision reals for the few places exact rationals cannot serve:
// k^k/(k-1)^(k-1) at non-integer k, gamma = (1-r/h)^(1/r) for r >= 2, and
// the real-l generalized binomial in the Kruskal-Katona check.
// 256-bit mantissa ~ 77 decimal digits, comfortably past the 50 the
// acceptance checks quote.
constexpr unsigned kRealBits = 256;

using Real = mpf_class;

namespace detail {
// Default-constructed mpf_class objects (struct members, locals) must already
// carry the working precision, or assignments silently round to 64 bits.
struct MpfPrecInit {
    MpfPrecInit() { mpf_set_default_prec(kRealBits); }
};
inline MpfPrecInit mpf_prec_init_;
}  // namespace detail

inline Real real_of(const Rat& r) { return Real(mpq_class(r), kRealBits); }
inline Real real_of(double d) { return Real(d, kRealBits); }
inline Real real_of_ui(unsigned long v) { return Real(v, kRealBits); }

inline Real real_pow_ui(const Real& base, unsigned long e) {
    Real out(0, kRealBits);
    mpf_pow_ui(out.get_mpf_t(), base.get_mpf_t(), e);
    return out;
}

// x^(1/r) for x > 0 by Newton iteration seeded from double arithmetic.
inline Real real_root(const Real& x, unsigned long r) {
    if (x <= 0) throw std::domain_error("real_root: nonpositive radicand");
    if (r == 0) throw std::domain_error("real_root: zeroth root");
    if (r == 1) return x;
    if (r == 2) {
        Real out(0, kRealBits);
        mpf_sqrt(out.get_mpf_t(), x.get_mpf_t());
        return out;
    }
    Real y = real_of(std::pow(x.get_d(), 1.0 / static_cast<double>(r)));
    Real rr = real_of_ui(r);
    for (int it = 0; it < 200; ++it) {
        Real yp = real_pow_ui(y, r - 1);
        Real next = ((rr - 1) * y + x / yp) / rr;
        Real diff = next - y;
        y = next;
        if (abs(diff) <= abs(y) * Real(1e-70, kRealBits)) break;
    }
    return y;
}

// Generalized binomial C(l, s) = l(l-1)...(l-s+1)/s! for real l.
inline Real real_binomial(const Real& l, unsigned long s) {
    Real num = real_of_ui(1);
    Real den = real_of_ui(1);
    for (unsigned long i = 0; i < s; ++i) {
        num *= l - real_of_ui(i);
        den *= real_of_ui(i + 1);
    }
    return num / den;
}

// Rational bounds with e_lo < e < e_hi, 50 decimal digits apart by 10^-50.
inline const Rat& euler_lo() {
    static const Rat v = rat_parse(
        "271828182845904523536028747135266249775724709369995"
        "/100000000000000000000000000000000000000000000000000");
    return v;
}
inline const Rat& euler_hi() {
    static const Rat v = rat_parse(
        "271828182845904523536028747135266249775724709369996"
        "/100000000000000000000000000000000000000000000000000");
    return v;
}

}  // namespace lcn

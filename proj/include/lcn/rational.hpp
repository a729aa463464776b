#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcn {

// Exact rational arithmetic. Every LP value and every theorem-level equality
// in this toolkit is a Rat; doubles appear only in Monte Carlo tolerances.
// mpq_class keeps gcd(|num|,den)=1 and den>=1 as long as values are built
// through canonicalizing paths, which the helpers below enforce.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p/q" etc. Throws on malformed input or zero denominator.
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

// "p/q" with the "/q" part omitted when q == 1 (so "5", "5/2", "-1/3").
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(out.get_den_mpz_t(), mpq_denref(base.get_mpq_t()), e);
    // base was canonical, so num^e / den^e already is.
    return out;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace lcn

#pragma once

// Exact rational scalar type. All algebra below the numerics module is done in
// Rat; floating point enters only through to_double().

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "fm/errors.hpp"

namespace fm {

using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; this does.
inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q". Floating-point literals are rejected so exact-layer
// inputs cannot silently lose precision.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    if (text.find_first_of(".eE") != std::string::npos)
        throw Error("floating-point literal rejected in exact layer: " + text);
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw Error("cannot parse rational: " + text);
    if (q.get_den() == 0) throw Error("zero denominator: " + text);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

inline double to_double(const Rat& q) { return q.get_d(); }

inline int sign(const Rat& q) { return sgn(q); }

inline Rat pow_rat(const Rat& base, unsigned k) {
    Rat num, den;
    mpz_pow_ui(num.get_num().get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_num().get_mpz_t(), base.get_den().get_mpz_t(), k);
    num.get_den() = den.get_num();
    num.canonicalize();
    return num;
}

inline Rat binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

// Exact square root of a nonnegative rational, when it exists.
inline bool rational_sqrt(const Rat& q, Rat& root) {
    if (sgn(q) < 0) return false;
    mpz_class sn, sd;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t())) return false;
    if (!mpz_perfect_square_p(q.get_den().get_mpz_t())) return false;
    mpz_sqrt(sn.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), q.get_den().get_mpz_t());
    root = Rat(sn, sd);
    return true;
}

using RatVec = std::vector<Rat>;

}  // namespace fm

#pragma once

#include <gmpxx.h>

#include <string>

#include "mlq/errors.hpp"

namespace mlq {

// Exact rational arithmetic is GMP's job; BigRat is always kept canonical
// (lowest terms, positive denominator).
using BigRat = mpq_class;

// Parses "p", "-p", or "p/q". mpq_class's string constructor does not
// canonicalize, so this wrapper must be used instead of the raw constructor.
inline BigRat parse_bigrat(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw MismatchedArity("not a rational: " + s);
    if (v.get_den() == 0) throw MismatchedArity("zero denominator: " + s);
    v.canonicalize();
    return v;
}

inline std::string bigrat_str(const BigRat& v) { return v.get_str(); }

// v^e for integer e; e < 0 requires v != 0.
inline BigRat pow_bigrat(const BigRat& v, long e) {
    if (e < 0) {
        if (v == 0) throw PoleAtEvaluationPoint("0 raised to a negative power");
        mpq_class inv;
        mpq_inv(inv.get_mpq_t(), v.get_mpq_t());
        return pow_bigrat(inv, -e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return BigRat(num, den);
}

}  // namespace mlq

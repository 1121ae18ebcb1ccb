#pragma once

#include <gmpxx.h>

#include <string>

#include "trisynth/error.hpp"

namespace trisynth {

// Coefficients grow like 3^sde under repeated H applications, so fixed-width
// integers are not an option anywhere in the ring kernel.
using BigInt = mpz_class;

// Non-negative remainder mod 3, independent of the sign of x.
inline int mod3(const BigInt& x) {
    return static_cast<int>(mpz_fdiv_ui(x.get_mpz_t(), 3));
}

inline bool divisible_by_3(const BigInt& x) { return mod3(x) == 0; }

// Exact division by 3; caller guarantees divisibility.
inline BigInt div3(const BigInt& x) {
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), x.get_mpz_t(), 3);
    return q;
}

inline BigInt bigint_from_string(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a decimal integer: '" + s + "'");
    }
}

}  // namespace trisynth

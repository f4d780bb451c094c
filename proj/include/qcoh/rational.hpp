#pragma once

// Exact arithmetic foundation. All ring and linear-algebra computations in
// this library run over arbitrary-precision rationals; floating point is
// confined to the explicitly flagged numeric idempotent path.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcoh {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_nonnegative_integer(const Rational& r) {
    return is_integer(r) && r >= 0;
}

// Canonical "num/den" form, denominator always present and positive.
inline std::string rat_to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "a/b" or a bare integer "a".
inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

using QVec = std::vector<Rational>;

} // namespace qcoh

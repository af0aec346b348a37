#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minorb {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator); every operation below is exact.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// Serialized as "p/q", or "p" when q = 1.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat: unparsable '" + s + "'");
    q.canonicalize();
    return q;
}

// z^e for rational z, integer (possibly negative) exponent.
inline Rat rat_pow(const Rat& z, long e) {
    if (e < 0) {
        if (is_zero(z)) throw std::domain_error("rat_pow: 0 to negative power");
        Rat inv = 1 / z;
        return rat_pow(inv, -e);
    }
    Rat acc(1), base = z;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace minorb

#pragma once

// Exact rational scalars. All arithmetic in this library is over Q; no
// floating point is used anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symtriad {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("rational is not an integer: " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw std::domain_error("integer out of range");
    return r.get_num().get_si();
}

// Parity of an integer-valued rational.
inline bool is_odd(const Rat& r) { return to_long(r) % 2 != 0; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace symtriad

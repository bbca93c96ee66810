#pragma once

#include <gmpxx.h>

#include <string>

namespace macjack {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat parse_rat(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

}  // namespace macjack

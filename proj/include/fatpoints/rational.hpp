#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fatpoints {

// All arithmetic in the library is exact. Rat is a canonicalized GMP rational.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p", "p/q" with optional sign. Rejects empty or malformed input.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace fatpoints

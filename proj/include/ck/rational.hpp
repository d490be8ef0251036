#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ck {

// Exact rational scalar. All algebra in this library is done over Q; no
// floating point enters any computation that feeds a verdict.
using Rat = mpq_class;

inline Rat frac(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "a" or "a/b" with optional sign. Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0)
    throw std::domain_error("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_one(const Rat& r) { return r == 1; }

}  // namespace ck

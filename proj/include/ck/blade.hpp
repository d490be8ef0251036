#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "ck/signature.hpp"

namespace ck {

// A blade is a product of distinct generators in ascending index order,
// encoded as a bitmask: bit i (0 <= i < p) is the plus generator v_{i+1}^+,
// bit p+j (0 <= j < q) is the minus generator v_{j+1}^-.
using Mask = std::uint32_t;

inline Mask plus_bit(const Sig& s, int i) {
  if (i < 1 || i > s.p) throw std::out_of_range("plus generator index out of range");
  return Mask{1} << (i - 1);
}

inline Mask minus_bit(const Sig& s, int j) {
  if (j < 1 || j > s.q) throw std::out_of_range("minus generator index out of range");
  return Mask{1} << (s.p + j - 1);
}

inline Mask plus_mask(const Sig& s) { return (s.p == 0) ? 0 : ((Mask{1} << s.p) - 1); }

inline Mask full_mask(const Sig& s) {
  return (s.n() == 0) ? 0 : ((Mask{1} << s.n()) - 1);
}

inline Mask minus_mask(const Sig& s) { return full_mask(s) & ~plus_mask(s); }

// Number of generators in the blade (the total degree t+r).
inline int blade_deg(Mask m) { return std::popcount(m); }

inline int blade_plus_count(const Sig& s, Mask m) {
  return std::popcount(m & plus_mask(s));
}

inline int blade_minus_count(const Sig& s, Mask m) {
  return std::popcount(m & minus_mask(s));
}

// The index t-r: plus generators minus minus generators.
inline int blade_index(const Sig& s, Mask m) {
  return blade_plus_count(s, m) - blade_minus_count(s, m);
}

// Sign of the geometric product of two blades: parity of the transpositions
// needed to interleave b behind a, times -1 for every shared minus generator.
// The resulting blade is a ^ b.
inline int product_sign(const Sig& s, Mask a, Mask b) {
  int swaps = 0;
  Mask t = a >> 1;
  while (t) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  int sign = (swaps & 1) ? -1 : 1;
  if (std::popcount(a & b & minus_mask(s)) & 1) sign = -sign;
  return sign;
}

// Square of a blade with s generators of index ind = t-r:
// (-1)^{ind(ind-1)/2}. Equivalently reversion sign times the metric product.
inline int blade_square_sign(const Sig& s, Mask m) {
  int ind = blade_index(s, m);
  return (mod_pos(ind * (ind - 1) / 2, 2) == 0) ? 1 : -1;
}

// Reversion multiplies a degree-s blade by (-1)^{s(s-1)/2}.
inline int reversion_sign(int deg) { return ((deg * (deg - 1) / 2) % 2 == 0) ? 1 : -1; }

// The star anti-involution a -> T_{0,q}(reversion(a)) acts on a blade with
// deg s and r minus generators by (-1)^{s(s-1)/2 + r}.
inline int star_sign(const Sig& s, Mask m) {
  int sg = reversion_sign(blade_deg(m));
  if (blade_minus_count(s, m) & 1) sg = -sg;
  return sg;
}

// Do two blades commute (+1) or anticommute (-1)?
// ab = (-1)^{deg(a)deg(b) - deg(a,b)} ba with deg(a,b) = #shared generators.
inline int commutation_sign(Mask a, Mask b) {
  int e = blade_deg(a) * blade_deg(b) - std::popcount(a & b);
  return (e % 2 == 0) ? 1 : -1;
}

}  // namespace ck

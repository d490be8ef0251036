#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ck {

// Signature (p,q) of a nondegenerate quadratic form: p generators squaring to
// +1, q squaring to -1. Blades are bitmasks, so p+q is capped at 30 to keep
// every mask in a uint32_t with headroom.
inline constexpr int kMaxGenerators = 30;

struct Sig {
  int p = 0;
  int q = 0;

  constexpr int n() const { return p + q; }
  constexpr int delta() const { return p - q; }
  constexpr Sig dual() const { return Sig{q, p}; }

  friend constexpr bool operator==(const Sig&, const Sig&) = default;
};

inline void check_sig(const Sig& s) {
  if (s.p < 0 || s.q < 0)
    throw std::domain_error("signature components must be nonnegative");
  if (s.n() > kMaxGenerators)
    throw std::domain_error("signature too large: p+q must not exceed 30");
}

inline Sig operator+(const Sig& a, const Sig& b) { return Sig{a.p + b.p, a.q + b.q}; }

inline Sig operator-(const Sig& a, const Sig& b) {
  Sig r{a.p - b.p, a.q - b.q};
  check_sig(r);
  return r;
}

// A sub-signature K <= M selecting the first k+ plus and first k- minus
// generators. Same data as Sig; separate name for readability at call sites.
using Key = Sig;

inline std::string sig_str(const Sig& s) {
  return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

// Euclidean-style mod that always lands in [0, m).
inline constexpr int mod_pos(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace ck

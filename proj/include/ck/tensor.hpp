#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "ck/format.hpp"
#include "ck/multivector.hpp"

namespace ck {

// Target algebra of a morphism: either a single Clifford algebra C(a) or an
// (ungraded) tensor product C(a) (x) C(b).
struct TAlg {
  Sig a{};
  Sig b{};
  bool tensor = false;

  int dim_log2() const { return a.n() + (tensor ? b.n() : 0); }
  friend bool operator==(const TAlg&, const TAlg&) = default;
};

inline TAlg plain_alg(Sig s) { return TAlg{s, Sig{}, false}; }
inline TAlg tensor_alg(Sig a, Sig b) { return TAlg{a, b, true}; }

// Key packs both factor masks: low 32 bits slot A, high 32 bits slot B.
using TKey = std::uint64_t;

inline TKey tkey(Mask a, Mask b) {
  return static_cast<TKey>(a) | (static_cast<TKey>(b) << 32);
}
inline Mask tkey_a(TKey k) { return static_cast<Mask>(k & 0xffffffffu); }
inline Mask tkey_b(TKey k) { return static_cast<Mask>(k >> 32); }

// Sparse element of a TAlg.
struct TEl {
  TAlg alg{};
  std::map<TKey, Rat> terms;

  TEl() = default;
  explicit TEl(TAlg al) : alg(al) {}

  static TEl scalar(TAlg al, const Rat& c) {
    TEl e(al);
    if (sgn(c) != 0) e.terms.emplace(0, c);
    return e;
  }
  static TEl blade(TAlg al, Mask ma, Mask mb, const Rat& c = 1) {
    if (!al.tensor && mb) throw std::invalid_argument("plain algebra has no second slot");
    TEl e(al);
    if (sgn(c) != 0) e.terms.emplace(tkey(ma, mb), c);
    return e;
  }

  bool is_zero() const { return terms.empty(); }
  bool single_term() const { return terms.size() == 1; }
  Rat coeff(TKey k) const {
    auto it = terms.find(k);
    return it == terms.end() ? Rat(0) : it->second;
  }
  void add_term(TKey k, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms.erase(it);
    }
  }
  friend bool operator==(const TEl& x, const TEl& y) {
    return x.alg == y.alg && x.terms == y.terms;
  }
};

inline void require_same_alg(const TEl& x, const TEl& y) {
  if (!(x.alg == y.alg))
    throw std::invalid_argument("tensor elements live in different algebras");
}

inline TEl operator+(const TEl& x, const TEl& y) {
  require_same_alg(x, y);
  TEl r = x;
  for (const auto& [k, c] : y.terms) r.add_term(k, c);
  return r;
}

inline TEl operator-(const TEl& x, const TEl& y) {
  require_same_alg(x, y);
  TEl r = x;
  for (const auto& [k, c] : y.terms) r.add_term(k, -c);
  return r;
}

inline TEl operator-(const TEl& x) {
  TEl r(x.alg);
  for (const auto& [k, c] : x.terms) r.terms.emplace(k, -c);
  return r;
}

inline TEl operator*(const Rat& c, const TEl& x) {
  TEl r(x.alg);
  if (sgn(c) == 0) return r;
  for (const auto& [k, co] : x.terms) r.terms.emplace(k, c * co);
  return r;
}

inline TEl operator*(const TEl& x, const TEl& y) {
  require_same_alg(x, y);
  TEl r(x.alg);
  for (const auto& [kx, cx] : x.terms)
    for (const auto& [ky, cy] : y.terms) {
      int sign = product_sign(x.alg.a, tkey_a(kx), tkey_a(ky));
      if (x.alg.tensor) sign *= product_sign(x.alg.b, tkey_b(kx), tkey_b(ky));
      Rat c = cx * cy;
      if (sign < 0) c = -c;
      r.add_term(kx ^ ky, c);
    }
  return r;
}

// Slotwise star anti-involution; on products it reverses order as required.
inline TEl star(const TEl& x) {
  TEl r(x.alg);
  for (const auto& [k, c] : x.terms) {
    int sign = star_sign(x.alg.a, tkey_a(k));
    if (x.alg.tensor) sign *= star_sign(x.alg.b, tkey_b(k));
    r.terms.emplace(k, sign < 0 ? -c : c);
  }
  return r;
}

// Automorphism negating the given generators in each slot.
inline TEl negate_generators(const TEl& x, Mask neg_a, Mask neg_b) {
  TEl r(x.alg);
  for (const auto& [k, c] : x.terms) {
    int par = std::popcount(tkey_a(k) & neg_a);
    if (x.alg.tensor) par += std::popcount(tkey_b(k) & neg_b);
    r.terms.emplace(k, (par & 1) ? -c : c);
  }
  return r;
}

inline TEl embed(const Mv& m, TAlg al) {
  if (!(m.sig == al.a)) throw std::invalid_argument("embed: signature mismatch");
  TEl r(al);
  for (const auto& [mask, c] : m.terms) r.terms.emplace(tkey(mask, 0), c);
  return r;
}

inline TEl tensor_of(const Mv& x, const Mv& y, TAlg al) {
  if (!al.tensor || !(x.sig == al.a) || !(y.sig == al.b))
    throw std::invalid_argument("tensor_of: signature mismatch");
  TEl r(al);
  for (const auto& [mx, cx] : x.terms)
    for (const auto& [my, cy] : y.terms) r.add_term(tkey(mx, my), cx * cy);
  return r;
}

inline Mv to_mv(const TEl& x) {
  if (x.alg.tensor) throw std::invalid_argument("to_mv: element has a tensor target");
  Mv r(x.alg.a);
  for (const auto& [k, c] : x.terms) r.terms.emplace(tkey_a(k), c);
  return r;
}

inline std::string to_string(const TEl& x) {
  if (x.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms) {
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    Rat ac = abs(c);
    std::string body;
    if (!x.alg.tensor) {
      body = tkey_a(k) ? blade_str(x.alg.a, tkey_a(k)) : "1";
    } else {
      std::string la = tkey_a(k) ? blade_str(x.alg.a, tkey_a(k)) : "1";
      std::string lb = tkey_b(k) ? blade_str(x.alg.b, tkey_b(k)) : "1";
      body = la + "(x)" + lb;
    }
    if (!is_one(ac)) out += rat_str(ac) + "*";
    out += body;
  }
  return out;
}

}  // namespace ck

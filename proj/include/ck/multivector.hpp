#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ck/blade.hpp"
#include "ck/rational.hpp"
#include "ck/signature.hpp"

namespace ck {

// Sparse multivector: exact rational coefficients on blade bitmasks.
struct Mv {
  Sig sig{};
  std::map<Mask, Rat> terms;

  Mv() = default;
  explicit Mv(Sig s) : sig(s) { check_sig(s); }

  static Mv scalar(Sig s, const Rat& c) {
    Mv m(s);
    if (sgn(c) != 0) m.terms.emplace(0, c);
    return m;
  }
  static Mv blade(Sig s, Mask mask, const Rat& c = 1) {
    check_sig(s);
    if (mask & ~full_mask(s)) throw std::out_of_range("blade mask outside signature");
    Mv m(s);
    if (sgn(c) != 0) m.terms.emplace(mask, c);
    return m;
  }
  static Mv gen_plus(Sig s, int i) { return blade(s, plus_bit(s, i)); }
  static Mv gen_minus(Sig s, int j) { return blade(s, minus_bit(s, j)); }
  // Generator by flat index 1..p+q (plus generators first).
  static Mv gen(Sig s, int i) {
    if (i < 1 || i > s.n()) throw std::out_of_range("generator index out of range");
    return blade(s, Mask{1} << (i - 1));
  }

  bool is_zero() const { return terms.empty(); }
  bool is_scalar() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first == 0);
  }
  Rat scalar_part() const {
    auto it = terms.find(0);
    return it == terms.end() ? Rat(0) : it->second;
  }
  Rat coeff(Mask m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rat(0) : it->second;
  }

  void add_term(Mask m, const Rat& c) {
    if (ck::is_zero(c)) return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (ck::is_zero(it->second)) terms.erase(it);
    }
  }

  friend bool operator==(const Mv& a, const Mv& b) {
    return a.sig == b.sig && a.terms == b.terms;
  }
};

inline void require_same_sig(const Mv& a, const Mv& b) {
  if (!(a.sig == b.sig))
    throw std::invalid_argument("multivectors live in different Clifford algebras");
}

inline Mv operator+(const Mv& a, const Mv& b) {
  require_same_sig(a, b);
  Mv r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, c);
  return r;
}

inline Mv operator-(const Mv& a, const Mv& b) {
  require_same_sig(a, b);
  Mv r = a;
  for (const auto& [m, c] : b.terms) r.add_term(m, -c);
  return r;
}

inline Mv operator-(const Mv& a) {
  Mv r(a.sig);
  for (const auto& [m, c] : a.terms) r.terms.emplace(m, -c);
  return r;
}

inline Mv operator*(const Rat& c, const Mv& a) {
  Mv r(a.sig);
  if (is_zero(c)) return r;
  for (const auto& [m, co] : a.terms) r.terms.emplace(m, c * co);
  return r;
}

inline Mv operator*(const Mv& a, const Rat& c) { return c * a; }

// Geometric product.
inline Mv operator*(const Mv& a, const Mv& b) {
  require_same_sig(a, b);
  Mv r(a.sig);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Rat c = ca * cb;
      if (product_sign(a.sig, ma, mb) < 0) c = -c;
      r.add_term(ma ^ mb, c);
    }
  return r;
}

inline Mv pow(const Mv& a, unsigned e) {
  Mv r = Mv::scalar(a.sig, 1);
  Mv base = a;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

// --- Grading -----------------------------------------------------------

inline Mv grade_part(const Mv& a, int g) {
  Mv r(a.sig);
  for (const auto& [m, c] : a.terms)
    if (blade_deg(m) == g) r.terms.emplace(m, c);
  return r;
}

inline Mv even_part(const Mv& a) {
  Mv r(a.sig);
  for (const auto& [m, c] : a.terms)
    if (blade_deg(m) % 2 == 0) r.terms.emplace(m, c);
  return r;
}

inline Mv odd_part(const Mv& a) {
  Mv r(a.sig);
  for (const auto& [m, c] : a.terms)
    if (blade_deg(m) % 2 == 1) r.terms.emplace(m, c);
  return r;
}

inline bool is_even(const Mv& a) {
  for (const auto& [m, c] : a.terms)
    if (blade_deg(m) % 2) return false;
  return true;
}

// True when a lies in the vector space E spanned by the generators.
inline bool is_vector(const Mv& a) {
  for (const auto& [m, c] : a.terms)
    if (blade_deg(m) != 1) return false;
  return true;
}

inline int max_grade(const Mv& a) {
  int g = 0;
  for (const auto& [m, c] : a.terms)
    if (blade_deg(m) > g) g = blade_deg(m);
  return g;
}

// --- Involutions -------------------------------------------------------

// Reversion: the anti-automorphism fixing generators.
inline Mv reversion(const Mv& a) {
  Mv r(a.sig);
  for (const auto& [m, c] : a.terms)
    r.terms.emplace(m, reversion_sign(blade_deg(m)) < 0 ? -c : c);
  return r;
}

// The automorphism negating exactly the generators in negmask.
inline Mv negate_generators(const Mv& a, Mask negmask) {
  Mv r(a.sig);
  for (const auto& [m, c] : a.terms)
    r.terms.emplace(m, (std::popcount(m & negmask) & 1) ? -c : c);
  return r;
}

// T_{l+,l-}: negates the last l+ plus generators and last l- minus ones.
inline Mask t_negmask(const Sig& s, int lp, int lm) {
  if (lp < 0 || lp > s.p || lm < 0 || lm > s.q)
    throw std::out_of_range("grade-involution parameters out of range");
  Mask m = 0;
  for (int i = s.p - lp + 1; i <= s.p; ++i) m |= plus_bit(s, i);
  for (int j = s.q - lm + 1; j <= s.q; ++j) m |= minus_bit(s, j);
  return m;
}

inline Mv t_involution(const Mv& a, int lp, int lm) {
  return negate_generators(a, t_negmask(a.sig, lp, lm));
}

// Grade involution: negates every generator.
inline Mv grade_involution(const Mv& a) {
  return negate_generators(a, full_mask(a.sig));
}

// Star: reversion followed by negation of the minus generators. Restricted to
// the even part it equals reversion followed by negation of the plus ones.
inline Mv star(const Mv& a) {
  Mv r(a.sig);
  for (const auto& [m, c] : a.terms)
    r.terms.emplace(m, star_sign(a.sig, m) < 0 ? -c : c);
  return r;
}

// --- Quadratic form and reflections ------------------------------------

// Q(v) for v in E: v*v is the scalar Q(v).
inline Rat quad_form(const Mv& v) {
  if (!is_vector(v)) throw std::invalid_argument("quadratic form needs a vector");
  Mv sq = v * v;
  if (!sq.is_scalar()) throw std::logic_error("vector square must be scalar");
  return sq.scalar_part();
}

// Polar pairing <a,b> = (Q(a+b) - Q(a) - Q(b))/2 on E.
inline Rat polar_form(const Mv& a, const Mv& b) {
  Mv s = a * b + b * a;
  if (!s.is_scalar()) throw std::invalid_argument("polar form needs vectors");
  return s.scalar_part() / 2;
}

// Reflection tau_v(a) = (-1/Q(v)) v a v for anisotropic v in E.
inline Mv reflect(const Mv& v, const Mv& a) {
  Rat qv = quad_form(v);
  if (is_zero(qv)) throw std::domain_error("reflection vector must be anisotropic");
  return (Rat(-1) / qv) * (v * a * v);
}

// Twisted conjugation rho(x)(a) = x a reversion(x).
inline Mv rho(const Mv& x, const Mv& a) { return x * a * reversion(x); }

// --- Distinguished elements --------------------------------------------

// V_K = v_1^+ ... v_{k+}^+ v_1^- ... v_{k-}^-; canonical order, coefficient 1.
inline Mv volume_element(Sig s, Key k) {
  check_sig(s);
  if (k.p < 0 || k.p > s.p || k.q < 0 || k.q > s.q)
    throw std::out_of_range("sub-signature exceeds ambient signature");
  Mask m = 0;
  for (int i = 1; i <= k.p; ++i) m |= plus_bit(s, i);
  for (int j = 1; j <= k.q; ++j) m |= minus_bit(s, j);
  return Mv::blade(s, m);
}

inline Mv j_plus(Sig s) { return volume_element(s, Key{s.p, 0}); }
inline Mv j_minus(Sig s) { return volume_element(s, Key{0, s.q}); }
inline Mv j_element(Sig s) { return volume_element(s, Key{s.p, s.q}); }

// Sign of V_K^2: +1 iff delta(K) = 0 or 1 mod 4.
inline int volume_square_sign(Key k) {
  int d = mod_pos(k.delta(), 4);
  return (d == 0 || d == 1) ? 1 : -1;
}

// --- Group membership predicates ----------------------------------------

// G(p,q) = { a in C_even : reversion(a) a = 1 }.
inline bool in_group(const Mv& a) {
  if (!is_even(a)) return false;
  return reversion(a) * a == Mv::scalar(a.sig, 1);
}

// The weaker Spin-style predicate: additionally rho(a) must preserve E.
inline bool in_spin(const Mv& a) {
  if (!in_group(a)) return false;
  for (int i = 1; i <= a.sig.n(); ++i)
    if (!is_vector(rho(a, Mv::gen(a.sig, i)))) return false;
  return true;
}

// Aut(J) = { a : star(a) J a = J }.
inline bool in_aut(const Mv& a, const Mv& j) {
  require_same_sig(a, j);
  return star(a) * j * a == j;
}

// --- Linearized data -----------------------------------------------------

// Basis blades of g = { X in C_even : reversion(X) + X = 0 }: exactly the
// blades of grade 2 mod 4.
inline std::vector<Mask> lie_algebra_blades(Sig s) {
  check_sig(s);
  std::vector<Mask> out;
  const Mask top = full_mask(s);
  for (Mask m = 0; m <= top; ++m) {
    if (blade_deg(m) % 4 == 2) out.push_back(m);
    if (m == top) break;
  }
  return out;
}

// Dimension of the -1 eigenspace of the Cartan involution X -> -star(X) on g:
// blades of grade 2 mod 4 with an odd number of minus generators.
inline int noncompact_dim_by_blades(Sig s) {
  int d = 0;
  for (Mask m : lie_algebra_blades(s))
    if (blade_minus_count(s, m) % 2 == 1) ++d;
  return d;
}

// Blades fixed by the automorphism negating negmask generators.
inline std::vector<Mask> fixed_subalgebra_blades(Sig s, Mask negmask) {
  check_sig(s);
  std::vector<Mask> out;
  const Mask top = full_mask(s);
  for (Mask m = 0; m <= top; ++m) {
    if ((std::popcount(m & negmask) & 1) == 0) out.push_back(m);
    if (m == top) break;
  }
  return out;
}

}  // namespace ck

#pragma once

#include "ck/phi.hpp"

namespace ck {

// Identification of the even subalgebra of C(p,q), q >= 1, with C(p,q-1):
// restrict the (0,1) reduction morphism to even elements (where it lands in
// the span of blades avoiding v1-) and renumber the remaining negative
// generators down by one.
class EvenReduction {
 public:
  explicit EvenReduction(Sig s)
      : src_(s), tgt_{s.p, s.q - 1}, ph_(phi(s, Key{0, 1}).map), inv_(ph_.monomial_inverse()) {
    if (s.q < 1) throw std::domain_error("even reduction needs q >= 1");
  }

  const Sig& source() const { return src_; }
  const Sig& target() const { return tgt_; }

  // Even a in C(p,q) -> C(p,q-1).
  Mv reduce(const Mv& a) const {
    if (!(a.sig == src_)) throw std::invalid_argument("even reduction: wrong algebra");
    if (!is_even(a)) throw std::invalid_argument("even reduction needs an even element");
    Mv img = to_mv(ph_.apply(a));
    Mv out(tgt_);
    const Mask v1m = minus_bit(src_, 1);
    const Mask pmask = plus_mask(src_);
    for (const auto& [m, c] : img.terms) {
      if (m & v1m) throw std::logic_error("even reduction: image touches v1-");
      out.terms.emplace((m & pmask) | ((m & ~pmask) >> 1), c);
    }
    return out;
  }

  // Any x in C(p,q-1) -> even element of C(p,q).
  Mv unreduce(const Mv& x) const {
    if (!(x.sig == tgt_)) throw std::invalid_argument("even reduction: wrong algebra");
    Mv lifted(src_);
    const Mask pmask = plus_mask(tgt_);
    for (const auto& [m, c] : x.terms)
      lifted.terms.emplace((m & pmask) | ((m & ~pmask) << 1), c);
    Mv out = to_mv(inv_.apply(lifted));
    if (!is_even(out)) throw std::logic_error("even reduction: preimage is not even");
    return out;
  }

 private:
  Sig src_, tgt_;
  Morphism ph_, inv_;
};

// Isomorphism of even subalgebras C_even(p,q) -> C_even(q,p), p,q >= 1,
// obtained by reducing, transmuting through the (1,0) reduction, and lifting
// back on the other side.
class EvenSwap {
 public:
  explicit EvenSwap(Sig s)
      : src_(s), tgt_{s.q, s.p}, red_a_(s), mid_(phi(Sig{s.p, s.q - 1}, Key{1, 0}).map),
        red_b_(Sig{s.q, s.p}) {
    if (s.p < 1 || s.q < 1) throw std::domain_error("even swap needs p,q >= 1");
  }

  const Sig& source() const { return src_; }
  const Sig& target() const { return tgt_; }

  Mv apply(const Mv& a) const {
    return red_b_.unreduce(to_mv(mid_.apply(red_a_.reduce(a))));
  }

 private:
  Sig src_, tgt_;
  EvenReduction red_a_;
  Morphism mid_;
  EvenReduction red_b_;
};

}  // namespace ck

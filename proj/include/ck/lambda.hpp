#pragma once

#include <vector>

#include "ck/phi.hpp"

namespace ck {

struct LambdaMor {
  Morphism map;                     // an automorphism of C(M)
  int case_mod4;                    // delta(K) mod 4
  std::vector<Transfer> transfers;  // one per source generator
  Mask square_negmask;              // lambda^2 = negate these generators
};

// The twisting automorphism lambda_K of C(M), 1 <= k+ <= p, 1 <= k- <= q.
// It moves the tau-involutions of the K block into standard position; its
// square is the identity (delta(K) = 0,1 mod 4) or tau_{k+}^+ tau_{k-}^-.
inline LambdaMor lambda(Sig m, Key k) {
  check_sig(m);
  if (k.p < 1 || k.q < 1 || k.p > m.p || k.q > m.q)
    throw std::out_of_range("lambda: need 1 <= k+ <= p and 1 <= k- <= q");
  const int d = mod_pos(k.delta(), 4);
  const TAlg tgt = plain_alg(m);
  const Mv v = volume_element(m, Key{k.p - 1, k.q - 1});
  const Mv pivot = Mv::gen_plus(m, k.p) * Mv::gen_minus(m, k.q);
  const Mask pivot_neg = plus_bit(m, k.p) | minus_bit(m, k.q);
  const Mask t_mk = t_negmask(m, m.p - k.p, m.q - k.q);

  std::vector<TEl> imgs(static_cast<size_t>(m.n()));
  std::vector<Transfer> tr(static_cast<size_t>(m.n()));
  auto fp = [&](int i) { return static_cast<size_t>(i - 1); };
  auto fm = [&](int j) { return static_cast<size_t>(m.p + j - 1); };
  const bool even_case = (d == 0 || d == 2);
  Mask vmask = 0;
  for (const auto& [vm, vc] : v.terms) vmask = vm;

  // Generators below the pivot: dressed by the pivot bivector in the even
  // case, fixed in the odd case. Either way their involutions drag the pivot
  // signs along, because the pivot images contain V.
  for (int i = 1; i < k.p; ++i) {
    Mv g = Mv::gen_plus(m, i);
    imgs[fp(i)] = embed(even_case ? pivot * g : g, tgt);
    tr[fp(i)] = Transfer{plus_bit(m, i), plus_bit(m, i) ^ pivot_neg, 0};
  }
  for (int j = 1; j < k.q; ++j) {
    Mv g = Mv::gen_minus(m, j);
    imgs[fm(j)] = embed(even_case ? pivot * g : g, tgt);
    tr[fm(j)] = Transfer{minus_bit(m, j), minus_bit(m, j) ^ pivot_neg, 0};
  }
  // The pivot generators themselves: V times the same generator, or V times
  // the opposite one when delta(K) = 1,2 mod 4.
  const bool swap_pivot = (d == 1 || d == 2);
  {
    Mv ip = v * (swap_pivot ? Mv::gen_minus(m, k.q) : Mv::gen_plus(m, k.p));
    Mv im = v * (swap_pivot ? Mv::gen_plus(m, k.p) : Mv::gen_minus(m, k.q));
    imgs[fp(k.p)] = embed(ip, tgt);
    imgs[fm(k.q)] = embed(im, tgt);
    Mask pimg = swap_pivot ? minus_bit(m, k.q) : plus_bit(m, k.p);
    Mask mimg = swap_pivot ? plus_bit(m, k.p) : minus_bit(m, k.q);
    Mask dress = even_case ? vmask : t_mk;
    tr[fp(k.p)] = Transfer{plus_bit(m, k.p), pimg ^ dress, 0};
    tr[fm(k.q)] = Transfer{minus_bit(m, k.q), mimg ^ dress, 0};
  }
  // Generators above the pivot: fixed in the even case, dressed in the odd
  // case; their involutions transfer untouched either way.
  for (int i = k.p + 1; i <= m.p; ++i) {
    Mv g = Mv::gen_plus(m, i);
    imgs[fp(i)] = embed(even_case ? g : pivot * g, tgt);
    tr[fp(i)] = Transfer{plus_bit(m, i), plus_bit(m, i), 0};
  }
  for (int j = k.q + 1; j <= m.q; ++j) {
    Mv g = Mv::gen_minus(m, j);
    imgs[fm(j)] = embed(even_case ? g : pivot * g, tgt);
    tr[fm(j)] = Transfer{minus_bit(m, j), minus_bit(m, j), 0};
  }

  Mask sq = (d == 0 || d == 1) ? 0 : pivot_neg;
  return LambdaMor{Morphism(m, tgt, std::move(imgs)), d, std::move(tr), sq};
}

struct EtaMor {
  Morphism map;        // C(M) -> C(1,1) (x) C(p-1,q-1)
  Key kprime;          // the enlarged key used internally
  int epsilon;         // sign produced by lambda on V_K (diagnostic only)
  TEl expected_vk;     // v_1^{+|-} (x) 1, the pinned image of V_K
};

// The normalizing isomorphism eta_K: sends V_K to v1 (x) 1 in
// C(1,1) (x) C(p-1,q-1); the first-slot generator is v1^+ for
// delta(K) = 0,1 mod 4 and v1^- otherwise.
inline EtaMor eta(Sig m, Key k) {
  check_sig(m);
  if (m.p < 1 || m.q < 1) throw std::domain_error("eta: need p,q >= 1");
  if (k.p < 0 || k.q < 0 || k.p > m.p || k.q > m.q)
    throw std::out_of_range("eta: sub-signature exceeds ambient signature");
  if (k.p + k.q == 0) throw std::domain_error("eta: K must be nonzero");
  if (k.p == m.p && k.q == m.q) throw std::domain_error("eta: K must be proper");

  Key kp{};
  if (k.p < m.p && k.q > 0)
    kp = Key{k.p + 1, k.q};
  else
    kp = Key{k.p, k.q + 1};  // here k.p > 0 and k.q < q
  LambdaMor lam = lambda(m, kp);

  const int d = mod_pos(k.delta(), 4);
  const bool plus_slot = (d == 0 || d == 1);
  TEl vk_img = lam.map.apply(volume_element(m, k));
  if (!vk_img.single_term())
    throw std::logic_error("eta: lambda image of V_K is not a single blade");
  Mask img_mask = tkey_a(vk_img.terms.begin()->first);
  Mask want = plus_slot ? plus_bit(m, kp.p) : minus_bit(m, kp.q);
  if (img_mask != want) throw std::logic_error("eta: lambda image of V_K misplaced");
  const Rat& coeff = vk_img.terms.begin()->second;
  if (!(coeff == 1 || coeff == -1))
    throw std::logic_error("eta: lambda image of V_K has a non-unit coefficient");
  int eps = (coeff == 1) ? 1 : -1;

  // tau_v moving eps * (the generator lambda produced) onto the first
  // generator of its kind; the identity when it is already there with eps=1.
  Mv target_gen = plus_slot ? Mv::gen_plus(m, 1) : Mv::gen_minus(m, 1);
  Mv moved_gen = plus_slot ? Mv::gen_plus(m, kp.p) : Mv::gen_minus(m, kp.q);
  Mv vvec = Rat(eps) * moved_gen - target_gen;
  Morphism mid = vvec.is_zero() ? lam.map : compose(reflection_morphism(vvec), lam.map);

  PhiMor ph = phi(m, Key{1, 1});
  Morphism full = compose(ph.map, mid);

  TEl expected = tensor_of(plus_slot ? Mv::gen_plus(Sig{1, 1}, 1) : Mv::gen_minus(Sig{1, 1}, 1),
                           Mv::scalar(Sig{m.p - 1, m.q - 1}, 1), ph.map.target());
  return EtaMor{std::move(full), kp, eps, std::move(expected)};
}

struct XiMor {
  Morphism map;       // C(M) -> C(X) (x) C(Y)
  Sig x_factor;       // X
  Sig y_factor;       // Y = (1,0) or (0,1)
  Transfer t_l;       // T_L on the source maps to id (x) tau_1 on the target
};

// The splitting isomorphism xi_L for M = K + L with delta(M), delta(L) odd:
// C(M) -> C(X) (x) C(Y) carrying T_L to id (x) tau_1^{+|-}. Y = (1,0) when
// delta(M) = 1 mod 4 and (0,1) when delta(M) = 3 mod 4.
inline XiMor xi(Sig m, Key l) {
  check_sig(m);
  if (l.p < 0 || l.q < 0 || l.p > m.p || l.q > m.q)
    throw std::out_of_range("xi: L exceeds ambient signature");
  const Key k{m.p - l.p, m.q - l.q};
  if (k.p + k.q == 0 || (k.p == m.p && k.q == m.q))
    throw std::domain_error("xi: K must be nonzero and proper");
  if (m.p < 1) throw std::domain_error("xi: need p >= 1");
  if (mod_pos(m.delta(), 2) != 1 || mod_pos(l.delta(), 2) != 1)
    throw std::domain_error("xi: delta(M) and delta(L) must be odd");
  const int d = mod_pos(k.delta(), 4);  // even since delta(M)-delta(L) is even

  Key kp{};
  if (k.q >= 1 && k.p < m.p)
    kp = Key{k.p + 1, k.q};
  else if (k.p >= 1 && k.q < m.q)
    kp = Key{k.p, k.q + 1};
  else
    throw std::domain_error("xi: no admissible enlargement of K (q = 0 layout)");
  LambdaMor lam = lambda(m, kp);
  const Mask tl_src = t_negmask(m, l.p, l.q);

  if (d == 0) {
    // T_L travels to tau at the last minus slot, then through two phis.
    Mv vvec = Mv::gen_minus(m, kp.q) - Mv::gen_minus(m, m.q);
    Morphism mid = vvec.is_zero() ? lam.map : compose(reflection_morphism(vvec), lam.map);
    PhiMor ph10 = phi(m, Key{1, 0});  // C(M) -> C(q+1, p-1)
    Morphism step = compose(ph10.map, mid);
    Sig mid_sig = ph10.map.target().a;
    PhiMor ph2 = phi(mid_sig, Key{mid_sig.p - 1, mid_sig.q});
    Morphism full = compose(ph2.map, step);
    Sig y = ph2.map.target().b;
    Mask yb = (y.p == 1) ? plus_bit(y, 1) : minus_bit(y, 1);
    return XiMor{std::move(full), ph2.map.target().a, y, Transfer{tl_src, 0, yb}};
  }
  // d == 2: T_L travels to tau at the last plus slot, then through one phi.
  Mv vvec = Mv::gen_plus(m, kp.p) - Mv::gen_plus(m, m.p);
  Morphism mid = vvec.is_zero() ? lam.map : compose(reflection_morphism(vvec), lam.map);
  PhiMor ph2 = phi(m, Key{m.p - 1, m.q});
  Morphism full = compose(ph2.map, mid);
  Sig y = ph2.map.target().b;
  Mask yb = (y.p == 1) ? plus_bit(y, 1) : minus_bit(y, 1);
  return XiMor{std::move(full), ph2.map.target().a, y, Transfer{tl_src, 0, yb}};
}

}  // namespace ck

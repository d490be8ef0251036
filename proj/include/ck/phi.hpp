#pragma once

#include <vector>

#include "ck/morphism.hpp"

namespace ck {

// A transfer record: the morphism intertwines "negate src_neg" on the source
// with "negate (tgt_a, tgt_b)" on the target.
struct Transfer {
  Mask src_neg = 0;
  Mask tgt_a = 0;
  Mask tgt_b = 0;
};

struct PhiMor {
  Morphism map;
  int case_mod4;                 // delta(K) mod 4 selects the target shape
  std::vector<Transfer> transfers;  // one per source generator, flat order
};

// The reduction morphism phi_K on C(M), M = K + L. Its shape depends on
// delta(K) mod 4:
//   0: C(M) -> C(K) (x) C(L)
//   1: C(M) -> C(K + L^dual)
//   2: C(M) -> C(K) (x) C(L^dual)
//   3: C(M) -> C(M)
// Each case sends the first block of generators to (copies of) themselves and
// twists the remaining ones by the volume element V_K.
inline PhiMor phi(Sig m, Key k) {
  check_sig(m);
  if (k.p < 0 || k.q < 0 || k.p > m.p || k.q > m.q)
    throw std::out_of_range("phi: sub-signature exceeds ambient signature");
  const Sig l{m.p - k.p, m.q - k.q};
  const int d = mod_pos(k.delta(), 4);

  std::vector<TEl> imgs(static_cast<size_t>(m.n()));
  std::vector<Transfer> tr(static_cast<size_t>(m.n()));
  auto flat_plus = [&](int i) { return static_cast<size_t>(i - 1); };
  auto flat_minus = [&](int j) { return static_cast<size_t>(m.p + j - 1); };

  if (d == 0 || d == 2) {
    const Sig second = (d == 0) ? l : l.dual();
    const TAlg tgt = tensor_alg(k, second);
    const Mv vk = volume_element(k, k);
    const Mv one_b = Mv::scalar(second, 1);
    for (int i = 1; i <= k.p; ++i) {
      imgs[flat_plus(i)] = tensor_of(Mv::gen_plus(k, i), one_b, tgt);
      tr[flat_plus(i)] = Transfer{plus_bit(m, i), plus_bit(k, i), full_mask(second)};
    }
    for (int j = 1; j <= k.q; ++j) {
      imgs[flat_minus(j)] = tensor_of(Mv::gen_minus(k, j), one_b, tgt);
      tr[flat_minus(j)] = Transfer{minus_bit(m, j), minus_bit(k, j), full_mask(second)};
    }
    for (int i = 1; i <= l.p; ++i) {
      Mv snd = (d == 0) ? Mv::gen_plus(second, i) : Mv::gen_minus(second, i);
      imgs[flat_plus(k.p + i)] = tensor_of(vk, snd, tgt);
      Mask sb = (d == 0) ? plus_bit(second, i) : minus_bit(second, i);
      tr[flat_plus(k.p + i)] = Transfer{plus_bit(m, k.p + i), 0, sb};
    }
    for (int j = 1; j <= l.q; ++j) {
      Mv snd = (d == 0) ? Mv::gen_minus(second, j) : Mv::gen_plus(second, j);
      imgs[flat_minus(k.q + j)] = tensor_of(vk, snd, tgt);
      Mask sb = (d == 0) ? minus_bit(second, j) : plus_bit(second, j);
      tr[flat_minus(k.q + j)] = Transfer{minus_bit(m, k.q + j), 0, sb};
    }
    return PhiMor{Morphism(m, tgt, std::move(imgs)), d, std::move(tr)};
  }

  if (d == 1) {
    const Sig tsig{k.p + l.q, k.q + l.p};
    const TAlg tgt = plain_alg(tsig);
    const Mv vk = volume_element(tsig, k);
    const Mask t_ldual = t_negmask(tsig, l.q, l.p);
    for (int i = 1; i <= k.p; ++i) {
      imgs[flat_plus(i)] = embed(Mv::gen_plus(tsig, i), tgt);
      tr[flat_plus(i)] = Transfer{plus_bit(m, i), plus_bit(tsig, i) ^ t_ldual, 0};
    }
    for (int j = 1; j <= k.q; ++j) {
      imgs[flat_minus(j)] = embed(Mv::gen_minus(tsig, j), tgt);
      tr[flat_minus(j)] = Transfer{minus_bit(m, j), minus_bit(tsig, j) ^ t_ldual, 0};
    }
    for (int i = 1; i <= l.p; ++i) {
      imgs[flat_plus(k.p + i)] = embed(vk * Mv::gen_minus(tsig, k.q + i), tgt);
      tr[flat_plus(k.p + i)] = Transfer{plus_bit(m, k.p + i), minus_bit(tsig, k.q + i), 0};
    }
    for (int j = 1; j <= l.q; ++j) {
      imgs[flat_minus(k.q + j)] = embed(vk * Mv::gen_plus(tsig, k.p + j), tgt);
      tr[flat_minus(k.q + j)] = Transfer{minus_bit(m, k.q + j), plus_bit(tsig, k.p + j), 0};
    }
    return PhiMor{Morphism(m, tgt, std::move(imgs)), d, std::move(tr)};
  }

  // d == 3: an endomorphism of C(M).
  const TAlg tgt = plain_alg(m);
  const Mv vk = volume_element(m, k);
  const Mask t_l = t_negmask(m, l.p, l.q);
  for (int i = 1; i <= k.p; ++i) {
    imgs[flat_plus(i)] = embed(Mv::gen_plus(m, i), tgt);
    tr[flat_plus(i)] = Transfer{plus_bit(m, i), plus_bit(m, i) ^ t_l, 0};
  }
  for (int j = 1; j <= k.q; ++j) {
    imgs[flat_minus(j)] = embed(Mv::gen_minus(m, j), tgt);
    tr[flat_minus(j)] = Transfer{minus_bit(m, j), minus_bit(m, j) ^ t_l, 0};
  }
  for (int i = 1; i <= l.p; ++i) {
    imgs[flat_plus(k.p + i)] = embed(vk * Mv::gen_plus(m, k.p + i), tgt);
    tr[flat_plus(k.p + i)] = Transfer{plus_bit(m, k.p + i), plus_bit(m, k.p + i), 0};
  }
  for (int j = 1; j <= l.q; ++j) {
    imgs[flat_minus(k.q + j)] = embed(vk * Mv::gen_minus(m, k.q + j), tgt);
    tr[flat_minus(k.q + j)] = Transfer{minus_bit(m, k.q + j), minus_bit(m, k.q + j), 0};
  }
  return PhiMor{Morphism(m, tgt, std::move(imgs)), d, std::move(tr)};
}

}  // namespace ck

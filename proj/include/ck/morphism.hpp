#pragma once

#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "ck/tensor.hpp"

namespace ck {

// An algebra morphism C(source) -> target, determined by generator images.
// Images must satisfy the defining relations; validate() checks them and
// bijectivity exactly.
class Morphism {
 public:
  Morphism(Sig source, TAlg target, std::vector<TEl> gen_images)
      : source_(source), target_(target), gen_images_(std::move(gen_images)) {
    check_sig(source_);
    if (gen_images_.size() != static_cast<size_t>(source_.n()))
      throw std::invalid_argument("morphism needs one image per generator");
    for (const TEl& g : gen_images_)
      if (!(g.alg == target_))
        throw std::invalid_argument("generator image in wrong target algebra");
  }

  const Sig& source() const { return source_; }
  const TAlg& target() const { return target_; }
  const TEl& gen_image(int flat_index_1based) const {
    return gen_images_.at(static_cast<size_t>(flat_index_1based - 1));
  }
  const std::vector<TEl>& gen_images() const { return gen_images_; }

  // Image of a basis blade; memoized across calls.
  const TEl& apply_blade(Mask m) const {
    ensure_cache();
    TEl& slot = (*cache_)[m];
    std::vector<char>& have = *have_;
    if (!have[m]) {
      if (m == 0) {
        slot = TEl::scalar(target_, 1);
      } else {
        Mask low = m & (~m + 1);
        int idx = std::countr_zero(low);
        slot = gen_images_[static_cast<size_t>(idx)] * apply_blade(m ^ low);
      }
      have[m] = 1;
    }
    return slot;
  }

  TEl apply(const Mv& x) const {
    if (!(x.sig == source_))
      throw std::invalid_argument("morphism applied to element of wrong algebra");
    TEl r(target_);
    for (const auto& [m, c] : x.terms) {
      for (const auto& [k, ci] : apply_blade(m).terms) r.add_term(k, c * ci);
    }
    return r;
  }

  bool monomial() const {
    for (const TEl& g : gen_images_)
      if (!g.single_term()) return false;
    return true;
  }

  // Generator relations: images anticommute pairwise and square to the metric.
  bool check_relations(std::string* why = nullptr) const {
    const int n = source_.n();
    for (int i = 1; i <= n; ++i) {
      TEl gi = gen_image(i);
      TEl sq = gi * gi;
      int metric = (i <= source_.p) ? 1 : -1;
      if (!(sq == TEl::scalar(target_, metric))) {
        if (why) *why = "generator " + std::to_string(i) + " image has wrong square";
        return false;
      }
      for (int j = i + 1; j <= n; ++j) {
        TEl gj = gen_image(j);
        if (!((gi * gj + gj * gi) == TEl(target_))) {
          if (why)
            *why = "generator images " + std::to_string(i) + "," + std::to_string(j) +
                   " do not anticommute";
          return false;
        }
      }
    }
    return true;
  }

  // Exact bijectivity: dimension match plus independence of all blade images.
  bool check_bijective(std::string* why = nullptr) const {
    if (source_.n() != target_.dim_log2()) {
      if (why) *why = "source and target dimensions differ";
      return false;
    }
    const Mask top = full_mask(source_);
    if (monomial()) {
      std::unordered_set<TKey> seen;
      for (Mask m = 0;; ++m) {
        const TEl& im = apply_blade(m);
        if (!im.single_term()) {
          if (why) *why = "blade image vanished";
          return false;
        }
        if (!seen.insert(im.terms.begin()->first).second) {
          if (why) *why = "two blades share an image";
          return false;
        }
        if (m == top) break;
      }
      return true;
    }
    // Sparse Gaussian elimination on blade images.
    std::map<TKey, std::map<TKey, Rat>> pivots;
    for (Mask m = 0;; ++m) {
      std::map<TKey, Rat> row;
      for (const auto& [k, c] : apply_blade(m).terms) row.emplace(k, c);
      while (!row.empty()) {
        auto lead = row.rbegin();
        auto pit = pivots.find(lead->first);
        if (pit == pivots.end()) break;
        Rat factor = lead->second / pit->second.rbegin()->second;
        for (const auto& [k, c] : pit->second) {
          auto [it, inserted] = row.try_emplace(k, -factor * c);
          if (!inserted) {
            it->second -= factor * c;
            if (sgn(it->second) == 0) row.erase(it);
          }
        }
      }
      if (row.empty()) {
        if (why) *why = "blade images are linearly dependent";
        return false;
      }
      pivots.emplace(row.rbegin()->first, std::move(row));
      if (m == top) break;
    }
    return true;
  }

  bool validate(std::string* why = nullptr) const {
    return check_relations(why) && check_bijective(why);
  }

  // Inverse of a bijective monomial morphism with a plain target.
  Morphism monomial_inverse() const {
    if (target_.tensor)
      throw std::invalid_argument("monomial_inverse needs a plain target");
    if (!monomial()) throw std::invalid_argument("morphism is not monomial");
    const Sig tgt = target_.a;
    if (source_.n() != tgt.n())
      throw std::invalid_argument("monomial_inverse needs equal dimensions");
    // Invert the blade-image table on generators of the target.
    std::vector<TEl> inv_images(static_cast<size_t>(tgt.n()), TEl(plain_alg(source_)));
    std::vector<char> found(static_cast<size_t>(tgt.n()), 0);
    const Mask top = full_mask(source_);
    for (Mask m = 0;; ++m) {
      const TEl& im = apply_blade(m);
      if (im.single_term()) {
        TKey k = im.terms.begin()->first;
        Mask tm = tkey_a(k);
        if (blade_deg(tm) == 1) {
          int idx = std::countr_zero(tm);
          const Rat& c = im.terms.begin()->second;
          // image(m) = c * gen  =>  inverse(gen) = (1/c) * blade(m)
          inv_images[static_cast<size_t>(idx)] =
              TEl::blade(plain_alg(source_), m, 0, Rat(1) / c);
          found[static_cast<size_t>(idx)] = 1;
        }
      }
      if (m == top) break;
    }
    for (char f : found)
      if (!f) throw std::logic_error("monomial_inverse: some generator has no preimage");
    return Morphism(tgt, plain_alg(source_), std::move(inv_images));
  }

 private:
  void ensure_cache() const {
    if (!cache_) {
      size_t sz = size_t{1} << source_.n();
      cache_ = std::make_shared<std::vector<TEl>>(sz, TEl(target_));
      have_ = std::make_shared<std::vector<char>>(sz, 0);
    }
  }

  Sig source_;
  TAlg target_;
  std::vector<TEl> gen_images_;
  mutable std::shared_ptr<std::vector<TEl>> cache_;
  mutable std::shared_ptr<std::vector<char>> have_;
};

inline Morphism identity_morphism(Sig s) {
  std::vector<TEl> imgs;
  for (int i = 1; i <= s.n(); ++i)
    imgs.push_back(TEl::blade(plain_alg(s), Mask{1} << (i - 1), 0));
  return Morphism(s, plain_alg(s), std::move(imgs));
}

// The automorphism negating the generators in negmask.
inline Morphism negation_morphism(Sig s, Mask negmask) {
  std::vector<TEl> imgs;
  for (int i = 1; i <= s.n(); ++i) {
    Mask b = Mask{1} << (i - 1);
    imgs.push_back(TEl::blade(plain_alg(s), b, 0, (b & negmask) ? -1 : 1));
  }
  return Morphism(s, plain_alg(s), std::move(imgs));
}

// Reflection tau_v as an algebra automorphism (v anisotropic in E).
inline Morphism reflection_morphism(const Mv& v) {
  Sig s = v.sig;
  std::vector<TEl> imgs;
  for (int i = 1; i <= s.n(); ++i) imgs.push_back(embed(reflect(v, Mv::gen(s, i)), plain_alg(s)));
  return Morphism(s, plain_alg(s), std::move(imgs));
}

// outer o inner, where inner has a plain target equal to outer's source.
inline Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (inner.target().tensor || !(inner.target().a == outer.source()))
    throw std::invalid_argument("compose: morphisms do not chain");
  std::vector<TEl> imgs;
  for (const TEl& g : inner.gen_images()) imgs.push_back(outer.apply(to_mv(g)));
  return Morphism(inner.source(), outer.target(), std::move(imgs));
}

// Does pi send the source automorphism "negate src_neg" to the target
// automorphism "negate (neg_a, neg_b)"? Checked on generators (which
// suffices for homomorphisms) and optionally on extra blades.
inline bool intertwines(const Morphism& pi, Mask src_neg, Mask neg_a, Mask neg_b,
                        const std::vector<Mask>& extra_blades = {}) {
  Sig s = pi.source();
  for (int i = 1; i <= s.n(); ++i) {
    Mv g = Mv::gen(s, i);
    TEl lhs = pi.apply(negate_generators(g, src_neg));
    TEl rhs = negate_generators(pi.apply(g), neg_a, neg_b);
    if (!(lhs == rhs)) return false;
  }
  for (Mask m : extra_blades) {
    Mv b = Mv::blade(s, m);
    TEl lhs = pi.apply(negate_generators(b, src_neg));
    TEl rhs = negate_generators(pi.apply(b), neg_a, neg_b);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// pi(star(x)) == star(pi(x)) on generators and the given sample blades.
inline bool star_compatible(const Morphism& pi, const std::vector<Mask>& samples = {}) {
  Sig s = pi.source();
  for (int i = 1; i <= s.n(); ++i) {
    Mv g = Mv::gen(s, i);
    if (!(pi.apply(star(g)) == star(pi.apply(g)))) return false;
  }
  for (Mask m : samples) {
    Mv b = Mv::blade(s, m);
    if (!(pi.apply(star(b)) == star(pi.apply(b)))) return false;
  }
  return true;
}

}  // namespace ck

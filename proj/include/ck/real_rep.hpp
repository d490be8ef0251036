#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "ck/blade.hpp"
#include "ck/classify.hpp"
#include "ck/multivector.hpp"
#include "ck/qmatrix.hpp"
#include "ck/signature.hpp"

namespace ck {

inline QMat mat2(long a, long b, long c, long d) {
  QMat m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

// 2x2 images of the generators of C(1,1) and C(2,0), and of the product
// v1+ v1- in C(1,1). The latter squares to +1 and anticommutes with both
// generators, which is what makes the tensor recursion below work.
inline QMat psi11_plus() { return mat2(1, 0, 0, -1); }
inline QMat psi11_minus() { return mat2(0, -1, 1, 0); }
inline QMat psi11_even() { return mat2(0, -1, -1, 0); }
inline QMat psi20_second() { return mat2(0, 1, 1, 0); }

// Left multiplication by i, j, k on H with basis 1, i, j, k.
inline QMat quat_left_i() {
  return from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
}
inline QMat quat_left_j() {
  return from_rows({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
}
inline QMat quat_left_k() {
  return from_rows({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
}

// Faithful real matrix representation of C(p,q) of minimal dimension.
// gens[0..p-1] are the images of the plus generators, gens[p..p+q-1] of the
// minus generators, matching the bit order of blade masks.
struct GRep {
  Sig sig;
  CliffordClass cls;
  long dim = 1;
  std::vector<QMat> gens;
};

inline GRep build_real_rep(Sig s) {
  GRep r;
  r.sig = s;
  r.cls = classify_clifford(s);
  const auto base = [&](std::vector<QMat> gens) {
    r.gens = std::move(gens);
    r.dim = r.gens.empty() ? 1 : r.gens.front().rows();
  };
  if (s.p == 0 && s.q == 0) {
    base({});
  } else if (s.p == 1 && s.q == 0) {
    base({psi11_plus()});
  } else if (s.p == 0 && s.q == 1) {
    base({psi11_minus()});
  } else if (s.p == 1 && s.q == 1) {
    base({psi11_plus(), psi11_minus()});
  } else if (s.p == 2 && s.q == 0) {
    base({psi11_plus(), psi20_second()});
  } else if (s.p == 0 && s.q == 2) {
    base({quat_left_i(), quat_left_j()});
  } else if (s.p == 0 && s.q == 3) {
    base({block_diag(quat_left_i(), quat_left_i()),
          block_diag(quat_left_j(), quat_left_j()),
          block_diag(quat_left_k(), -quat_left_k())});
  } else if (s.p >= 1 && s.q >= 1) {
    // C(p,q) = C(1,1) (x) C(p-1,q-1), with the inner generators dressed by
    // the even product of the first factor to restore anticommutation.
    const GRep inner = build_real_rep(Sig{s.p - 1, s.q - 1});
    const QMat eye = QMat::identity(inner.dim);
    std::vector<QMat> gens;
    gens.reserve(s.n());
    gens.push_back(kron(psi11_plus(), eye));
    for (unsigned i = 0; i + 1 < s.p; ++i) gens.push_back(kron(psi11_even(), inner.gens[i]));
    gens.push_back(kron(psi11_minus(), eye));
    for (unsigned i = 0; i + 1 < s.q; ++i)
      gens.push_back(kron(psi11_even(), inner.gens[s.p - 1 + i]));
    base(std::move(gens));
  } else if (s.q == 0) {
    // C(p,0) embeds in C(1,p-1): v1+ goes to the plus generator w, and the
    // remaining plus generators to the products w * (minus generator).
    const GRep inner = build_real_rep(Sig{1, s.p - 1});
    std::vector<QMat> gens;
    gens.reserve(s.p);
    gens.push_back(inner.gens[0]);
    for (unsigned i = 1; i < s.p; ++i) gens.push_back(inner.gens[0] * inner.gens[i]);
    base(std::move(gens));
  } else {
    // C(0,q) embeds in C(q-3,3): the first three minus generators map
    // straight across, the rest to (product of those three) * (plus gen).
    const GRep inner = build_real_rep(Sig{s.q - 3, 3});
    const QMat w = inner.gens[s.q - 3] * inner.gens[s.q - 2] * inner.gens[s.q - 1];
    std::vector<QMat> gens;
    gens.reserve(s.q);
    for (unsigned j = 0; j < 3; ++j) gens.push_back(inner.gens[s.q - 3 + j]);
    for (unsigned i = 0; i + 3 < s.q; ++i) gens.push_back(w * inner.gens[i]);
    base(std::move(gens));
  }
  return r;
}

// Image of a basis blade: the generator images multiplied in ascending
// generator order.
inline QMat rep_blade(const GRep& r, Mask m) {
  QMat out = QMat::identity(r.dim);
  for (unsigned i = 0; i < r.sig.n(); ++i)
    if (m & (Mask{1} << i)) out = out * r.gens[i];
  return out;
}

inline QMat rep_apply(const GRep& r, const Mv& a) {
  if (!(a.sig == r.sig)) throw std::invalid_argument("element from a different algebra");
  QMat out(r.dim, r.dim);
  for (const auto& [m, c] : a.terms) out = out + c * rep_blade(r, m);
  return out;
}

// Signed permutation matrix in compressed form: column c holds sgn[c] in row
// row[c]. Everything the representation produces has this shape, which makes
// exhaustive blade-trace scans cheap.
struct SPerm {
  std::vector<long> row;
  std::vector<int> sgn;

  long dim() const { return static_cast<long>(row.size()); }
};

inline SPerm sperm_identity(long n) {
  SPerm s;
  s.row.resize(static_cast<std::size_t>(n));
  s.sgn.assign(static_cast<std::size_t>(n), 1);
  for (long i = 0; i < n; ++i) s.row[static_cast<std::size_t>(i)] = i;
  return s;
}

inline SPerm sperm_of(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("signed permutation must be square");
  SPerm s;
  s.row.assign(static_cast<std::size_t>(m.cols()), -1);
  s.sgn.assign(static_cast<std::size_t>(m.cols()), 0);
  std::vector<bool> used(static_cast<std::size_t>(m.rows()), false);
  for (long c = 0; c < m.cols(); ++c)
    for (long r = 0; r < m.rows(); ++r) {
      const Rat& v = m.at(r, c);
      if (sgn(v) == 0) continue;
      if (s.sgn[static_cast<std::size_t>(c)] != 0 || used[static_cast<std::size_t>(r)] ||
          (v != 1 && v != -1))
        throw std::domain_error("matrix is not a signed permutation");
      s.row[static_cast<std::size_t>(c)] = r;
      s.sgn[static_cast<std::size_t>(c)] = sgn(v) > 0 ? 1 : -1;
      used[static_cast<std::size_t>(r)] = true;
    }
  for (int g : s.sgn)
    if (g == 0) throw std::domain_error("matrix is not a signed permutation");
  return s;
}

// Matrix product a*b of signed permutations.
inline SPerm sperm_mul(const SPerm& a, const SPerm& b) {
  SPerm out;
  const std::size_t n = b.row.size();
  out.row.resize(n);
  out.sgn.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t mid = static_cast<std::size_t>(b.row[c]);
    out.row[c] = a.row[mid];
    out.sgn[c] = a.sgn[mid] * b.sgn[c];
  }
  return out;
}

inline long sperm_trace(const SPerm& s) {
  long t = 0;
  for (std::size_t c = 0; c < s.row.size(); ++c)
    if (s.row[c] == static_cast<long>(c)) t += s.sgn[c];
  return t;
}

namespace detail {

inline bool traces_vanish_from(const GRep& r, const std::vector<SPerm>& gens, unsigned idx,
                               const SPerm& cur, bool nonempty) {
  if (nonempty && sperm_trace(cur) != 0) return false;
  for (unsigned i = idx; i < gens.size(); ++i)
    if (!traces_vanish_from(r, gens, i + 1, sperm_mul(cur, gens[i]), true)) return false;
  return true;
}

}  // namespace detail

// Certificate of faithfulness: if tr R(b) = 0 for every nonzero blade mask b,
// the Gram matrix of the blade images under (X,Y) -> tr(XY) is diagonal with
// nonzero diagonal (blades multiply to blades and invert to themselves up to
// sign), so the images are linearly independent.
inline bool rep_blade_traces_vanish(const GRep& r) {
  std::vector<SPerm> gens;
  gens.reserve(r.gens.size());
  for (const QMat& g : r.gens) gens.push_back(sperm_of(g));
  return detail::traces_vanish_from(r, gens, 0, sperm_identity(r.dim), false);
}

// Direct linear-independence oracle for small signatures: stack the blade
// images as vectors and compute the exact rank.
inline long rep_span_rank(const GRep& r) {
  const long nblades = 1L << r.sig.n();
  QMat stack(nblades, r.dim * r.dim);
  for (long m = 0; m < nblades; ++m) {
    const QMat img = rep_blade(r, static_cast<Mask>(m));
    for (long i = 0; i < r.dim; ++i)
      for (long j = 0; j < r.dim; ++j) stack.at(m, i * r.dim + j) = img.at(i, j);
  }
  return rank(std::move(stack));
}

inline bool rep_check_relations(const GRep& r) {
  const QMat eye = QMat::identity(r.dim);
  for (unsigned i = 0; i < r.sig.n(); ++i) {
    const QMat sq = r.gens[i] * r.gens[i];
    if (!(sq == (i < r.sig.p ? eye : -eye))) return false;
    for (unsigned j = i + 1; j < r.sig.n(); ++j)
      if (!((r.gens[i] * r.gens[j] + r.gens[j] * r.gens[i]).is_zero())) return false;
  }
  return true;
}

// Plus generators land on symmetric matrices and minus generators on skew
// ones, so transposition realizes the star anti-automorphism.
inline bool rep_transpose_is_star(const GRep& r) {
  for (unsigned i = 0; i < r.sig.n(); ++i) {
    const QMat t = r.gens[i].transposed();
    if (!(t == (i < r.sig.p ? r.gens[i] : -r.gens[i]))) return false;
  }
  return true;
}

}  // namespace ck

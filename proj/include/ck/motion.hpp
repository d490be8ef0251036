#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ck/cones.hpp"
#include "ck/groups.hpp"
#include "ck/hurwitz.hpp"
#include "ck/qmatrix.hpp"

namespace ck {

inline bool is_orthogonal(const QMat& k) {
  return k.rows() == k.cols() && k.transposed() * k == QMat::identity(k.rows());
}

// Element (k, v) of the Euclidean motion group O(n) |x R^n acting by
// x -> kx + v, with k exactly orthogonal over Q.
struct MotionElement {
  QMat k;
  std::vector<Rat> v;

  long n() const { return k.rows(); }

  friend bool operator==(const MotionElement& a, const MotionElement& b) {
    return a.k == b.k && a.v == b.v;
  }
};

inline MotionElement motion(QMat k, std::vector<Rat> v) {
  if (!is_orthogonal(k)) throw std::invalid_argument("motion rotation part is not orthogonal");
  if (static_cast<long>(v.size()) != k.rows())
    throw std::invalid_argument("motion translation length mismatch");
  return {std::move(k), std::move(v)};
}

inline MotionElement motion_identity(long n) {
  return {QMat::identity(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0))};
}

inline std::vector<Rat> motion_apply(const MotionElement& g, const std::vector<Rat>& x) {
  if (static_cast<long>(x.size()) != g.n())
    throw std::invalid_argument("motion applied to vector of wrong length");
  std::vector<Rat> y = g.v;
  for (long r = 0; r < g.n(); ++r)
    for (long c = 0; c < g.n(); ++c) y[static_cast<std::size_t>(r)] += g.k.at(r, c) * x[static_cast<std::size_t>(c)];
  return y;
}

inline MotionElement motion_mul(const MotionElement& a, const MotionElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("motion dimension mismatch");
  return {a.k * b.k, motion_apply(a, b.v)};
}

// Homogeneous (n+1)x(n+1) matrix [[k, v], [0, 1]] of the affine action.
inline QMat affine_matrix(const MotionElement& g) {
  const long n = g.n();
  QMat m(n + 1, n + 1);
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) m.at(r, c) = g.k.at(r, c);
    m.at(r, n) = g.v[static_cast<std::size_t>(r)];
  }
  m.at(n, n) = 1;
  return m;
}

// Splits g = s * w = w * s with s = (k, v2) elliptic (bounded powers) and
// w = (I, v1) a translation along the rotation axis: v1 is the orthogonal
// projection of v onto ker(k - I), which is defined over Q because k is.
inline std::pair<MotionElement, MotionElement> jordan_decompose_motion(const MotionElement& g) {
  if (!is_orthogonal(g.k)) throw std::invalid_argument("motion rotation part is not orthogonal");
  const long n = g.n();
  const QMat fixed = null_space(g.k - QMat::identity(n));  // rows span ker(k - I)
  std::vector<Rat> v1(static_cast<std::size_t>(n), Rat(0));
  if (fixed.rows() > 0) {
    QMat col(n, 1);
    for (long r = 0; r < n; ++r) col.at(r, 0) = g.v[static_cast<std::size_t>(r)];
    const QMat proj =
        fixed.transposed() * inverse(fixed * fixed.transposed()) * (fixed * col);
    for (long r = 0; r < n; ++r) v1[static_cast<std::size_t>(r)] = proj.at(r, 0);
  }
  std::vector<Rat> v2(static_cast<std::size_t>(n));
  for (long r = 0; r < n; ++r) v2[static_cast<std::size_t>(r)] = g.v[static_cast<std::size_t>(r)] - v1[static_cast<std::size_t>(r)];
  return {MotionElement{g.k, std::move(v2)},
          MotionElement{QMat::identity(n), std::move(v1)}};
}

// Cartan cone of the subgroup of motions built from a tangential bilinear
// subspace W of q x p1 matrices, in the diagonal-profile space of dimension
// min(q, p1). Norm-multiplicative W forces every nonzero element to have all
// singular values equal, so the cone is the signed-permutation orbit of the
// line R(1,...,1). Subspaces without that structure are not handled here;
// properness for them goes through check_W_proper.
inline ConeSet motion_cone_a(const BilinearSubspace& w) {
  const long ambient = std::min(w.q, w.p1);
  if (w.basis.empty() || w.p1 == 0 || w.q == 0) return cone_zero(ambient);
  for (std::size_t a = 0; a < w.basis.size(); ++a)
    for (std::size_t b = a; b < w.basis.size(); ++b) {
      const QMat prod = w.basis[a].transposed() * w.basis[b] +
                        w.basis[b].transposed() * w.basis[a];
      const QMat want = (a == b ? frac(2) : frac(0)) * QMat::identity(w.p1);
      if (!(prod == want))
        throw unsupported_error(
            "subspace is not norm-multiplicative; use check_W_proper for properness");
    }
  return cone_line(ambient, std::vector<Rat>(static_cast<std::size_t>(ambient), Rat(1)),
                   WeylKind::BC);
}

}  // namespace ck

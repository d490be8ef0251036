#pragma once

#include <algorithm>
#include <deque>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ck/qmatrix.hpp"

namespace ck {

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Which Weyl group acts on the ambient coordinates: BC = signed permutations,
// A = permutations, D = evenly-signed permutations, None = no symmetry.
enum class WeylKind { BC, A, D, None };

inline std::string weyl_name(WeylKind w) {
  switch (w) {
    case WeylKind::BC: return "BC";
    case WeylKind::A: return "A";
    case WeylKind::D: return "D";
    case WeylKind::None: return "none";
  }
  return "none";
}

inline WeylKind weyl_from_name(const std::string& s) {
  if (s == "BC") return WeylKind::BC;
  if (s == "A") return WeylKind::A;
  if (s == "D") return WeylKind::D;
  if (s == "none") return WeylKind::None;
  throw std::invalid_argument("unknown Weyl kind: " + s);
}

namespace detail {

inline std::string span_key(const QMat& m) {
  std::string key = std::to_string(m.rows()) + ";";
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c) key += rat_str(m.at(r, c)) + ",";
  return key;
}

// Orbit of the given canonical spans under the Weyl generators: adjacent
// coordinate swaps, plus a final-coordinate sign flip (BC) or a sign flip on
// the last two coordinates (D).
inline std::vector<QMat> weyl_orbit(const std::vector<QMat>& seeds, long ambient,
                                    WeylKind weyl) {
  constexpr long kMaxOrbit = 200000;
  std::vector<QMat> out;
  std::set<std::string> seen;
  std::deque<const QMat*> queue;
  const auto push = [&](QMat m) {
    if (m.rows() == 0) return;  // the zero subspace contributes no component
    if (!seen.insert(span_key(m)).second) return;
    out.push_back(std::move(m));
    if (static_cast<long>(out.size()) > kMaxOrbit)
      throw resource_error("cone orbit exceeds expansion bound");
  };
  for (const QMat& s : seeds) push(rref(s));
  for (std::size_t head = 0; head < out.size(); ++head) {
    const QMat cur = out[head];  // copy: out may reallocate
    const auto apply = [&](auto&& col_map) {
      QMat img(cur.rows(), ambient);
      for (long r = 0; r < cur.rows(); ++r)
        for (long c = 0; c < ambient; ++c) col_map(img, cur, r, c);
      push(rref(img));
    };
    if (weyl == WeylKind::None) continue;
    for (long i = 0; i + 1 < ambient; ++i)
      apply([i](QMat& img, const QMat& src, long r, long c) {
        const long from = c == i ? i + 1 : c == i + 1 ? i : c;
        img.at(r, c) = src.at(r, from);
      });
    if (weyl == WeylKind::BC && ambient >= 1)
      apply([ambient](QMat& img, const QMat& src, long r, long c) {
        img.at(r, c) = c == ambient - 1 ? -src.at(r, c) : src.at(r, c);
      });
    if (weyl == WeylKind::D && ambient >= 2)
      apply([ambient](QMat& img, const QMat& src, long r, long c) {
        img.at(r, c) = c >= ambient - 2 ? -src.at(r, c) : src.at(r, c);
      });
  }
  return out;
}

}  // namespace detail

// A finite union of linear subspaces of Q^ambient, closed under the stated
// Weyl group once expanded. components hold spanning rows; the zero cone has
// no components. Expansion is computed once and shared (immutable after
// build, safe for concurrent reads of the same expanded vector).
struct ConeSet {
  long ambient = 0;
  WeylKind weyl = WeylKind::None;
  std::vector<QMat> components;

  ConeSet() = default;
  ConeSet(long amb, WeylKind w, std::vector<QMat> comps)
      : ambient(amb), weyl(w), components(std::move(comps)) {
    for (const QMat& m : components)
      if (m.cols() != ambient) throw std::invalid_argument("cone component ambient mismatch");
  }

  const std::vector<QMat>& expanded() const {
    if (!expanded_)
      expanded_ = std::make_shared<const std::vector<QMat>>(
          detail::weyl_orbit(components, ambient, weyl));
    return *expanded_;
  }

 private:
  mutable std::shared_ptr<const std::vector<QMat>> expanded_;
};

inline ConeSet cone_zero(long ambient) { return ConeSet(ambient, WeylKind::None, {}); }

inline ConeSet cone_full(long ambient) {
  return ConeSet(ambient, WeylKind::None, {QMat::identity(ambient)});
}

inline ConeSet cone_line(long ambient, const std::vector<Rat>& dir,
                         WeylKind weyl = WeylKind::BC) {
  if (static_cast<long>(dir.size()) != ambient)
    throw std::invalid_argument("cone_line direction has wrong length");
  return ConeSet(ambient, weyl, {from_rows({dir})});
}

// Union of all coordinate subspaces of the given dimension.
inline ConeSet coordinate_cone(long ambient, long dim) {
  if (dim < 0 || dim > ambient) throw std::invalid_argument("coordinate_cone dimension");
  if (dim == 0) return cone_zero(ambient);
  std::vector<QMat> comps;
  std::vector<long> idx(dim);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    QMat m(dim, ambient);
    for (long r = 0; r < dim; ++r) m.at(r, idx[r]) = 1;
    comps.push_back(std::move(m));
    long i = dim - 1;
    while (i >= 0 && idx[i] == ambient - dim + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (long j = i + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
  }
  return ConeSet(ambient, WeylKind::BC, std::move(comps));
}

// Cartan-projection cone of O(r,s) embedded in O(p,q) standardly: the union
// of all min(r,s)-dimensional coordinate subspaces of the rank-min(p,q)
// ambient space. Compact subgroups (min(r,s)=0) give the zero cone.
inline ConeSet cone_a_of_orthogonal_subgroup(long r, long s, long p, long q) {
  if (r < 0 || s < 0 || r > p || s > q)
    throw std::invalid_argument("orthogonal subgroup signature does not embed");
  return coordinate_cone(std::min(p, q), std::min(r, s));
}

inline bool subspace_contained(const QMat& x, const QMat& y) {
  if (x.rows() == 0) return true;
  return rank(vstack(y, x)) == y.rows();
}

// A pair of subspaces meets only at 0 iff their spans stack to full combined
// rank; a cone pair is properly disjoint iff every cross pair does.
inline bool cones_properly_disjoint(const ConeSet& a, const ConeSet& b) {
  if (a.ambient != b.ambient) throw std::domain_error("cone ambient mismatch");
  for (const QMat& x : a.expanded())
    for (const QMat& y : b.expanded())
      if (rank(vstack(x, y)) != x.rows() + y.rows()) return false;
  return true;
}

inline bool cone_contained(const ConeSet& a, const ConeSet& b) {
  if (a.ambient != b.ambient) throw std::domain_error("cone ambient mismatch");
  for (const QMat& x : a.expanded()) {
    bool inside = false;
    for (const QMat& y : b.expanded())
      if (subspace_contained(x, y)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

inline bool cones_similar(const ConeSet& a, const ConeSet& b) {
  return cone_contained(a, b) && cone_contained(b, a);
}

// ---------------------------------------------------------------------------
// Longest-element fixed spaces and the Weyl containment obstruction.

enum class RootType { A, B, C, D };

inline long root_ambient(RootType t, long n) { return t == RootType::A ? n + 1 : n; }

// Span of {X in the Cartan space : w0 X = -X} for the longest Weyl element
// w0. Types B, C and even D have w0 = -1, so the span is everything; odd D
// fixes the last coordinate; type A_n pairs coordinate i with n+2-i.
inline QMat b_plus(RootType t, long n) {
  if (n < 1) throw std::invalid_argument("root system rank must be positive");
  const long amb = root_ambient(t, n);
  if (t == RootType::A) {
    QMat m((amb) / 2, amb);
    for (long i = 0; i < m.rows(); ++i) {
      m.at(i, i) = 1;
      m.at(i, amb - 1 - i) = -1;
    }
    return m;
  }
  if (t == RootType::D && n % 2 == 1) {
    QMat m(n - 1, n);
    for (long i = 0; i < n - 1; ++i) m.at(i, i) = 1;
    return m;
  }
  return QMat::identity(amb);
}

// True iff b_plus lands inside w * (some component of aH) for some Weyl
// element w: the containment certificate that rules out compact quotients.
inline bool benoist_obstruction(RootType t, long n, const ConeSet& aH) {
  if (n > 9) throw resource_error("Weyl enumeration bound is rank 9");
  const long amb = root_ambient(t, n);
  if (aH.ambient != amb) throw std::domain_error("cone ambient mismatch");
  const QMat bp = b_plus(t, n);
  if (bp.rows() == amb) {  // w images of a full span stay full
    for (const QMat& comp : aH.expanded())
      if (comp.rows() == amb) return true;
    return false;
  }
  for (const QMat& comp : aH.expanded()) {
    if (comp.rows() < bp.rows()) continue;
    std::vector<long> perm(amb);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const long nsigns = t == RootType::A ? 1 : 1L << amb;
      for (long mask = 0; mask < nsigns; ++mask) {
        if (t == RootType::D && __builtin_popcountll(mask) % 2 != 0) continue;
        QMat img(bp.rows(), amb);
        for (long r = 0; r < bp.rows(); ++r)
          for (long c = 0; c < amb; ++c)
            img.at(r, c) = (mask >> c) & 1 ? -bp.at(r, perm[c]) : bp.at(r, perm[c]);
        if (subspace_contained(img, comp)) return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

}  // namespace ck

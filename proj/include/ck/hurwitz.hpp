#pragma once

#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ck/qmatrix.hpp"
#include "ck/real_rep.hpp"
#include "ck/signature.hpp"

// Hurwitz-Radon theory. For a pair (p,q) the following seven conditions are
// equivalent, and everything in this header is one of their constructive
// sides:
//   (i)   the tangential symmetric space of O(p+1,q)/O(p,q) has a compact
//         Clifford-Klein form;
//   (ii)  a bilinear map f: R^{p+1} x R^q -> R^q without zero divisors;
//   (iii) a norm-multiplicative bilinear map |f(v,w)| = |v||w|;
//   (iv)  an injective linear map R^p -> M(q,R) landing in the skew scalar
//         multiples of orthogonal matrices;
//   (v)   an identity (x_1^2+..+x_{p+1}^2)(y_1^2+..+y_q^2) = z_1^2+..+z_q^2
//         with each z_k bilinear in x and y;
//   (vi)  p vector fields on S^{q-1} linearly independent at every point;
//   (vii) p < rho(q), the Hurwitz-Radon number.
// Existence is decided through the numerical bound (vii); non-existence
// errors cite the failing condition by that numbering.
namespace ck {

struct existence_error : std::domain_error {
  using std::domain_error::domain_error;
};

// q = u * 2^(4*alpha+beta) with u odd and 0 <= beta <= 3; rho = 8*alpha+2^beta.
struct HurwitzDecomposition {
  long q = 1;
  long u = 1;
  long alpha = 0;
  long beta = 0;
  long rho = 1;
};

inline HurwitzDecomposition hurwitz_decompose(long q) {
  if (q <= 0) throw std::invalid_argument("hurwitz decomposition needs q >= 1");
  HurwitzDecomposition d;
  d.q = q;
  long k = 0;
  d.u = q;
  while (d.u % 2 == 0) {
    d.u /= 2;
    ++k;
  }
  d.alpha = k / 4;
  d.beta = k % 4;
  d.rho = 8 * d.alpha + (1L << d.beta);
  return d;
}

// Hurwitz-Radon number; empty means infinite (q = 0).
inline std::optional<long> rho(long q) {
  if (q < 0) throw std::invalid_argument("rho of a negative integer");
  if (q == 0) return std::nullopt;
  return hurwitz_decompose(q).rho;
}

// A family A_0 = I, A_1, .., A_{p-1} of exact integer q x q matrices with
// Ai^T Aj + Aj^T Ai = 2 delta_ij I; f(v,w) = sum v_i A_i w is then a
// norm-multiplicative orthogonal multiplication R^p x R^q -> R^q.
struct OrthoMult {
  long p = 0;
  long q = 0;
  std::vector<QMat> matrices;
};

inline bool check_hurwitz_identities(const std::vector<QMat>& mats) {
  if (mats.empty()) return true;
  const QMat eye = QMat::identity(mats.front().rows());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (!(mats[i].transposed() * mats[i] == eye)) return false;
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (!((mats[i].transposed() * mats[j] + mats[j].transposed() * mats[i]).is_zero()))
        return false;
  }
  return true;
}

// Maximal family: p = rho(q). The skew part comes from the minus generators
// of a Clifford representation chosen by the 2-adic type of q, topped off by
// the minus volume element when that still anticommutes; the odd part of q
// is handled by inflating with an identity block. The construction is
// re-verified against the defining identities before it is returned.
inline OrthoMult build_orthogonal_multiplication(long q) {
  const HurwitzDecomposition d = hurwitz_decompose(q);
  const long q2 = q / d.u;
  const int r = d.beta == 3 ? 0 : static_cast<int>(d.beta);
  const int s = static_cast<int>(8 * d.alpha + (d.beta == 3 ? 6 : d.beta));
  const Sig sig{r, s};
  const GRep rep = build_real_rep(sig);
  if (rep.dim != q2)
    throw std::logic_error("orthogonal multiplication: representation dimension mismatch");

  std::vector<QMat> skew;
  for (unsigned i = 0; i < s; ++i) skew.push_back(rep.gens[r + i]);
  if (d.beta >= 2) skew.push_back(rep_blade(rep, minus_mask(sig)));
  if (static_cast<long>(skew.size()) != d.rho - 1)
    throw std::logic_error("orthogonal multiplication: wrong family size");

  OrthoMult m;
  m.p = d.rho;
  m.q = q;
  m.matrices.push_back(QMat::identity(q));
  const QMat pad = QMat::identity(d.u);
  for (const QMat& x : skew) m.matrices.push_back(d.u == 1 ? x : kron(x, pad));
  if (!check_hurwitz_identities(m.matrices))
    throw std::logic_error("orthogonal multiplication: defining identities failed");
  return m;
}

// Condition (iii): norm-multiplicative bilinear map with p1 slots.
// Exists exactly when p1 <= rho(q), i.e. condition (vii) for p = p1 - 1.
struct BilinearMap {
  long p1 = 0;
  long q = 0;
  std::vector<QMat> matrices;
};

inline BilinearMap bilinear_map(long p1, long q) {
  if (p1 < 1 || q < 1) throw std::invalid_argument("bilinear map needs p1, q >= 1");
  const long bound = *rho(q);
  if (p1 > bound)
    throw existence_error("condition (vii) fails: p = " + std::to_string(p1 - 1) +
                          " is not below rho(" + std::to_string(q) + ") = " +
                          std::to_string(bound) + "; no such bilinear map exists");
  OrthoMult m = build_orthogonal_multiplication(q);
  m.matrices.resize(static_cast<std::size_t>(p1), QMat());
  return BilinearMap{p1, q, std::move(m.matrices)};
}

inline std::vector<Rat> bilinear_eval(const BilinearMap& f, const std::vector<Rat>& x,
                                      const std::vector<Rat>& y) {
  if (static_cast<long>(x.size()) != f.p1 || static_cast<long>(y.size()) != f.q)
    throw std::invalid_argument("bilinear map argument dimension mismatch");
  std::vector<Rat> z(static_cast<std::size_t>(f.q));
  for (long i = 0; i < f.p1; ++i) {
    if (sgn(x[static_cast<std::size_t>(i)]) == 0) continue;
    const QMat& a = f.matrices[static_cast<std::size_t>(i)];
    for (long k = 0; k < f.q; ++k)
      for (long j = 0; j < f.q; ++j) {
        const Rat& v = a.at(k, j);
        if (sgn(v) != 0)
          z[static_cast<std::size_t>(k)] +=
              x[static_cast<std::size_t>(i)] * v * y[static_cast<std::size_t>(j)];
      }
  }
  return z;
}

// Condition (v): the coefficients of the bilinear functions z_k, together
// with an exact expansion check of the identity.
struct SosCertificate {
  long p1 = 0;
  long q = 0;
  std::vector<QMat> z;  // z[k].at(i,j) is the coefficient of x_{i+1} y_{j+1} in z_{k+1}
};

inline bool verify_sum_of_squares(const SosCertificate& c) {
  using Key = std::array<long, 4>;
  std::map<Key, Rat> lhs, rhs;
  for (long i = 0; i < c.p1; ++i)
    for (long j = 0; j < c.q; ++j) lhs[{i, i, j, j}] += 1;
  for (const QMat& zk : c.z)
    for (long i1 = 0; i1 < c.p1; ++i1)
      for (long j1 = 0; j1 < c.q; ++j1) {
        const Rat& a = zk.at(i1, j1);
        if (sgn(a) == 0) continue;
        for (long i2 = 0; i2 < c.p1; ++i2)
          for (long j2 = 0; j2 < c.q; ++j2) {
            const Rat& b = zk.at(i2, j2);
            if (sgn(b) == 0) continue;
            rhs[{std::min(i1, i2), std::max(i1, i2), std::min(j1, j2), std::max(j1, j2)}] +=
                a * b;
          }
      }
  for (auto it = rhs.begin(); it != rhs.end();) {
    if (sgn(it->second) == 0)
      it = rhs.erase(it);
    else
      ++it;
  }
  return lhs == rhs;
}

inline SosCertificate sum_of_squares_identity(long p1, long q) {
  const BilinearMap f = bilinear_map(p1, q);
  SosCertificate c;
  c.p1 = p1;
  c.q = q;
  for (long k = 0; k < q; ++k) {
    QMat zk(p1, q);
    for (long i = 0; i < p1; ++i)
      for (long j = 0; j < q; ++j) zk.at(i, j) = f.matrices[static_cast<std::size_t>(i)].at(k, j);
    c.z.push_back(std::move(zk));
  }
  if (!verify_sum_of_squares(c))
    throw std::logic_error("sum of squares certificate failed to verify");
  return c;
}

inline std::string sos_text(const SosCertificate& c) {
  std::string out;
  const auto var = [](const char* name, long idx) {
    return std::string(name) + std::to_string(idx + 1);
  };
  for (long k = 0; k < c.q; ++k) {
    out += "z" + std::to_string(k + 1) + " =";
    bool first = true;
    for (long i = 0; i < c.p1; ++i)
      for (long j = 0; j < c.q; ++j) {
        const Rat& v = c.z[static_cast<std::size_t>(k)].at(i, j);
        if (sgn(v) == 0) continue;
        const std::string mono = var("x", i) + "*" + var("y", j);
        if (v == 1)
          out += first ? " " + mono : " + " + mono;
        else if (v == -1)
          out += first ? " -" + mono : " - " + mono;
        else
          out += (first ? " " : " + ") + std::string("(") + rat_str(v) + ")*" + mono;
        first = false;
      }
    if (first) out += " 0";
    out += "\n";
  }
  out += "(x1^2+..+x" + std::to_string(c.p1) + "^2)*(y1^2+..+y" + std::to_string(c.q) +
         "^2) = z1^2+..+z" + std::to_string(c.q) + "^2\n";
  return out;
}

// Condition (vi): p tangent vector fields on S^{q-1}, linearly independent at
// every point, evaluated exactly at rational sphere points.
struct SphereVectorFields {
  long q = 0;
  long p = 0;
  std::vector<QMat> matrices;  // A_0 .. A_p of an orthogonal multiplication

  // Tangent vectors Z_1(w), .., Z_p(w) with Z_i = t_i - <t_i,w> w and
  // t_i(w) = A_0^{-1} A_i w. Requires |w| = 1 exactly.
  std::vector<std::vector<Rat>> evaluate(const std::vector<Rat>& w) const {
    if (static_cast<long>(w.size()) != q)
      throw std::invalid_argument("sphere point dimension mismatch");
    Rat norm2 = 0;
    for (const Rat& x : w) norm2 += x * x;
    if (norm2 != 1) throw std::invalid_argument("not a unit vector");
    const QMat ginv = inverse(matrices.front());
    std::vector<std::vector<Rat>> out;
    for (long i = 1; i <= p; ++i) {
      const QMat& a = matrices[static_cast<std::size_t>(i)];
      std::vector<Rat> t(static_cast<std::size_t>(q));
      for (long r = 0; r < q; ++r) {
        Rat acc = 0;
        for (long c = 0; c < q; ++c) acc += a.at(r, c) * w[static_cast<std::size_t>(c)];
        t[static_cast<std::size_t>(r)] = acc;
      }
      std::vector<Rat> gt(static_cast<std::size_t>(q));
      for (long r = 0; r < q; ++r) {
        Rat acc = 0;
        for (long c = 0; c < q; ++c) acc += ginv.at(r, c) * t[static_cast<std::size_t>(c)];
        gt[static_cast<std::size_t>(r)] = acc;
      }
      Rat inner = 0;
      for (long r = 0; r < q; ++r) inner += gt[static_cast<std::size_t>(r)] * w[static_cast<std::size_t>(r)];
      for (long r = 0; r < q; ++r) gt[static_cast<std::size_t>(r)] -= inner * w[static_cast<std::size_t>(r)];
      out.push_back(std::move(gt));
    }
    return out;
  }

  // True iff {w, Z_1(w), .., Z_p(w)} has nonsingular Gram matrix.
  bool independent_at(const std::vector<Rat>& w) const {
    const auto fields = evaluate(w);
    QMat m(p + 1, q);
    for (long c = 0; c < q; ++c) m.at(0, c) = w[static_cast<std::size_t>(c)];
    for (long i = 0; i < p; ++i)
      for (long c = 0; c < q; ++c)
        m.at(i + 1, c) = fields[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
    return sgn(det(m * m.transposed())) != 0;
  }
};

inline SphereVectorFields vector_fields_on_sphere(long q, long p) {
  if (q < 1 || p < 0) throw std::invalid_argument("vector fields need q >= 1, p >= 0");
  const long bound = *rho(q);
  if (p >= bound)
    throw existence_error("condition (vi) fails via the Adams bound: p = " + std::to_string(p) +
                          " >= rho(" + std::to_string(q) + ") = " + std::to_string(bound) +
                          ", so p independent fields on the sphere cannot exist");
  OrthoMult m = build_orthogonal_multiplication(q);
  m.matrices.resize(static_cast<std::size_t>(p + 1), QMat());
  return SphereVectorFields{q, p, std::move(m.matrices)};
}

// Exact point on S^{q-1}: reflect e_1 across the hyperplane orthogonal to a
// random nonzero integer vector; the result is rational with |w| = 1.
inline std::vector<Rat> rational_sphere_point(long q, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> pick(-9, 9);
  std::vector<Rat> z(static_cast<std::size_t>(q));
  Rat norm2 = 0;
  while (sgn(norm2) == 0) {
    for (auto& x : z) x = frac(pick(rng));
    norm2 = 0;
    for (const Rat& x : z) norm2 += x * x;
  }
  std::vector<Rat> w(static_cast<std::size_t>(q));
  const Rat f = 2 * z[0] / norm2;
  for (long i = 0; i < q; ++i) w[static_cast<std::size_t>(i)] = -f * z[static_cast<std::size_t>(i)];
  w[0] += 1;
  return w;
}

// The subspace W = image of ftilde: R^q -> M(q, p1), w -> [A_0 w | .. | A_p w].
struct BilinearSubspace {
  long q = 0;
  long p1 = 0;
  std::vector<QMat> basis;  // basis[j] = ftilde(e_{j+1}), a q x p1 matrix
};

inline BilinearSubspace subspace_from_bilinear(const BilinearMap& f) {
  if (f.matrices.size() != static_cast<std::size_t>(f.p1))
    throw std::invalid_argument("bilinear map matrix count mismatch");
  for (const QMat& a : f.matrices)
    if (a.rows() != f.q || a.cols() != f.q)
      throw std::invalid_argument("bilinear map matrix shape mismatch");
  BilinearSubspace w;
  w.q = f.q;
  w.p1 = f.p1;
  for (long j = 0; j < f.q; ++j) {
    QMat b(f.q, f.p1);
    for (long i = 0; i < f.p1; ++i)
      for (long r = 0; r < f.q; ++r) b.at(r, i) = f.matrices[static_cast<std::size_t>(i)].at(r, j);
    w.basis.push_back(std::move(b));
  }
  return w;
}

// True iff W is q-dimensional and every nonzero element of W acts injectively
// on R^{p1}. When the generating family satisfies the polarized Hurwitz
// identities this holds exactly (ftilde(w)^T ftilde(w) = |w|^2 I as a
// polynomial identity); otherwise random combinations are sampled for a
// kernel, which can only ever refute, so a true answer on that fallback path
// means "no kernel found".
inline bool check_W_proper(const BilinearSubspace& w, unsigned long seed = 12345) {
  const long q = w.q, p1 = w.p1;
  if (static_cast<long>(w.basis.size()) != q)
    throw std::invalid_argument("subspace basis count mismatch");
  QMat stack(q, q * p1);
  for (long j = 0; j < q; ++j)
    for (long r = 0; r < q; ++r)
      for (long i = 0; i < p1; ++i)
        stack.at(j, r * p1 + i) = w.basis[static_cast<std::size_t>(j)].at(r, i);
  if (rank(std::move(stack)) != q) return false;

  // Polynomial route: sym part of ftilde(w)^T ftilde(w) - |w|^2 I vanishes.
  bool polynomial_identity = true;
  for (long a = 0; a < q && polynomial_identity; ++a)
    for (long b = a; b < q && polynomial_identity; ++b) {
      const QMat prod = w.basis[static_cast<std::size_t>(a)].transposed() *
                            w.basis[static_cast<std::size_t>(b)] +
                        w.basis[static_cast<std::size_t>(b)].transposed() *
                            w.basis[static_cast<std::size_t>(a)];
      const QMat want = (a == b ? frac(2) : frac(0)) * QMat::identity(p1);
      if (!(prod == want)) polynomial_identity = false;
    }
  if (polynomial_identity) return true;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-5, 5);
  for (int trial = 0; trial < 64; ++trial) {
    QMat x(q, p1);
    bool nonzero = false;
    for (long j = 0; j < q; ++j) {
      const long c = pick(rng);
      if (c == 0) continue;
      nonzero = true;
      for (long r = 0; r < q; ++r)
        for (long i = 0; i < p1; ++i)
          x.at(r, i) += frac(c) * w.basis[static_cast<std::size_t>(j)].at(r, i);
    }
    if (nonzero && rank(std::move(x)) < p1) return false;
  }
  return true;
}

}  // namespace ck

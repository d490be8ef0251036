#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "ck/motion.hpp"

using namespace ck;

namespace {

QMat givens(long n, long i, long j, const Rat& c, const Rat& s) {
  QMat m = QMat::identity(n);
  m.at(i, i) = c;
  m.at(j, j) = c;
  m.at(i, j) = -s;
  m.at(j, i) = s;
  return m;
}

QMat random_orthogonal(long n, std::mt19937_64& rng) {
  static const std::vector<std::pair<Rat, Rat>> pyth = {
      {frac(3, 5), frac(4, 5)}, {frac(5, 13), frac(12, 13)}, {frac(8, 17), frac(15, 17)}};
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> slot(0, n - 1);
  std::uniform_int_distribution<std::size_t> which(0, pyth.size() - 1);
  std::uniform_int_distribution<int> count(0, 3);

  // Random signed permutation seed.
  std::vector<long> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  QMat k(n, n);
  for (long r = 0; r < n; ++r) k.at(r, perm[static_cast<std::size_t>(r)]) = coin(rng) ? 1 : -1;

  const int rots = count(rng);
  for (int t = 0; t < rots; ++t) {
    const long i = slot(rng);
    long j = slot(rng);
    if (i == j) continue;
    const auto [c, s] = pyth[which(rng)];
    k = k * givens(n, i, j, c, coin(rng) ? s : -s);
  }
  return k;
}

std::vector<Rat> random_vec(long n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<Rat> v(static_cast<std::size_t>(n));
  for (auto& e : v) e = frac(num(rng), den(rng));
  return v;
}

// Coefficients of det(xI - k), leading first.
std::vector<Rat> char_poly(const QMat& k) {
  const long n = k.rows();
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  QMat m = QMat::identity(n);
  for (long i = 1; i <= n; ++i) {
    if (i > 1) m = k * m + c[static_cast<std::size_t>(i - 1)] * QMat::identity(n);
    c[static_cast<std::size_t>(i)] = -(k * m).trace() / i;
  }
  return c;
}

Rat poly_at_one(const std::vector<Rat>& c) {
  Rat s = 0;
  for (const Rat& a : c) s += a;
  return s;
}

std::vector<Rat> divide_by_x_minus_one(const std::vector<Rat>& c) {
  std::vector<Rat> b(c.size() - 1);
  b[0] = c[0];
  for (std::size_t i = 1; i < b.size(); ++i) b[i] = c[i] + b[i - 1];
  return b;
}

// Independent route to the axis translation: strip the (x-1) factors from
// the characteristic polynomial, evaluate the cofactor g at k, and scale by
// g(1). Because k is orthogonal (hence semisimple), g(k)/g(1) is exactly the
// projection onto ker(k - I) along im(k - I).
std::vector<Rat> axis_translation_by_polynomial(const MotionElement& g) {
  const long n = g.n();
  std::vector<Rat> c = char_poly(g.k);
  while (c.size() > 1 && sgn(poly_at_one(c)) == 0) c = divide_by_x_minus_one(c);
  QMat acc = c[0] * QMat::identity(n);
  for (std::size_t i = 1; i < c.size(); ++i) acc = acc * g.k + c[i] * QMat::identity(n);
  if (static_cast<long>(c.size()) == n + 1) {
    // No (x-1) factor: 1 is not an eigenvalue, the projection is zero.
    return std::vector<Rat>(static_cast<std::size_t>(n), Rat(0));
  }
  const Rat scale = 1 / poly_at_one(c);
  std::vector<Rat> v1(static_cast<std::size_t>(n), Rat(0));
  for (long r = 0; r < n; ++r)
    for (long cc = 0; cc < n; ++cc)
      v1[static_cast<std::size_t>(r)] += scale * acc.at(r, cc) * g.v[static_cast<std::size_t>(cc)];
  return v1;
}

// Particular solution of a y = b (assumes consistency).
std::vector<Rat> solve_particular(const QMat& a, const std::vector<Rat>& b) {
  QMat aug(a.rows(), a.cols() + 1);
  for (long r = 0; r < a.rows(); ++r) {
    for (long c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[static_cast<std::size_t>(r)];
  }
  const QMat e = rref(aug);
  std::vector<Rat> y(static_cast<std::size_t>(a.cols()), Rat(0));
  for (long r = 0; r < e.rows(); ++r) {
    long c = 0;
    while (c < e.cols() && sgn(e.at(r, c)) == 0) ++c;
    REQUIRE(c < a.cols());  // pivot in the last column would mean inconsistency
    y[static_cast<std::size_t>(c)] = e.at(r, a.cols());
  }
  return y;
}

}  // namespace

TEST_CASE("pinned Jordan decompositions") {
  // Pure translation.
  const MotionElement t = motion(QMat::identity(3), {frac(2), frac(-1), frac(7)});
  const auto [ts, tw] = jordan_decompose_motion(t);
  CHECK(ts == motion_identity(3));
  CHECK(tw == t);

  // Quarter turn in the plane: no fixed directions, g is already elliptic.
  QMat rot(2, 2);
  rot.at(0, 1) = -1;
  rot.at(1, 0) = 1;
  const MotionElement r = motion(rot, {frac(1), frac(0)});
  const auto [rs, rw] = jordan_decompose_motion(r);
  CHECK(rs == r);
  CHECK(rw == motion_identity(2));

  // Screw motion around the z axis.
  QMat screw(3, 3);
  screw.at(0, 1) = -1;
  screw.at(1, 0) = 1;
  screw.at(2, 2) = 1;
  const MotionElement g = motion(screw, {frac(1), frac(0), frac(1)});
  const auto [s, w] = jordan_decompose_motion(g);
  CHECK(s.k == screw);
  CHECK(s.v == std::vector<Rat>{frac(1), frac(0), frac(0)});
  CHECK(w.k == QMat::identity(3));
  CHECK(w.v == std::vector<Rat>{frac(0), frac(0), frac(1)});
}

TEST_CASE("Jordan decomposition properties on random motions") {
  std::mt19937_64 rng(912662);
  std::uniform_int_distribution<long> dims(2, 5);
  for (int trial = 0; trial < 500; ++trial) {
    const long n = dims(rng);
    const MotionElement g = motion(random_orthogonal(n, rng), random_vec(n, rng));
    const auto [s, w] = jordan_decompose_motion(g);

    CHECK(motion_mul(s, w) == g);
    CHECK(motion_mul(w, s) == g);
    CHECK(w.k == QMat::identity(n));
    CHECK(s.k == g.k);

    // w translates along fixed directions of k; s translates inside im(k-I).
    const QMat kmi = g.k - QMat::identity(n);
    std::vector<Rat> kw(static_cast<std::size_t>(n), Rat(0));
    for (long r = 0; r < n; ++r)
      for (long c = 0; c < n; ++c) kw[static_cast<std::size_t>(r)] += kmi.at(r, c) * w.v[static_cast<std::size_t>(c)];
    CHECK(kw == std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));

    const QMat image_rows = rref(kmi.transposed());
    QMat v2row(1, n);
    for (long c = 0; c < n; ++c) v2row.at(0, c) = s.v[static_cast<std::size_t>(c)];
    CHECK(subspace_contained(rref(v2row), image_rows));

    // Independent polynomial route to the same axis translation.
    CHECK(axis_translation_by_polynomial(g) == w.v);

    // Affine homogeneous matrices multiply like the motions do.
    CHECK(affine_matrix(g) == affine_matrix(s) * affine_matrix(w));

    // Uniqueness: shifting the translation by any other fixed vector breaks
    // the ellipticity certificate of the rotation part.
    const QMat fixed = null_space(kmi);
    if (fixed.rows() > 0) {
      QMat shifted(1, n);
      for (long c = 0; c < n; ++c) shifted.at(0, c) = s.v[static_cast<std::size_t>(c)] - fixed.at(0, c);
      CHECK_FALSE(subspace_contained(rref(shifted), image_rows));
    }
  }
}

TEST_CASE("elliptic parts have bounded powers, translation parts do not") {
  std::mt19937_64 rng(424542);
  std::uniform_int_distribution<long> dims(2, 4);
  int unbounded_seen = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const long n = dims(rng);
    const MotionElement g = motion(random_orthogonal(n, rng), random_vec(n, rng));
    const auto [s, w] = jordan_decompose_motion(g);

    // v2 = (k - I) y for some y; then trans(s^m) = (k^m - I) y, whose
    // entries are bounded by 2 |y| in the 2-norm since k^m is orthogonal.
    const QMat kmi = g.k - QMat::identity(n);
    const std::vector<Rat> y = solve_particular(kmi, s.v);
    Rat bound2 = 0;
    for (const Rat& e : y) bound2 += e * e;
    bound2 *= 4;

    MotionElement sp = s, wp = w;
    for (int m = 2; m <= 1000; ++m) {
      sp = motion_mul(sp, s);
      wp = motion_mul(wp, w);
      if (m % 97 == 0 || m == 1000) {
        for (const Rat& e : sp.v) CHECK(e * e <= bound2);
        for (long c = 0; c < n; ++c)
          CHECK(wp.v[static_cast<std::size_t>(c)] == m * w.v[static_cast<std::size_t>(c)]);
      }
    }
    bool moved = false;
    for (const Rat& e : w.v) moved = moved || sgn(e) != 0;
    if (moved) ++unbounded_seen;
  }
  CHECK(unbounded_seen > 0);  // the sample includes genuinely growing parts
}

TEST_CASE("motion group multiplication") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const long n = 3;
    const MotionElement a = motion(random_orthogonal(n, rng), random_vec(n, rng));
    const MotionElement b = motion(random_orthogonal(n, rng), random_vec(n, rng));
    const MotionElement c = motion(random_orthogonal(n, rng), random_vec(n, rng));
    CHECK(motion_mul(motion_mul(a, b), c) == motion_mul(a, motion_mul(b, c)));
    const std::vector<Rat> x = random_vec(n, rng);
    CHECK(motion_apply(motion_mul(a, b), x) == motion_apply(a, motion_apply(b, x)));
    CHECK(affine_matrix(motion_mul(a, b)) == affine_matrix(a) * affine_matrix(b));
  }
  QMat skew(2, 2);
  skew.at(0, 0) = 1;
  skew.at(0, 1) = 1;
  skew.at(1, 1) = 1;
  CHECK_THROWS_AS(motion(skew, {frac(0), frac(0)}), std::invalid_argument);
}

TEST_CASE("tangential Cartan cones of bilinear subspaces") {
  // Quaternion multiplication: all singular values coincide, giving the
  // diagonal line orbit in rank 4.
  const ConeSet quat = motion_cone_a(subspace_from_bilinear(bilinear_map(4, 4)));
  CHECK(quat.ambient == 4);
  CHECK(quat.expanded().size() == 8);
  for (const QMat& comp : quat.expanded()) CHECK(comp.rows() == 1);

  // Complex multiplication: the diagonal line in rank 2.
  const ConeSet cx = motion_cone_a(subspace_from_bilinear(bilinear_map(2, 2)));
  CHECK(cx.ambient == 2);
  CHECK(cx.expanded().size() == 2);

  // The zero subspace gives the zero cone.
  CHECK(motion_cone_a(BilinearSubspace{3, 0, {}}).expanded().empty());

  // A subspace with a rank-deficient element is rejected here and refuted by
  // the properness check.
  BilinearSubspace bad;
  bad.q = 2;
  bad.p1 = 2;
  bad.basis.push_back(QMat::identity(2));
  QMat dg(2, 2);
  dg.at(0, 0) = 1;
  bad.basis.push_back(dg);
  CHECK_THROWS_AS(motion_cone_a(bad), unsupported_error);
  CHECK_FALSE(check_W_proper(bad));

  // The honest quaternion subspace passes the properness check.
  CHECK(check_W_proper(subspace_from_bilinear(bilinear_map(4, 4))));
}

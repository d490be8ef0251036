#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "ck/classify.hpp"
#include "ck/format.hpp"
#include "ck/multivector.hpp"
#include "ck/qmatrix.hpp"
#include "ck/real_rep.hpp"

using namespace ck;

namespace {

Mv random_mv(Sig s, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<Mask> mask(0, full_mask(s));
  Mv a(s);
  for (int i = 0; i < terms; ++i) a = a + Mv::blade(s, mask(rng), frac(coeff(rng)));
  return a;
}

}  // namespace

TEST_CASE("rational matrix primitives") {
  const QMat a = from_rows({{1, 2}, {3, 4}});
  const QMat b = from_rows({{0, 1}, {1, 0}});
  CHECK(a * QMat::identity(2) == a);
  CHECK((a * b) == from_rows({{2, 1}, {4, 3}}));
  CHECK(det(a) == frac(-2));
  CHECK(det(from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(a) == 2);
  CHECK(inverse(a) * a == QMat::identity(2));
  CHECK_THROWS_AS(inverse(from_rows({{1, 2}, {2, 4}})), std::domain_error);
  CHECK(a.transposed() == from_rows({{1, 3}, {2, 4}}));
  CHECK(a.trace() == frac(5));

  const QMat k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k.at(0, 1) == 1);
  CHECK(k.at(0, 0) == 0);
  CHECK(k.at(2, 3) == 4);
  CHECK(k.at(2, 1) == 3);
  CHECK(kron(a, kron(b, a)).rows() == 8);

  const QMat d = block_diag(a, b);
  CHECK(d.rows() == 4);
  CHECK(d.at(0, 1) == 2);
  CHECK(d.at(2, 3) == 1);
  CHECK(d.at(0, 2) == 0);
}

TEST_CASE("quaternion left multiplication matrices") {
  const QMat i = quat_left_i(), j = quat_left_j(), k = quat_left_k();
  const QMat eye = QMat::identity(4);
  CHECK(i * i == -eye);
  CHECK(j * j == -eye);
  CHECK(k * k == -eye);
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK((i * j + j * i).is_zero());
}

TEST_CASE("representation satisfies the generator relations") {
  for (unsigned p = 0; p <= 10; ++p)
    for (unsigned q = 0; p + q <= 10; ++q) {
      CAPTURE(p, q);
      CHECK(rep_check_relations(build_real_rep(Sig{p, q})));
    }
  CHECK(rep_check_relations(build_real_rep(Sig{8, 8})));
}

TEST_CASE("representation dimension is the minimal one from classification") {
  for (unsigned p = 0; p <= 14; ++p)
    for (unsigned q = 0; p + q <= 14; ++q) {
      const GRep r = build_real_rep(Sig{p, q});
      CAPTURE(p, q);
      CHECK(r.dim == r.cls.n * ground_real_dim(r.cls.ground) * (r.cls.dbl ? 2 : 1));
    }
}

TEST_CASE("transposition realizes the star anti-automorphism") {
  for (unsigned p = 0; p <= 12; ++p)
    for (unsigned q = 0; p + q <= 12; ++q) {
      CAPTURE(p, q);
      CHECK(rep_transpose_is_star(build_real_rep(Sig{p, q})));
    }

  std::mt19937_64 rng(31);
  for (Sig s : {Sig{2, 3}, Sig{4, 1}, Sig{3, 3}}) {
    const GRep r = build_real_rep(s);
    for (int trial = 0; trial < 20; ++trial) {
      const Mv a = random_mv(s, rng, 4);
      CHECK(rep_apply(r, star(a)) == rep_apply(r, a).transposed());
    }
  }
}

TEST_CASE("representation is an algebra homomorphism") {
  std::mt19937_64 rng(32);
  for (Sig s : {Sig{1, 2}, Sig{3, 1}, Sig{2, 2}, Sig{0, 4}}) {
    const GRep r = build_real_rep(s);
    for (int trial = 0; trial < 20; ++trial) {
      const Mv a = random_mv(s, rng, 3), b = random_mv(s, rng, 3);
      CHECK(rep_apply(r, a * b) == rep_apply(r, a) * rep_apply(r, b));
      CHECK(rep_apply(r, a + b) == rep_apply(r, a) + rep_apply(r, b));
    }
    CHECK(rep_apply(r, Mv::scalar(s, frac(1))) == QMat::identity(r.dim));
  }
}

TEST_CASE("representation is faithful") {
  // Trace certificate: all nonzero blades have traceless image, so the Gram
  // matrix of the images is diagonal and invertible.
  for (unsigned p = 0; p <= 10; ++p)
    for (unsigned q = 0; p + q <= 10; ++q) {
      CAPTURE(p, q);
      CHECK(rep_blade_traces_vanish(build_real_rep(Sig{p, q})));
    }
  CHECK(rep_blade_traces_vanish(build_real_rep(Sig{8, 8})));

  // Independent oracle on small signatures: exact rank of the blade images.
  for (unsigned p = 0; p <= 6; ++p)
    for (unsigned q = 0; p + q <= 6; ++q) {
      const GRep r = build_real_rep(Sig{p, q});
      CAPTURE(p, q);
      CHECK(rep_span_rank(r) == 1L << (p + q));
    }
}

TEST_CASE("blade image Gram matrix is diagonal") {
  for (unsigned p = 0; p <= 5; ++p)
    for (unsigned q = 0; p + q <= 5; ++q) {
      const Sig s{p, q};
      const GRep r = build_real_rep(s);
      CAPTURE(p, q);
      for (Mask a = 0; a <= full_mask(s); ++a) {
        const QMat ia = rep_blade(r, a);
        for (Mask b = a; b <= full_mask(s); ++b) {
          const Rat t = (ia * rep_blade(r, b)).trace();
          if (a == b)
            CHECK((t == frac(r.dim) || t == frac(-r.dim)));
          else
            CHECK(t == 0);
        }
      }
    }
}

TEST_CASE("volume element image is central with the predicted square") {
  for (unsigned p = 0; p <= 10; ++p)
    for (unsigned q = 0; p + q <= 10; ++q) {
      const Sig s{p, q};
      const int diff = (static_cast<int>(p) - static_cast<int>(q)) % 4;
      const int d4 = (diff + 4) % 4;
      if (d4 != 1 && d4 != 3) continue;
      const GRep r = build_real_rep(s);
      const QMat jm = rep_blade(r, full_mask(s));
      const QMat eye = QMat::identity(r.dim);
      CAPTURE(p, q);
      for (const QMat& g : r.gens) CHECK(g * jm == jm * g);
      if (d4 == 3) {
        CHECK(jm * jm == -eye);
      } else {
        // Doubled algebra: the central volume element squares to +1 and
        // separates the two blocks, so it is not a scalar.
        CHECK(jm * jm == eye);
        CHECK(!(jm == eye));
        CHECK(!(jm == -eye));
      }
    }
}

TEST_CASE("signed permutation helpers match dense arithmetic") {
  const GRep r = build_real_rep(Sig{2, 3});
  const SPerm a = sperm_of(r.gens[0]);
  const SPerm b = sperm_of(r.gens[3]);
  CHECK(sperm_trace(sperm_mul(a, b)) == (r.gens[0] * r.gens[3]).trace());
  CHECK(sperm_trace(sperm_identity(r.dim)) == r.dim);
  CHECK_THROWS_AS(sperm_of(from_rows({{1, 1}, {0, 1}})), std::domain_error);
  CHECK_THROWS_AS(sperm_of(from_rows({{2, 0}, {0, 1}})), std::domain_error);
}

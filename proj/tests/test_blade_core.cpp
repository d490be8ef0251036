#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "ck/format.hpp"
#include "ck/multivector.hpp"
#include "oracle_clifford.hpp"

using namespace ck;

namespace {

Mv random_mv(const Sig& s, std::mt19937& rng, int max_terms = 6) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<Mask> mask(0, full_mask(s));
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Mv m(s);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) m.add_term(mask(rng), frac(num(rng), den(rng)));
  return m;
}

std::vector<Sig> signatures_up_to(int nmax) {
  std::vector<Sig> out;
  for (int n = 0; n <= nmax; ++n)
    for (int p = 0; p <= n; ++p) out.push_back(Sig{p, n - p});
  return out;
}

}  // namespace

TEST_CASE("blade products agree with the rewriting oracle for all signatures up to 6 generators") {
  for (const Sig& s : signatures_up_to(6)) {
    const Mask top = full_mask(s);
    for (Mask a = 0; a <= top; ++a) {
      for (Mask b = 0; b <= top; ++b) {
        auto [osign, omask] = ck_oracle::product(s, a, b);
        INFO("sig=" << sig_str(s) << " a=" << a << " b=" << b);
        REQUIRE(product_sign(s, a, b) == osign);
        REQUIRE((a ^ b) == omask);
        if (b == top) break;
      }
      if (a == top) break;
    }
  }
}

TEST_CASE("blade squares follow the index law") {
  for (const Sig& s : signatures_up_to(6)) {
    const Mask top = full_mask(s);
    for (Mask m = 0; m <= top; ++m) {
      Mv b = Mv::blade(s, m);
      Mv sq = b * b;
      REQUIRE(sq.is_scalar());
      int ind = blade_index(s, m);
      int expect = (mod_pos(ind * (ind - 1) / 2, 2) == 0) ? 1 : -1;
      REQUIRE(sq.scalar_part() == Rat(expect));
      REQUIRE(blade_square_sign(s, m) == expect);
      if (m == top) break;
    }
  }
}

TEST_CASE("blade commutation follows the degree law") {
  for (const Sig& s : signatures_up_to(6)) {
    const Mask top = full_mask(s);
    for (Mask a = 0; a <= top; ++a) {
      for (Mask b = 0; b <= top; ++b) {
        Mv x = Mv::blade(s, a), y = Mv::blade(s, b);
        Mv lhs = x * y;
        Mv rhs = Rat(commutation_sign(a, b)) * (y * x);
        REQUIRE(lhs == rhs);
        if (b == top) break;
      }
      if (a == top) break;
    }
  }
}

TEST_CASE("generators anticommute and square to the metric for up to 10 generators") {
  for (int n = 1; n <= 10; ++n) {
    for (int p = 0; p <= n; ++p) {
      Sig s{p, n - p};
      for (int i = 1; i <= n; ++i) {
        Mv vi = Mv::gen(s, i);
        REQUIRE(vi * vi == Mv::scalar(s, i <= p ? 1 : -1));
        for (int j = i + 1; j <= n; ++j) {
          Mv vj = Mv::gen(s, j);
          REQUIRE(vi * vj == -(vj * vi));
        }
      }
    }
  }
}

TEST_CASE("geometric product is associative and distributive (seeded random)") {
  std::mt19937 rng(20260816);
  for (const Sig& s : {Sig{2, 3}, Sig{4, 1}, Sig{0, 6}, Sig{3, 3}, Sig{5, 2}}) {
    for (int trial = 0; trial < 40; ++trial) {
      Mv a = random_mv(s, rng), b = random_mv(s, rng), c = random_mv(s, rng);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a + b) * c == a * c + b * c);
    }
  }
}

TEST_CASE("volume elements square according to the mod-4 index rule") {
  for (const Sig& s : signatures_up_to(7)) {
    for (int kp = 0; kp <= s.p; ++kp)
      for (int km = 0; km <= s.q; ++km) {
        Key k{kp, km};
        Mv v = volume_element(s, k);
        Mv sq = v * v;
        REQUIRE(sq.is_scalar());
        REQUIRE(sq.scalar_part() == Rat(volume_square_sign(k)));
      }
  }
}

TEST_CASE("J = J+ J- and conjugation by J+ scales generators by parity of p") {
  for (const Sig& s : signatures_up_to(7)) {
    if (s.p == 0 && s.q == 0) continue;
    REQUIRE(j_plus(s) * j_minus(s) == j_element(s));
    if (s.p == 0) continue;
    Mv jp = j_plus(s);
    Mv sq = jp * jp;
    Rat inv_scale = sq.scalar_part();  // jp^{-1} = jp / (jp^2)
    for (int i = 1; i <= s.p; ++i) {
      Mv lhs = (Rat(1) / inv_scale) * (jp * Mv::gen_plus(s, i) * jp);
      int sign = (s.p - 1) % 2 == 0 ? 1 : -1;
      REQUIRE(lhs == Rat(sign) * Mv::gen_plus(s, i));
    }
    for (int j = 1; j <= s.q; ++j) {
      Mv lhs = (Rat(1) / inv_scale) * (jp * Mv::gen_minus(s, j) * jp);
      int sign = s.p % 2 == 0 ? 1 : -1;
      REQUIRE(lhs == Rat(sign) * Mv::gen_minus(s, j));
    }
  }
}

TEST_CASE("J is central with square -1 exactly when p-q = 3 mod 4") {
  for (const Sig& s : signatures_up_to(7)) {
    if (s.n() == 0) continue;
    Mv j = j_element(s);
    bool central = true;
    for (int i = 1; i <= s.n(); ++i) {
      Mv v = Mv::gen(s, i);
      if (!(j * v == v * j)) central = false;
    }
    bool sq_minus1 = (j * j == Mv::scalar(s, -1));
    bool claim = mod_pos(s.delta(), 4) == 3;
    REQUIRE((central && sq_minus1) == claim);
  }
}

TEST_CASE("reversion and star are anti-automorphisms (seeded random)") {
  std::mt19937 rng(777001);
  for (const Sig& s : {Sig{1, 1}, Sig{3, 2}, Sig{2, 4}, Sig{4, 3}, Sig{0, 5}}) {
    for (int trial = 0; trial < 30; ++trial) {
      Mv a = random_mv(s, rng), b = random_mv(s, rng);
      REQUIRE(reversion(a * b) == reversion(b) * reversion(a));
      REQUIRE(reversion(reversion(a)) == a);
      REQUIRE(star(a * b) == star(b) * star(a));
      REQUIRE(star(star(a)) == a);
      // star = T_{0,q} after reversion everywhere, = T_{p,0} after reversion
      // on the even part.
      REQUIRE(star(a) == t_involution(reversion(a), 0, s.q));
      Mv e = even_part(a);
      REQUIRE(star(e) == t_involution(reversion(e), s.p, 0));
    }
  }
}

TEST_CASE("star of a blade times the blade is 1") {
  for (const Sig& s : signatures_up_to(6)) {
    const Mask top = full_mask(s);
    for (Mask m = 0; m <= top; ++m) {
      Mv b = Mv::blade(s, m);
      REQUIRE(star(b) * b == Mv::scalar(s, 1));
      if (m == top) break;
    }
  }
}

TEST_CASE("grade involutions are algebra automorphisms and multiply pointwise") {
  std::mt19937 rng(424242);
  Sig s{3, 4};
  for (int trial = 0; trial < 25; ++trial) {
    Mv a = random_mv(s, rng), b = random_mv(s, rng);
    for (int lp : {0, 1, 3})
      for (int lm : {0, 2, 4}) {
        REQUIRE(t_involution(a * b, lp, lm) ==
                t_involution(a, lp, lm) * t_involution(b, lp, lm));
        REQUIRE(t_involution(t_involution(a, lp, lm), lp, lm) == a);
      }
  }
}

TEST_CASE("reflection fixes the orthogonal complement and negates the axis") {
  Sig s{2, 2};
  Mv v = Mv::gen_plus(s, 1);
  REQUIRE(reflect(v, v) == -v);
  REQUIRE(reflect(v, Mv::gen_plus(s, 2)) == Mv::gen_plus(s, 2));
  REQUIRE(reflect(v, Mv::gen_minus(s, 1)) == Mv::gen_minus(s, 1));

  // tau_v(a) = a - 2(<a,v>/Q(v)) v on E, for a mix of anisotropic vectors.
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    Mv w(s);
    for (int i = 1; i <= s.n(); ++i) w = w + frac(coef(rng)) * Mv::gen(s, i);
    if (is_zero(quad_form(w))) continue;
    Mv a(s);
    for (int i = 1; i <= s.n(); ++i) a = a + frac(coef(rng)) * Mv::gen(s, i);
    Mv expect = a - (Rat(2) * polar_form(a, w) / quad_form(w)) * w;
    REQUIRE(reflect(w, a) == expect);
  }
}

TEST_CASE("reflection by a generator fixes the expected subalgebra dimensions") {
  // Conjugation-type involutions: the fixed subalgebra of negating one minus
  // generator has dimension 2^{n-1}, matching C(p,q-1).
  Sig s{2, 3};
  auto fixed = fixed_subalgebra_blades(s, minus_bit(s, 1));
  REQUIRE(fixed.size() == (size_t{1} << (s.n() - 1)));
  // The fixed subalgebra of the full grade involution is the even part.
  auto even = fixed_subalgebra_blades(s, full_mask(s));
  for (Mask m : even) REQUIRE(blade_deg(m) % 2 == 0);
  REQUIRE(even.size() == (size_t{1} << (s.n() - 1)));
}

TEST_CASE("group membership predicates on hand-built elements") {
  Sig s{1, 1};
  // cosh/sinh style one-parameter element: a = c + s v1+ v1-, c^2 - s^2 = 1.
  Mv a = Mv::scalar(s, frac(5, 4)) + frac(3, 4) * (Mv::gen_plus(s, 1) * Mv::gen_minus(s, 1));
  REQUIRE(in_group(a));
  REQUIRE(in_spin(a));
  REQUIRE_FALSE(in_group(Mv::scalar(s, 2)));
  REQUIRE_FALSE(in_group(Mv::gen_plus(s, 1)));  // odd

  Sig e{0, 2};
  // Rational rotation: cos + sin v1- v2- with cos^2 + sin^2 = 1.
  Mv r = Mv::scalar(e, frac(3, 5)) + frac(4, 5) * (Mv::gen_minus(e, 1) * Mv::gen_minus(e, 2));
  REQUIRE(in_group(r));
  REQUIRE(in_spin(r));

  // Product of two anisotropic vectors is in the group iff Q products are +-1.
  Sig t{2, 1};
  Mv v1 = Mv::gen_plus(t, 1), v2 = Mv::gen_plus(t, 2);
  REQUIRE(in_group(v1 * v2));
  REQUIRE(in_spin(v1 * v2));
}

TEST_CASE("Aut(J) membership is stable under products and inverses") {
  std::mt19937 rng(5150);
  Sig s{2, 1};
  Mv jp = j_plus(s);
  // Group elements of the even part preserving J+ under star-congruence.
  Mv g1 = Mv::scalar(s, frac(5, 4)) + frac(3, 4) * (Mv::gen_plus(s, 1) * Mv::gen_minus(s, 1));
  REQUIRE(in_group(g1));
  if (in_aut(g1, jp)) {
    Mv g2 = g1 * g1;
    REQUIRE(in_aut(g2, jp));
  }
  // Scalars +-1 always preserve J.
  REQUIRE(in_aut(Mv::scalar(s, 1), jp));
  REQUIRE(in_aut(Mv::scalar(s, -1), jp));
  // A scalar other than +-1 never does.
  REQUIRE_FALSE(in_aut(Mv::scalar(s, 2), jp));
}

TEST_CASE("Lie algebra blade counts") {
  REQUIRE(lie_algebra_blades(Sig{1, 1}).size() == 1);
  REQUIRE(noncompact_dim_by_blades(Sig{1, 1}) == 1);
  REQUIRE(noncompact_dim_by_blades(Sig{1, 8}) == 64);
  REQUIRE(noncompact_dim_by_blades(Sig{0, 2}) == 0);
  // g consists of grade 2 mod 4 blades; check the antisymmetry defining it.
  for (Mask m : lie_algebra_blades(Sig{2, 3})) {
    Mv b = Mv::blade(Sig{2, 3}, m);
    REQUIRE(reversion(b) + b == Mv(Sig{2, 3}));
    REQUIRE(is_even(b));
  }
}

TEST_CASE("text format round-trips") {
  Sig s{2, 3};
  Mv an = parse_mv(s, "3/2*v+1v-2 - 1");
  REQUIRE(an.coeff(plus_bit(s, 1) | minus_bit(s, 2)) == frac(3, 2));
  REQUIRE(an.coeff(0) == frac(-1));
  REQUIRE(to_string(an) == "3/2*v+1v-2 - 1");

  REQUIRE(to_string(Mv(s)) == "0");
  REQUIRE(parse_mv(s, "0") == Mv(s));
  REQUIRE(parse_mv(s, "v-1v+1") == -(Mv::gen_plus(s, 1) * Mv::gen_minus(s, 1)));

  std::mt19937 rng(31337);
  for (const Sig& sg : {Sig{0, 1}, Sig{1, 0}, Sig{3, 2}, Sig{2, 4}}) {
    for (int trial = 0; trial < 50; ++trial) {
      Mv m = random_mv(sg, rng);
      REQUIRE(parse_mv(sg, to_string(m)) == m);
    }
  }
  REQUIRE_THROWS_AS(parse_mv(s, "v+9"), std::out_of_range);
  REQUIRE_THROWS_AS(parse_mv(s, "1 +"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_mv(s, "q"), std::invalid_argument);
}

TEST_CASE("signature guardrails") {
  REQUIRE_THROWS_AS(check_sig(Sig{-1, 2}), std::domain_error);
  REQUIRE_THROWS_AS(check_sig(Sig{16, 15}), std::domain_error);
  REQUIRE_THROWS_AS(Mv::blade(Sig{1, 1}, 0b100), std::out_of_range);
  REQUIRE_THROWS_AS(reflect(Mv::gen_plus(Sig{1, 1}, 1) + Mv::gen_minus(Sig{1, 1}, 1),
                            Mv::scalar(Sig{1, 1}, 1)),
                    std::domain_error);
}

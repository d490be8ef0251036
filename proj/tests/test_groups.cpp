#include <catch2/catch_amalgamated.hpp>

#include "ck/groups.hpp"
#include "ck/obstructions.hpp"

using namespace ck;

namespace {

// Independent d formulas per family, kept separate from the dim - dim_k
// route used by atom_stats.
long d_formula(const Atom& g) {
  const long a = g.a, b = g.b;
  switch (g.fam) {
    case Fam::GL_R: return a * (a + 1) / 2;
    case Fam::GL_C: return a * a;
    case Fam::GL_H: return 2 * a * a - a;
    case Fam::SL_R: return a * (a + 1) / 2 - 1;
    case Fam::SL_C: return a * a - 1;
    case Fam::SU_STAR: return 2 * a * a - a - 1;
    case Fam::O_PQ:
    case Fam::SO_PQ:
    case Fam::SPIN: return a * b;
    case Fam::U_PQ:
    case Fam::SU_PQ: return 2 * a * b;
    case Fam::SP_PQ: return 4 * a * b;
    case Fam::SP_R: return a * a + a;
    case Fam::SP_C: return a * (2 * a + 1);
    case Fam::O_C: return a * (a - 1) / 2;
    case Fam::O_STAR: return a * a - a;
    case Fam::G2_SPLIT: return 8;
    case Fam::F4_4: return 28;
    case Fam::E6_6: return 42;
    case Fam::E6_2: return 40;
    case Fam::E6_M14: return 32;
    case Fam::E6_M26: return 26;
    case Fam::E7_7: return 70;
    case Fam::E7_M5: return 64;
    case Fam::E7_M25: return 54;
    case Fam::E8_8: return 128;
    case Fam::F4_C: return 52;
    case Fam::E6_C: return 78;
    case Fam::TORUS_SPLIT: return a;
    case Fam::TORUS_COMPACT: return 0;
  }
  return -1;
}

}  // namespace

TEST_CASE("noncompact dimension d per family matches dim minus compact dim") {
  std::vector<Atom> atoms;
  for (long n = 1; n <= 8; ++n)
    for (Fam f : {Fam::GL_R, Fam::GL_C, Fam::GL_H, Fam::SL_R, Fam::SL_C, Fam::SU_STAR,
                  Fam::SP_R, Fam::SP_C, Fam::O_C, Fam::O_STAR, Fam::TORUS_SPLIT,
                  Fam::TORUS_COMPACT})
      atoms.push_back({f, n, 0});
  for (long p = 0; p <= 6; ++p)
    for (long q = 0; q <= 6; ++q)
      for (Fam f : {Fam::O_PQ, Fam::SO_PQ, Fam::SPIN, Fam::U_PQ, Fam::SU_PQ, Fam::SP_PQ}) {
        if (f == Fam::SU_PQ && p + q == 0) continue;
        atoms.push_back({f, p, q});
      }
  for (Fam f : {Fam::G2_SPLIT, Fam::F4_4, Fam::E6_6, Fam::E6_2, Fam::E6_M14, Fam::E6_M26,
                Fam::E7_7, Fam::E7_M5, Fam::E7_M25, Fam::E8_8, Fam::F4_C, Fam::E6_C})
    atoms.push_back({f, 0, 0});

  for (const Atom& g : atoms) {
    const GroupStats s = atom_stats(g);
    INFO("fam " << static_cast<int>(g.fam) << " (" << g.a << "," << g.b << ")");
    CHECK(s.d == d_formula(g));
    CHECK(s.d == s.dim - s.dim_k);
    CHECK(s.d >= 0);
    CHECK(s.real_rank >= 0);
    CHECK(s.real_rank <= s.rank);
    CHECK(s.rank_k <= s.rank);
    // A group is compact exactly when it has no noncompact directions.
    CHECK((s.d == 0) == (s.dim == s.dim_k));
    if (s.d == 0) CHECK(s.real_rank == 0);
  }
}

TEST_CASE("pinned stats examples") {
  CHECK(stats_of("GL(2,H)").d == 6);
  CHECK(stats_of("O(8,C)").d == 28);
  CHECK(stats_of("SO(3,4)").d == 12);
  for (long n = 1; n <= 6; ++n) {
    const GroupStats s = stats_of("Sp(" + std::to_string(n) + ",C)");
    CHECK(s.rank == 2 * n);
    CHECK(s.rank_k == n);
  }
  CHECK(stats_of("E6(6)").dim == 78);
  CHECK(stats_of("E6(6)").d == 42);
  CHECK(stats_of("E6(6)").real_rank == 6);
  CHECK(stats_of("F4(4)").d == 28);
  CHECK(stats_of("E8(8)").d == 128);
  CHECK(stats_of("E8(8)").rank == 8);
  CHECK(stats_of("E7(-25)").real_rank == 3);
  CHECK(stats_of("SO*(12)").d == 30);
  CHECK(stats_of("SO*(10)").d == 20);
  CHECK(stats_of("GL(1,R)").dim == 1);
  CHECK(stats_of("GL(1,R)").d == 1);
  // U(p,q) is an equal-rank group: its Cartan subgroup sits inside K.
  for (long p = 1; p <= 4; ++p)
    for (long q = 0; q <= 4; ++q) {
      const GroupStats s = atom_stats({Fam::U_PQ, p, q});
      CHECK(s.rank == s.rank_k);
    }
}

TEST_CASE("stats are additive over products and doubles") {
  const std::vector<std::string> parts = {"GL(3,R)", "Sp(2,1)", "SO(3,4)", "U(2,2)",
                                          "Sp(2,R)", "E6(2)",   "R",       "iR"};
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const GroupStats a = stats_of(parts[i]);
      const GroupStats b = stats_of(parts[j]);
      const GroupStats ab = stats_of(parts[i] + "x" + parts[j]);
      CHECK(ab.dim == a.dim + b.dim);
      CHECK(ab.d == a.d + b.d);
      CHECK(ab.rank == a.rank + b.rank);
      CHECK(ab.real_rank == a.real_rank + b.real_rank);
      CHECK(ab.dim_k == a.dim_k + b.dim_k);
      CHECK(ab.rank_k == a.rank_k + b.rank_k);
    }
  for (const std::string& part : parts) {
    const GroupStats a = stats_of(part);
    const GroupStats aa = stats_of(part + "^2");
    CHECK(aa.dim == 2 * a.dim);
    CHECK(aa.d == 2 * a.d);
    CHECK(aa.rank == 2 * a.rank);
    CHECK(aa.real_rank == 2 * a.real_rank);
  }
}

TEST_CASE("determinant-one wrapper") {
  for (long p = 1; p <= 4; ++p)
    for (long q = 1; q <= 4; ++q) {
      // S(GL(p,R) x GL(q,R)) inside SL(p+q,R): one split direction removed.
      const std::string desc =
          "S(GL(" + std::to_string(p) + ",R)xGL(" + std::to_string(q) + ",R))";
      const GroupStats s = stats_of(desc);
      CHECK(s.dim == p * p + q * q - 1);
      CHECK(s.d == p * (p + 1) / 2 + q * (q + 1) / 2 - 1);
      CHECK(s.real_rank == p + q - 1);
      CHECK(s.dim_k == p * (p - 1) / 2 + q * (q - 1) / 2);

      // S(U(p) x U(q)) inside SU(p+q): compact, so d stays 0.
      const std::string cdesc = "S(U(" + std::to_string(p) + ")xU(" + std::to_string(q) + "))";
      const GroupStats c = stats_of(cdesc);
      CHECK(c.dim == p * p + q * q - 1);
      CHECK(c.d == 0);
      CHECK(c.real_rank == 0);
      CHECK(c.rank == p + q - 1);
      CHECK(c.dim_k == c.dim);
      // It is exactly the maximal compact of the S(GL x GL) above in rank.
      CHECK(stats_of("SU(" + std::to_string(p) + "," + std::to_string(q) + ")").dim_k == c.dim);
    }
}

TEST_CASE("descriptor parsing with environments") {
  const std::map<std::string, long> env = {{"n", 3}, {"p", 1}, {"q", 2}};
  CHECK(parse_group("SU(2,2n)", env).atoms == std::vector<Atom>{{Fam::SU_PQ, 2, 6}});
  CHECK(parse_group("Sp(1,n)", env).atoms == std::vector<Atom>{{Fam::SP_PQ, 1, 3}});
  CHECK(parse_group("SO*(4n)", env).atoms == std::vector<Atom>{{Fam::O_STAR, 6, 0}});
  CHECK(parse_group("U*(8)").atoms == std::vector<Atom>{{Fam::GL_H, 4, 0}});
  CHECK(parse_group("SU*(8)").atoms == std::vector<Atom>{{Fam::SU_STAR, 4, 0}});
  CHECK(parse_group("SL(2n,R)", env).atoms == std::vector<Atom>{{Fam::SL_R, 6, 0}});
  CHECK(parse_group("so(n-1,C)", env).atoms == std::vector<Atom>{{Fam::O_C, 2, 0}});
  CHECK(parse_group("sp(n,R)", env).atoms == std::vector<Atom>{{Fam::SP_R, 3, 0}});
  CHECK(parse_group("sp(floor(n/2),n-floor(n/2))", env).atoms ==
        std::vector<Atom>{{Fam::SP_PQ, 1, 2}});
  CHECK(parse_group("so*(2*min(n,2p+1,2q+1))", env).atoms ==
        std::vector<Atom>{{Fam::O_STAR, 3, 0}});
  CHECK(parse_group("u(p,q)", env).atoms == std::vector<Atom>{{Fam::U_PQ, 1, 2}});
  CHECK(parse_group("Torus(2)").atoms == std::vector<Atom>{{Fam::TORUS_SPLIT, 2, 0}});
  CHECK(parse_group("iR").atoms == std::vector<Atom>{{Fam::TORUS_COMPACT, 1, 0}});
  CHECK(parse_group("G2(2)").atoms == std::vector<Atom>{{Fam::G2_SPLIT, 0, 0}});
  CHECK(parse_group("E7(-5)").atoms == std::vector<Atom>{{Fam::E7_M5, 0, 0}});
  CHECK(parse_group("F4(C)").atoms == std::vector<Atom>{{Fam::F4_C, 0, 0}});
  CHECK(parse_group("f4(C)").atoms == std::vector<Atom>{{Fam::F4_C, 0, 0}});
  CHECK(parse_group("e6(-14)").atoms == std::vector<Atom>{{Fam::E6_M14, 0, 0}});

  const GroupDesc two = parse_group("SO(4,1)xSO(3)");
  REQUIRE(two.atoms.size() == 2);
  CHECK(two.atoms[0] == Atom{Fam::SO_PQ, 4, 1});
  CHECK(two.atoms[1] == Atom{Fam::SO_PQ, 3, 0});
  CHECK(!two.s_wrapper);

  const GroupDesc s = parse_group("S(U*(2p)xU*(2q))", env);
  CHECK(s.s_wrapper);
  REQUIRE(s.atoms.size() == 2);
  CHECK(s.atoms[0] == Atom{Fam::GL_H, 1, 0});
  CHECK(s.atoms[1] == Atom{Fam::GL_H, 2, 0});

  const GroupDesc dbl = parse_group("Sp(n,R)^2", env);
  CHECK(dbl.dbl);
  CHECK(dbl.atoms == std::vector<Atom>{{Fam::SP_R, 3, 0}});

  CHECK(eval_param("2n+1", env) == 7);
  CHECK(eval_param("floor(7/2)", {}) == 3);
  CHECK(eval_param("min(n, 2p+1, 2q+1)", env) == 3);
  CHECK(eval_param("4n", env) == 12);
  CHECK(eval_param("n - 4", env) == -1);

  CHECK_THROWS_AS(parse_group("Q(3)"), unsupported_error);
  CHECK_THROWS_AS(parse_group("E6(5)"), unsupported_error);
  CHECK_THROWS_AS(parse_group("SU(2,2n)"), std::invalid_argument);  // unbound n
  CHECK_THROWS_AS(parse_group("SU*(7)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("GL(3)"), unsupported_error);
}

TEST_CASE("Calabi-Markus rank coincidence") {
  // O(p+1,q)/O(p,q) for p >= q > 0 keeps the real rank.
  for (long q = 1; q <= 4; ++q)
    for (long p = q; p <= 5; ++p)
      CHECK(calabi_markus(atom_stats({Fam::O_PQ, p + 1, q}), atom_stats({Fam::O_PQ, p, q})));
  for (long n = 1; n <= 4; ++n) {
    CHECK_FALSE(
        calabi_markus(atom_stats({Fam::O_PQ, 2, 2 * n}), atom_stats({Fam::O_PQ, 1, 2 * n})));
    CHECK(calabi_markus(atom_stats({Fam::SP_R, n, 0}), atom_stats({Fam::GL_R, n, 0})));
  }
}

TEST_CASE("rank parity obstruction") {
  for (long n = 1; n <= 4; ++n) {
    // Sp(2n,R)/Sp(n,C): ranks 2n = 2n, compact ranks 2n > n.
    const GroupStats g = atom_stats({Fam::SP_R, 2 * n, 0});
    const GroupStats h = atom_stats({Fam::SP_C, n, 0});
    CHECK(rank_parity_obstruction(g, h, h.rank_k));
    // O(2,2n)/U(1,n): compact ranks tie, no obstruction.
    const GroupStats g2 = atom_stats({Fam::O_PQ, 2, 2 * n});
    const GroupStats h2 = atom_stats({Fam::U_PQ, 1, n});
    CHECK(g2.rank == h2.rank);
    CHECK_FALSE(rank_parity_obstruction(g2, h2, h2.rank_k));
  }
  // O(j,k+l)/O(k) x O(j,l) with j,k,l odd.
  for (long j : {1L, 3L})
    for (long k : {1L, 3L})
      for (long l : {1L, 3L}) {
        const GroupStats g = atom_stats({Fam::O_PQ, j, k + l});
        const GroupStats h = group_stats({{{Fam::O_PQ, k, 0}, {Fam::O_PQ, j, l}}});
        CHECK(rank_parity_obstruction(g, h, h.rank_k));
      }
}

TEST_CASE("pseudo-Riemannian signature of the quotient") {
  for (long q = 1; q <= 4; ++q)
    for (long p = q; p <= 5; ++p) {
      const auto sig = pseudo_riemannian_signature(atom_stats({Fam::O_PQ, p + 1, q}),
                                                   atom_stats({Fam::O_PQ, p, q}));
      CHECK(sig.first == q);
      CHECK(sig.second == p);
    }
  const auto lor = pseudo_riemannian_signature(atom_stats({Fam::O_PQ, 2, 1}),
                                               atom_stats({Fam::O_PQ, 1, 1}));
  CHECK(lor == std::pair<long, long>{1, 1});
  // Riemannian case: H = maximal compact of G.
  const GroupStats g = atom_stats({Fam::U_PQ, 2, 1});
  const GroupStats k = group_stats({{{Fam::U_PQ, 2, 0}, {Fam::U_PQ, 1, 0}}});
  const auto riem = pseudo_riemannian_signature(g, k);
  CHECK(riem.first == g.d);
  CHECK(riem.second == 0);
}

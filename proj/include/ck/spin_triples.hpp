#pragma once

#include <array>

#include "ck/catalog_tables.hpp"
#include "ck/cones.hpp"
#include "ck/even_iso.hpp"
#include "ck/groups.hpp"
#include "ck/real_rep.hpp"
#include "ck/report.hpp"

namespace ck {

// The eight-row family of proper-action triples (G(1,q), H, Spin(1,q)) with
// its natural module W and the non-compact dimension identity d(G)=d(L)+d(H).
struct SpinFamilyRow {
  int q;
  const char* g;
  const char* h;
  const char* l;
  const char* module;
  long dg, dl, dh;
};

inline const std::array<SpinFamilyRow, 8>& spin_family_table() {
  static const std::array<SpinFamilyRow, 8> rows{{
      {1, "GL(1,R)", "e", "Spin(1,1)", "R", 1, 1, 0},
      {2, "Sp(1,R)", "e", "Spin(1,2)", "R^2", 2, 2, 0},
      {3, "Sp(1,C)", "e", "Spin(1,3)", "C^2", 3, 3, 0},
      {4, "Sp(1,1)", "Sp(1)", "Spin(1,4)", "H^2", 4, 4, 0},
      {5, "GL(2,H)", "GL(1,H)", "Spin(1,5)", "H^2", 6, 5, 1},
      {6, "O*(8)", "O*(6)", "Spin(1,6)", "H^4", 12, 6, 6},
      {7, "O(8,C)", "O(7,C)", "Spin(1,7)", "C^8", 28, 7, 21},
      {8, "O(8,8)", "O(7,8)", "Spin(1,8)", "R^16", 64, 8, 56},
  }};
  return rows;
}

// Certificate that the triple (G(1,q), H, Spin(1,q)) acts properly with a
// compact quotient: H is the isotropy group of e1 in the natural module W,
// and the even-subalgebra element X0 = v1+ v1- acts invertibly, so the
// L-orbit map stays away from the isotropy directions. Checked exactly:
// the real model of C_even(1,q), det(iota(X0)) != 0, iota(X0)^2 = I, and
// the non-compact dimension identity d(G) = q + d(H).
inline CheckReport check_spin_triple(int q) {
  if (q < 1 || q > 8)
    throw std::domain_error("spin triple certificate is tabulated for 1 <= q <= 8");
  const SpinFamilyRow& row = spin_family_table()[static_cast<std::size_t>(q - 1)];
  CheckReport rep;
  rep.subject = std::string("spin triple q=") + std::to_string(q);

  const Sig s{1, q};
  EvenReduction red(s);
  const GRep r = build_real_rep(red.target());
  rep.add("even-model-relations", rep_check_relations(r),
          "C_even(1," + std::to_string(q) + ") ~ C(1," + std::to_string(q - 1) +
              ") realized on R^" + std::to_string(r.dim));

  const Mv x0 = Mv::blade(s, plus_bit(s, 1) | minus_bit(s, 1));
  const QMat m = rep_apply(r, red.reduce(x0));
  const Rat dv = det(m);
  rep.add("pivot-invertible", sgn(dv) != 0, "det iota(X0) = " + rat_str(dv));
  rep.add("pivot-involutive", m * m == QMat::identity(m.rows()));

  const GroupStats sg = stats_of(row.g);
  const GroupStats sh = stats_of(row.h);
  const GroupStats sl = stats_of(row.l);
  rep.add("d-sum",
          sg.d == row.dg && sh.d == row.dh && sl.d == row.dl && sl.d == q &&
              sg.d == q + sh.d,
          std::to_string(sg.d) + " = " + std::to_string(sl.d) + " + " +
              std::to_string(sh.d));
  rep.add("group-label", std::string(kGroupTable[1][q]) == row.g, row.g);
  return rep;
}

// The exceptional-signature chain realizing C_even(0,7) on R^8:
//   C_even(0,7) -> C(0,6) -> C(3,3) -> C(1,1) (x) C(2,2)
//                -> C(1,1) (x) C(1,1) (x) C(1,1) -> M(8,R),
// using the even reduction, the (0,3) reduction, two (1,1) splits and the
// 2x2 matrix model of C(1,1) on each factor. The first tensor slot is the
// innermost Kronecker factor.
class O8cChain {
 public:
  O8cChain()
      : red_(Sig{0, 7}),
        ph03_(phi(Sig{0, 6}, Key{0, 3}).map),
        ph1_(phi(Sig{3, 3}, Key{1, 1}).map),
        ph2_(phi(Sig{2, 2}, Key{1, 1}).map) {
    psi_[0] = QMat::identity(2);
    psi_[1] = psi11_plus();
    psi_[2] = psi11_minus();
    psi_[3] = psi11_plus() * psi11_minus();
  }

  // iota(a) for even a in C(0,7).
  QMat image(const Mv& a) const {
    const Mv c6 = red_.reduce(a);
    const Mv c33 = to_mv(ph03_.apply(c6));
    const TEl t = ph1_.apply(c33);
    QMat acc(8, 8);
    for (const auto& [k, c] : t.terms) {
      const QMat& a1 = psi_[tkey_a(k)];
      const TEl& inner = ph2_.apply_blade(tkey_b(k));
      for (const auto& [k2, c2] : inner.terms) {
        const QMat& a2 = psi_[tkey_a(k2)];
        const QMat& a3 = psi_[tkey_b(k2)];
        acc = acc + (c * c2) * kron(a3, kron(a2, a1));
      }
    }
    return acc;
  }

 private:
  EvenReduction red_;
  Morphism ph03_, ph1_, ph2_;
  std::array<QMat, 4> psi_;
};

// f_k = E_{2k,2k-1} - E_{2k-1,2k}, the rotation generator of the k-th
// coordinate plane of R^8 (k = 1..4).
inline QMat o8c_f(int k) {
  QMat f(8, 8);
  f.at(2 * k - 1, 2 * k - 2) = 1;
  f.at(2 * k - 2, 2 * k - 1) = -1;
  return f;
}

// The three commuting square-roots of -I spanning the relevant part of the
// rotation Cartan: x1 = f1+f2+f3+f4, x2 = f1-f2+f3-f4, x3 = f1-f2-f3+f4.
inline QMat o8c_x(int i) {
  static const int sign[3][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  QMat x(8, 8);
  for (int k = 1; k <= 4; ++k) {
    const QMat f = o8c_f(k);
    x = (sign[i - 1][k - 1] == 1) ? x + f : x - f;
  }
  return x;
}

// Cartan projection data of the triple lying over the chain: a(L) is the
// D4-orbit of the hyperplane a+b-c-d = 0, a(H) is the union of the four
// coordinate axes.
inline ConeSet o8c_cone_l() {
  return ConeSet(4, WeylKind::D,
                 {from_rows({{Rat(1), Rat(-1), Rat(0), Rat(0)},
                             {Rat(0), Rat(0), Rat(1), Rat(-1)},
                             {Rat(1), Rat(0), Rat(1), Rat(0)}})});
}

inline ConeSet o8c_cone_h() { return coordinate_cone(4, 1); }

// Full verification of the exceptional chain: iota is an exact algebra
// isomorphism C_even(0,7) -> M(8,R); the three distinguished generators of
// the rotation Cartan pull back to the pinned commuting bivectors; their
// span is the pinned hyperplane; the two cones meet only at 0; and the
// non-compact dimensions add up (28 = 7 + 21).
inline CheckReport verify_o8c() {
  CheckReport rep;
  rep.subject = "exceptional chain C_even(0,7) ~ M(8,R)";
  const Sig s{0, 7};
  const O8cChain chain;

  // Collect the 64 even blades and their images.
  std::vector<Mask> evens;
  std::vector<QMat> img;
  for (Mask m = 0; m < (Mask{1} << 7); ++m)
    if (std::popcount(m) % 2 == 0) {
      evens.push_back(m);
      img.push_back(chain.image(Mv::blade(s, m)));
    }

  bool homo = true;
  for (std::size_t i = 0; i < evens.size() && homo; ++i)
    for (std::size_t j = 0; j < evens.size(); ++j) {
      const Mv prod = Mv::blade(s, evens[i]) * Mv::blade(s, evens[j]);
      if (!(chain.image(prod) == img[i] * img[j])) {
        homo = false;
        break;
      }
    }
  rep.add("chain-multiplicative", homo, "checked on all 64 x 64 even blade pairs");

  QMat flat(64, 64);
  for (std::size_t i = 0; i < img.size(); ++i)
    for (long r = 0; r < 8; ++r)
      for (long c = 0; c < 8; ++c) flat.at(static_cast<long>(i), 8 * r + c) = img[i].at(r, c);
  rep.add("chain-bijective", rank(flat) == 64, "blade images span M(8,R)");

  // The pinned preimages of the Cartan generators, with their exact signs.
  const Mask b12 = minus_bit(s, 1) | minus_bit(s, 2);
  const Mask b56 = minus_bit(s, 5) | minus_bit(s, 6);
  const Mask b47 = minus_bit(s, 4) | minus_bit(s, 7);
  const QMat u1 = chain.image(Mv::blade(s, b12));
  const QMat u2 = chain.image(Mv::blade(s, b56));
  const QMat u3 = chain.image(Mv::blade(s, b47));
  const auto sign_of = [](const QMat& u, const QMat& x) {
    if (u == x) return "+";
    if (u == QMat(8, 8) - x) return "-";
    return "?";
  };
  rep.add("pin-x1", u1 == QMat(8, 8) - o8c_x(1),
          std::string("iota(v1-v2-) = ") + sign_of(u1, o8c_x(1)) + "x1");
  rep.add("pin-x2", u2 == QMat(8, 8) - o8c_x(2),
          std::string("iota(v5-v6-) = ") + sign_of(u2, o8c_x(2)) + "x2");
  rep.add("pin-x3", u3 == QMat(8, 8) - o8c_x(3),
          std::string("iota(v4-v7-) = ") + sign_of(u3, o8c_x(3)) + "x3");

  bool comm = true, sq = true;
  const QMat xs[3] = {o8c_x(1), o8c_x(2), o8c_x(3)};
  const Mv bs[3] = {Mv::blade(s, b12), Mv::blade(s, b56), Mv::blade(s, b47)};
  const QMat meye = QMat(8, 8) - QMat::identity(8);
  for (int i = 0; i < 3; ++i) {
    if (!(xs[i] * xs[i] == meye)) sq = false;
    if (!((bs[i] * bs[i]) == Mv::scalar(s, -1))) sq = false;
    for (int j = i + 1; j < 3; ++j) {
      if (!(xs[i] * xs[j] == xs[j] * xs[i])) comm = false;
      if (!((bs[i] * bs[j]) == (bs[j] * bs[i]))) comm = false;
    }
  }
  rep.add("cartan-squares", sq, "x_i^2 = -I and (v_a- v_b-)^2 = -1");
  rep.add("cartan-commuting", comm);

  // Coordinates of the computed images in the f-basis; the f_k have disjoint
  // supports, so the coefficients can be read off and re-verified exactly.
  QMat coords(3, 4);
  bool in_span = true;
  const QMat us[3] = {u1, u2, u3};
  for (int i = 0; i < 3; ++i) {
    QMat rebuilt(8, 8);
    for (int k = 1; k <= 4; ++k) {
      coords.at(i, k - 1) = us[i].at(2 * k - 1, 2 * k - 2);
      rebuilt = rebuilt + coords.at(i, k - 1) * o8c_f(k);
    }
    if (!(rebuilt == us[i])) in_span = false;
  }
  const QMat hyper = o8c_cone_l().components.front();
  rep.add("cartan-span", in_span && rref(coords) == rref(hyper),
          "span iota{v1-v2-, v5-v6-, v4-v7-} = {a+b-c-d=0}");

  const ConeSet al = o8c_cone_l();
  const ConeSet ah = o8c_cone_h();
  rep.add("cones-disjoint",
          al.expanded().size() == 4 && ah.expanded().size() == 4 &&
              cones_properly_disjoint(al, ah),
          "4 hyperplanes vs 4 axes, pairwise transversal");

  const GroupStats sg = stats_of("O(8,C)");
  const GroupStats sh = stats_of("SO(7,1)");
  const GroupStats sl = stats_of("Spin(7,C)");
  rep.add("d-sum", sg.d == 28 && sh.d == 7 && sl.d == 21 && sg.d == sl.d + sh.d,
          "28 = 21 + 7");
  rep.add("ambient", al.ambient == sg.real_rank && ah.ambient == sg.real_rank,
          "cone ambient = real rank 4");
  return rep;
}

}  // namespace ck

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ck/signature.hpp"

namespace ck {

enum class Ground : std::uint8_t { R, C, H };

inline int ground_real_dim(Ground g) { return g == Ground::R ? 1 : g == Ground::C ? 2 : 4; }

inline char ground_letter(Ground g) { return g == Ground::R ? 'R' : g == Ground::C ? 'C' : 'H'; }

// C(p,q) as a matrix algebra: M(n,ground), doubled when dbl is set.
struct CliffordClass {
  Ground ground = Ground::R;
  long n = 1;
  bool dbl = false;

  friend bool operator==(const CliffordClass&, const CliffordClass&) = default;
};

inline std::string to_string(const CliffordClass& c) {
  std::string s(1, ground_letter(c.ground));
  if (c.n > 1) s += "(" + std::to_string(c.n) + ")";
  if (c.dbl) s += "^2";
  return s;
}

// Total dimension over R; always 2^(p+q).
inline long clifford_class_real_dim(const CliffordClass& c) {
  return c.n * c.n * ground_real_dim(c.ground) * (c.dbl ? 2 : 1);
}

inline CliffordClass classify_clifford(Sig s) {
  const int r = static_cast<int>(((s.p - s.q - 1) % 8 + 8) % 8);
  Ground g = Ground::R;
  bool dbl = false;
  int alpha = 0;
  switch (r) {
    case 0: g = Ground::R; dbl = true; alpha = 1; break;
    case 1:
    case 7: g = Ground::R; alpha = 0; break;
    case 2:
    case 6: g = Ground::C; alpha = 1; break;
    case 3:
    case 5: g = Ground::H; alpha = 2; break;
    case 4: g = Ground::H; dbl = true; alpha = 3; break;
  }
  return CliffordClass{g, 1L << ((s.n() - alpha) / 2), dbl};
}

// Isomorphism class of G(p,q). PQ families carry an indefinite signature
// (a,b); the others carry a single size parameter in a. OStar(a) is O*(2a).
enum class GroupFamily : std::uint8_t {
  OrthPQ,
  UnitPQ,
  SympPQ,
  GL_R,
  GL_H,
  Sp_R,
  Sp_C,
  O_C,
  OStar
};

struct GroupClass {
  GroupFamily fam = GroupFamily::OrthPQ;
  long a = 1;
  long b = 0;
  bool dbl = false;

  friend bool operator==(const GroupClass&, const GroupClass&) = default;
};

inline std::string to_string(const GroupClass& g) {
  std::string s;
  const auto pq = [&](const char* name) {
    s = name;
    s += "(" + std::to_string(g.a);
    if (g.b != 0) s += "," + std::to_string(g.b);
    s += ")";
  };
  switch (g.fam) {
    case GroupFamily::OrthPQ: pq("O"); break;
    case GroupFamily::UnitPQ: pq("U"); break;
    case GroupFamily::SympPQ: pq("Sp"); break;
    case GroupFamily::GL_R: s = "GL(" + std::to_string(g.a) + ",R)"; break;
    case GroupFamily::GL_H: s = "GL(" + std::to_string(g.a) + ",H)"; break;
    case GroupFamily::Sp_R: s = "Sp(" + std::to_string(g.a) + ",R)"; break;
    case GroupFamily::Sp_C: s = "Sp(" + std::to_string(g.a) + ",C)"; break;
    case GroupFamily::O_C: s = "O(" + std::to_string(g.a) + ",C)"; break;
    case GroupFamily::OStar: s = "O*(" + std::to_string(2 * g.a) + ")"; break;
  }
  if (g.dbl) s += "^2";
  return s;
}

// Real dimension of the Lie group.
inline long group_dim(const GroupClass& g) {
  const long m = g.a + g.b;
  long d = 0;
  switch (g.fam) {
    case GroupFamily::OrthPQ: d = m * (m - 1) / 2; break;
    case GroupFamily::UnitPQ: d = m * m; break;
    case GroupFamily::SympPQ: d = m * (2 * m + 1); break;
    case GroupFamily::GL_R: d = g.a * g.a; break;
    case GroupFamily::GL_H: d = 4 * g.a * g.a; break;
    case GroupFamily::Sp_R: d = g.a * (2 * g.a + 1); break;
    case GroupFamily::Sp_C: d = 2 * g.a * (2 * g.a + 1); break;
    case GroupFamily::O_C: d = g.a * (g.a - 1); break;
    case GroupFamily::OStar: d = g.a * (2 * g.a - 1); break;
  }
  return g.dbl ? 2 * d : d;
}

// Dimension of the noncompact part: dim G minus dim of a maximal compact.
inline long group_noncompact_dim(const GroupClass& g) {
  long d = 0;
  switch (g.fam) {
    case GroupFamily::OrthPQ: d = g.a * g.b; break;
    case GroupFamily::UnitPQ: d = 2 * g.a * g.b; break;
    case GroupFamily::SympPQ: d = 4 * g.a * g.b; break;
    case GroupFamily::GL_R: d = g.a * (g.a + 1) / 2; break;
    case GroupFamily::GL_H: d = 2 * g.a * g.a - g.a; break;
    case GroupFamily::Sp_R: d = g.a * g.a + g.a; break;
    case GroupFamily::Sp_C: d = g.a * (2 * g.a + 1); break;
    case GroupFamily::O_C: d = g.a * (g.a - 1) / 2; break;
    case GroupFamily::OStar: d = g.a * g.a - g.a; break;
  }
  return g.dbl ? 2 * d : d;
}

namespace detail {

// Compact case: G(0,q) is the isometry group of the hermitian form that the
// regular representation of C(0,q-1) preserves.
inline GroupClass unitary_group_of(const CliffordClass& c) {
  GroupFamily f = c.ground == Ground::R   ? GroupFamily::OrthPQ
                  : c.ground == Ground::C ? GroupFamily::UnitPQ
                                          : GroupFamily::SympPQ;
  return GroupClass{f, c.n, 0, c.dbl};
}

}  // namespace detail

inline GroupClass classify_group(Sig s) {
  if (s.p == 0 && s.q == 0) return GroupClass{GroupFamily::OrthPQ, 1, 0, false};
  if (s.p == 0) return detail::unitary_group_of(classify_clifford(Sig{0, s.q - 1}));
  if (s.q == 0) return classify_group(Sig{0, s.p});

  const int pm = static_cast<int>(((s.p - s.q) % 8 + 8) % 8);
  const int sm = static_cast<int>(s.n() % 8);
  const long total = static_cast<long>(s.n());
  const auto pow2 = [&](long shift) {
    if (shift < 0) throw std::logic_error("classify_group: negative size exponent");
    return 1L << shift;
  };
  switch (pm) {
    case 0:
      if (sm == 0) return GroupClass{GroupFamily::OrthPQ, pow2((total - 4) / 2),
                                     pow2((total - 4) / 2), true};
      if (sm == 4) return GroupClass{GroupFamily::Sp_R, pow2((total - 4) / 2), 0, true};
      return GroupClass{GroupFamily::GL_R, pow2((total - 2) / 2), 0, false};
    case 4:
      if (sm == 0) return GroupClass{GroupFamily::OStar, 2 * pow2((total - 6) / 2), 0, true};
      if (sm == 4) return GroupClass{GroupFamily::SympPQ, pow2((total - 6) / 2),
                                     pow2((total - 6) / 2), true};
      return GroupClass{GroupFamily::GL_H, pow2((total - 4) / 2), 0, false};
    case 2:
    case 6:
      if (sm == 0) return GroupClass{GroupFamily::O_C, pow2((total - 2) / 2), 0, false};
      if (sm == 4) return GroupClass{GroupFamily::Sp_C, pow2((total - 4) / 2), 0, false};
      return GroupClass{GroupFamily::UnitPQ, pow2((total - 4) / 2), pow2((total - 4) / 2),
                        false};
    case 1:
    case 7:
      if (sm == 1 || sm == 7)
        return GroupClass{GroupFamily::OrthPQ, pow2((total - 3) / 2), pow2((total - 3) / 2),
                          false};
      return GroupClass{GroupFamily::Sp_R, pow2((total - 3) / 2), 0, false};
    default:  // pm == 3 or 5
      if (sm == 1 || sm == 7)
        return GroupClass{GroupFamily::OStar, 2 * pow2((total - 5) / 2), 0, false};
      return GroupClass{GroupFamily::SympPQ, pow2((total - 5) / 2), pow2((total - 5) / 2),
                        false};
  }
}

}  // namespace ck

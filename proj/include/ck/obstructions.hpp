#pragma once

#include <utility>

#include "ck/cones.hpp"
#include "ck/groups.hpp"

namespace ck {

// Equal real ranks force every properly discontinuous subgroup to be finite,
// so a noncompact quotient can never be compact.
inline bool calabi_markus(const GroupStats& g, const GroupStats& h) {
  return g.real_rank == h.real_rank;
}

// A subgroup L acting properly with a(L) inside a(H) but d(L) > d(H) leaves
// no room for a compact quotient of G/H. The zero cone (compact L) never
// obstructs.
inline bool maximality_obstruction(const ConeSet& aH, long dH, const ConeSet& aL, long dL) {
  if (aL.expanded().empty()) return false;
  return cone_contained(aL, aH) && dL > dH;
}

// rank G = rank H together with rank K > rank(H cap K) is incompatible with
// a compact quotient. The caller resolves H cap K (catalog data, defaulting
// to a maximal compact of H).
inline bool rank_parity_obstruction(const GroupStats& g, const GroupStats& h,
                                    long rank_h_cap_k) {
  return g.rank == h.rank && g.rank_k > rank_h_cap_k;
}

// Signature of the G-invariant pseudo-Riemannian metric on G/H induced by
// the Killing form: (d(G)-d(H), dim G - dim H - d(G) + d(H)).
inline std::pair<long, long> pseudo_riemannian_signature(const GroupStats& g,
                                                         const GroupStats& h) {
  const long minus = g.d - h.d;
  const long plus = (g.dim - h.dim) - minus;
  return {minus, plus};
}

}  // namespace ck

#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ck/multivector.hpp"

namespace ck {

// Canonical text form. Blades print their generators in ascending canonical
// order as v+<i> / v-<j>; terms are joined with " + " / " - "; a unit
// coefficient on a nonscalar blade is omitted. Example: "3/2*v+1v-2 - 1".
inline std::string blade_str(const Sig& s, Mask m) {
  std::string out;
  for (int i = 1; i <= s.p; ++i)
    if (m & plus_bit(s, i)) out += "v+" + std::to_string(i);
  for (int j = 1; j <= s.q; ++j)
    if (m & minus_bit(s, j)) out += "v-" + std::to_string(j);
  return out;
}

inline std::string to_string(const Mv& a) {
  if (a.terms.empty()) return "0";
  // Canonical order: blade terms by ascending mask, scalar term last.
  std::vector<std::pair<Mask, Rat>> ordered;
  for (const auto& [m, c] : a.terms)
    if (m != 0) ordered.emplace_back(m, c);
  if (auto it = a.terms.find(0); it != a.terms.end()) ordered.emplace_back(0, it->second);
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    Rat ac = abs(c);
    if (m == 0) {
      out += rat_str(ac);
    } else {
      if (!is_one(ac)) out += rat_str(ac) + "*";
      out += blade_str(a.sig, m);
    }
  }
  return out;
}

namespace detail {

inline void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline bool parse_uint(const std::string& s, size_t& i, long& out) {
  size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) return false;
  out = std::stol(s.substr(start, i - start));
  return true;
}

}  // namespace detail

// Parses the text form back into a multivector of the given signature.
// Accepts generators in any order inside a term (the geometric product
// normalizes), so parsing is a left inverse of printing.
inline Mv parse_mv(const Sig& sig, const std::string& text) {
  check_sig(sig);
  Mv result(sig);
  size_t i = 0;
  detail::skip_ws(text, i);
  if (i >= text.size()) throw std::invalid_argument("empty multivector literal");
  if (text.compare(i, 1, "0") == 0 && i + 1 >= text.size()) return result;

  bool expect_term = true;
  int sign = 1;
  while (i < text.size()) {
    detail::skip_ws(text, i);
    if (i >= text.size()) break;
    if (!expect_term) {
      if (text[i] == '+') sign = 1;
      else if (text[i] == '-') sign = -1;
      else throw std::invalid_argument("expected + or - between terms");
      ++i;
      expect_term = true;
      continue;
    }
    if (text[i] == '-') {  // leading minus on the first term
      sign = -sign;
      ++i;
      detail::skip_ws(text, i);
    }
    Rat coeff = 1;
    bool saw_number = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      long num = 0;
      detail::parse_uint(text, i, num);
      long den = 1;
      if (i < text.size() && text[i] == '/') {
        ++i;
        if (!detail::parse_uint(text, i, den))
          throw std::invalid_argument("malformed rational coefficient");
      }
      coeff = frac(num, den);
      saw_number = true;
    }
    if (i < text.size() && text[i] == '*') ++i;
    Mv term = Mv::scalar(sig, 1);
    bool saw_gen = false;
    while (i < text.size() && text[i] == 'v') {
      ++i;
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw std::invalid_argument("generator must be v+<i> or v-<j>");
      const char kind = text[i++];
      long idx = 0;
      if (!detail::parse_uint(text, i, idx))
        throw std::invalid_argument("generator needs an index");
      term = term * (kind == '+' ? Mv::gen_plus(sig, static_cast<int>(idx))
                                 : Mv::gen_minus(sig, static_cast<int>(idx)));
      saw_gen = true;
    }
    if (!saw_number && !saw_gen)
      throw std::invalid_argument("malformed term in multivector literal");
    result = result + (sign < 0 ? -(coeff * term) : coeff * term);
    sign = 1;
    expect_term = false;
    detail::skip_ws(text, i);
  }
  if (expect_term) throw std::invalid_argument("dangling sign in multivector literal");
  return result;
}

}  // namespace ck

#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ck {

struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Atomic classical or exceptional real Lie group. PQ families use (a,b) as
// the signature; single-parameter families keep their size in a. O_STAR(n)
// is O*(2n), SU_STAR(n) is SU*(2n).
enum class Fam {
  GL_R,
  GL_C,
  GL_H,
  SL_R,
  SL_C,
  SU_STAR,
  O_PQ,
  SO_PQ,
  SPIN,
  U_PQ,
  SU_PQ,
  SP_PQ,
  SP_R,
  SP_C,
  O_C,
  O_STAR,
  G2_SPLIT,
  F4_4,
  E6_6,
  E6_2,
  E6_M14,
  E6_M26,
  E7_7,
  E7_M5,
  E7_M25,
  E8_8,
  F4_C,
  E6_C,
  TORUS_SPLIT,
  TORUS_COMPACT
};

struct Atom {
  Fam fam = Fam::TORUS_SPLIT;
  long a = 0;
  long b = 0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

// Product of atoms, optionally inside a determinant-one wrapper S(...) and
// optionally doubled (G x G). A wrapped group appearing as one factor of a
// larger product, as in S(U(4)xU(2))xSU(2), is kept as a sub-descriptor so
// its determinant correction stays local to it.
struct GroupDesc {
  std::vector<Atom> atoms;
  bool s_wrapper = false;
  bool dbl = false;
  std::vector<GroupDesc> sub;
};

// dim and d = dim - dim K over R; rank of a Cartan subgroup of the real
// group; real_rank of a maximal split torus; same data for a maximal
// compact K.
struct GroupStats {
  long dim = 0;
  long d = 0;
  long rank = 0;
  long real_rank = 0;
  long dim_k = 0;
  long rank_k = 0;
};

inline GroupStats atom_stats(const Atom& g) {
  const long a = g.a, b = g.b, m = a + b;
  if (a < 0 || b < 0) throw std::invalid_argument("negative group parameter");
  GroupStats s;
  switch (g.fam) {
    case Fam::GL_R:
      s = {a * a, 0, a, a, a * (a - 1) / 2, a / 2};
      break;
    case Fam::GL_C:
      s = {2 * a * a, 0, 2 * a, a, a * a, a};
      break;
    case Fam::GL_H:
      s = {4 * a * a, 0, 2 * a, a, a * (2 * a + 1), a};
      break;
    case Fam::SL_R:
      s = {a * a - 1, 0, a - 1, a - 1, a * (a - 1) / 2, a / 2};
      break;
    case Fam::SL_C:
      s = {2 * (a * a - 1), 0, 2 * (a - 1), a - 1, a * a - 1, a - 1};
      break;
    case Fam::SU_STAR:
      s = {4 * a * a - 1, 0, 2 * a - 1, a - 1, a * (2 * a + 1), a};
      break;
    case Fam::O_PQ:
    case Fam::SO_PQ:
    case Fam::SPIN:
      s = {m * (m - 1) / 2, 0, m / 2, std::min(a, b),
           a * (a - 1) / 2 + b * (b - 1) / 2, a / 2 + b / 2};
      break;
    case Fam::U_PQ:
      s = {m * m, 0, m, std::min(a, b), a * a + b * b, m};
      break;
    case Fam::SU_PQ:
      s = {m * m - 1, 0, m - 1, std::min(a, b), a * a + b * b - 1, m - 1};
      break;
    case Fam::SP_PQ:
      s = {m * (2 * m + 1), 0, m, std::min(a, b),
           a * (2 * a + 1) + b * (2 * b + 1), m};
      break;
    case Fam::SP_R:
      s = {a * (2 * a + 1), 0, a, a, a * a, a};
      break;
    case Fam::SP_C:
      s = {2 * a * (2 * a + 1), 0, 2 * a, a, a * (2 * a + 1), a};
      break;
    case Fam::O_C:
      s = {a * (a - 1), 0, 2 * (a / 2), a / 2, a * (a - 1) / 2, a / 2};
      break;
    case Fam::O_STAR:
      s = {a * (2 * a - 1), 0, a, a / 2, a * a, a};
      break;
    case Fam::G2_SPLIT:
      s = {14, 0, 2, 2, 6, 2};
      break;
    case Fam::F4_4:
      s = {52, 0, 4, 4, 24, 4};
      break;
    case Fam::E6_6:
      s = {78, 0, 6, 6, 36, 4};
      break;
    case Fam::E6_2:
      s = {78, 0, 6, 4, 38, 6};
      break;
    case Fam::E6_M14:
      s = {78, 0, 6, 2, 46, 6};
      break;
    case Fam::E6_M26:
      s = {78, 0, 6, 2, 52, 4};
      break;
    case Fam::E7_7:
      s = {133, 0, 7, 7, 63, 7};
      break;
    case Fam::E7_M5:
      s = {133, 0, 7, 4, 69, 7};
      break;
    case Fam::E7_M25:
      s = {133, 0, 7, 3, 79, 7};
      break;
    case Fam::E8_8:
      s = {248, 0, 8, 8, 120, 8};
      break;
    case Fam::F4_C:
      s = {104, 0, 8, 4, 52, 4};
      break;
    case Fam::E6_C:
      s = {156, 0, 12, 6, 78, 6};
      break;
    case Fam::TORUS_SPLIT:
      s = {a, 0, a, a, 0, 0};
      break;
    case Fam::TORUS_COMPACT:
      s = {a, 0, a, 0, a, a};
      break;
  }
  s.d = s.dim - s.dim_k;
  return s;
}

inline GroupStats group_stats(const GroupDesc& g) {
  GroupStats s;
  bool noncompact = false;
  for (const Atom& atom : g.atoms) {
    const GroupStats t = atom_stats(atom);
    s.dim += t.dim;
    s.d += t.d;
    s.rank += t.rank;
    s.real_rank += t.real_rank;
    s.dim_k += t.dim_k;
    s.rank_k += t.rank_k;
    if (t.d > 0) noncompact = true;
  }
  for (const GroupDesc& f : g.sub) {
    const GroupStats t = group_stats(f);
    s.dim += t.dim;
    s.d += t.d;
    s.rank += t.rank;
    s.real_rank += t.real_rank;
    s.dim_k += t.dim_k;
    s.rank_k += t.rank_k;
    if (t.d > 0) noncompact = true;
  }
  if (g.s_wrapper) {
    // Cutting the determinant removes one torus direction, split when some
    // factor is noncompact and compact otherwise. When every factor is a
    // complex group the determinant is a complex scalar, so a whole C^x goes
    // away: one split and one compact direction.
    bool all_complex = !g.atoms.empty() && g.sub.empty();
    for (const Atom& atom : g.atoms)
      all_complex = all_complex && (atom.fam == Fam::GL_C || atom.fam == Fam::SL_C ||
                                    atom.fam == Fam::SP_C || atom.fam == Fam::O_C);
    if (all_complex) {
      s.dim -= 2;
      s.rank -= 2;
      s.d -= 1;
      s.real_rank -= 1;
      s.dim_k -= 1;
      s.rank_k -= 1;
    } else {
      s.dim -= 1;
      s.rank -= 1;
      if (noncompact) {
        s.d -= 1;
        s.real_rank -= 1;
      } else {
        s.dim_k -= 1;
        s.rank_k -= 1;
      }
    }
  }
  if (g.dbl) {
    s.dim *= 2;
    s.d *= 2;
    s.rank *= 2;
    s.real_rank *= 2;
    s.dim_k *= 2;
    s.rank_k *= 2;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Descriptor parsing. Grammar (ASCII):
//   desc   := "S(" prod ")" ["^2"] | prod ["^2"]
//   prod   := factor { "x" factor }
//   factor := atom | "S(" prod ")"
//   atom   := NAME "(" arg { "," arg } ")" | "R" | "iR"
//   arg    := expr | "R" | "C" | "H"
//   expr   := term { ("+"|"-") term }
//   term   := INT | INT ["*"] prim | prim
//   prim   := VAR | "floor" "(" expr "/" INT ")" | "min" "(" expr {"," expr} ")"
//             | "(" expr ")"
// VAR is a single lowercase letter bound by the environment. NAME is one of
// the classical family names (upper or lower case, star suffixes allowed) or
// an exceptional label like G2(2), E7(-5), F4(C).

namespace detail {

class ExprParser {
 public:
  ExprParser(const std::string& s, const std::map<std::string, long>& env)
      : s_(s), env_(env) {}

  long parse() {
    const long v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw std::invalid_argument("trailing characters in expression: " + s_);
    return v;
  }

 private:
  long expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    long v = term();
    if (neg) v = -v;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        const long t = term();
        v = c == '+' ? v + t : v - t;
      } else {
        return v;
      }
    }
  }

  long term() {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const long coeff = integer();
      skip_ws();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        return coeff * primary();
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '(') return coeff * primary();
      return coeff;
    }
    return primary();
  }

  long primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      const long v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return integer();
    std::string name;
    while (std::isalpha(static_cast<unsigned char>(peek()))) name += s_[pos_++];
    if (name.empty()) throw std::invalid_argument("malformed expression: " + s_);
    if (name == "floor") {
      expect('(');
      const long num = expr();
      expect('/');
      const long den = integer();
      expect(')');
      if (den <= 0) throw std::invalid_argument("floor with nonpositive divisor");
      long q = num / den;
      if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
      return q;
    }
    if (name == "min") {
      expect('(');
      long v = expr();
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        v = std::min(v, expr());
        skip_ws();
      }
      expect(')');
      return v;
    }
    const auto it = env_.find(name);
    if (it == env_.end())
      throw std::invalid_argument("unbound variable '" + name + "' in expression: " + s_);
    return it->second;
  }

  long integer() {
    skip_ws();
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
    if (digits.empty()) throw std::invalid_argument("expected integer in expression: " + s_);
    return std::stol(digits);
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw std::invalid_argument(std::string("expected '") + c + "' in expression: " + s_);
    ++pos_;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }

  const std::string& s_;
  const std::map<std::string, long>& env_;
  std::size_t pos_ = 0;
};

// Splits "a,b,c" at top-level commas (parenthesis aware).
inline std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && s[b] == ' ') ++b;
  while (e > b && s[e - 1] == ' ') --e;
  return s.substr(b, e - b);
}

inline long require_even(long v, const std::string& what) {
  if (v < 0 || v % 2 != 0)
    throw std::invalid_argument(what + " needs an even nonnegative parameter, got " +
                                std::to_string(v));
  return v / 2;
}

inline Atom exceptional_atom(const std::string& name, const std::string& arg) {
  const std::string key = name + "(" + arg + ")";
  if (name == "G2" && arg == "2") return {Fam::G2_SPLIT, 0, 0};
  if (name == "F4" && arg == "4") return {Fam::F4_4, 0, 0};
  if (name == "F4" && arg == "C") return {Fam::F4_C, 0, 0};
  if (name == "E6" && arg == "6") return {Fam::E6_6, 0, 0};
  if (name == "E6" && arg == "2") return {Fam::E6_2, 0, 0};
  if (name == "E6" && arg == "-14") return {Fam::E6_M14, 0, 0};
  if (name == "E6" && arg == "-26") return {Fam::E6_M26, 0, 0};
  if (name == "E6" && arg == "C") return {Fam::E6_C, 0, 0};
  if (name == "E7" && arg == "7") return {Fam::E7_7, 0, 0};
  if (name == "E7" && arg == "-5") return {Fam::E7_M5, 0, 0};
  if (name == "E7" && arg == "-25") return {Fam::E7_M25, 0, 0};
  if (name == "E8" && arg == "8") return {Fam::E8_8, 0, 0};
  throw unsupported_error("unknown exceptional form: " + key);
}

inline Atom parse_atom(const std::string& raw, const std::map<std::string, long>& env) {
  const std::string s = strip(raw);
  if (s == "R") return {Fam::TORUS_SPLIT, 1, 0};
  if (s == "iR") return {Fam::TORUS_COMPACT, 1, 0};

  std::size_t i = 0;
  std::string name;
  while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '*'))
    name += s[i++];
  if (i >= s.size() || s[i] != '(' || s.back() != ')')
    throw unsupported_error("cannot parse group atom: " + s);
  const std::string inner = s.substr(i + 1, s.size() - i - 2);
  std::vector<std::string> args = split_args(inner);
  for (auto& a : args) a = strip(a);

  // Upper-case the family name; lie-algebra spellings share the group stats.
  std::string uname;
  for (char c : name) uname += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));

  const auto expr = [&](const std::string& a) { return ExprParser(a, env).parse(); };
  const auto is_field = [](const std::string& a) { return a == "R" || a == "C" || a == "H"; };

  if (uname == "G2" || uname == "F4" || uname == "E6" || uname == "E7" || uname == "E8") {
    if (args.size() != 1) throw unsupported_error("exceptional form needs one label: " + s);
    if (args[0] == "C") return exceptional_atom(uname, "C");
    return exceptional_atom(uname, std::to_string(expr(args[0])));
  }
  if (uname == "TORUS") {
    if (args.size() != 1) throw std::invalid_argument("Torus takes one parameter");
    return {Fam::TORUS_SPLIT, expr(args[0]), 0};
  }
  if (uname == "GL") {
    if (args.size() != 2 || !is_field(args[1]))
      throw unsupported_error("GL needs (n, field): " + s);
    const long n = expr(args[0]);
    return {args[1] == "R" ? Fam::GL_R : args[1] == "C" ? Fam::GL_C : Fam::GL_H, n, 0};
  }
  if (uname == "SL") {
    if (args.size() != 2 || !is_field(args[1]) || args[1] == "H")
      throw unsupported_error("SL needs (n, R|C): " + s);
    return {args[1] == "R" ? Fam::SL_R : Fam::SL_C, expr(args[0]), 0};
  }
  if (uname == "SU*" || uname == "U*" || uname == "SO*" || uname == "O*") {
    if (args.size() != 1) throw unsupported_error("starred family needs one parameter: " + s);
    const long half = require_even(expr(args[0]), uname);
    if (uname == "SU*") return {Fam::SU_STAR, half, 0};
    if (uname == "U*") return {Fam::GL_H, half, 0};
    return {Fam::O_STAR, half, 0};
  }
  if (uname == "SU") {
    if (args.size() == 1) return {Fam::SU_PQ, expr(args[0]), 0};
    return {Fam::SU_PQ, expr(args[0]), expr(args[1])};
  }
  if (uname == "U") {
    if (args.size() == 1) return {Fam::U_PQ, expr(args[0]), 0};
    return {Fam::U_PQ, expr(args[0]), expr(args[1])};
  }
  if (uname == "SO" || uname == "O") {
    if (args.size() == 2 && args[1] == "C") return {Fam::O_C, expr(args[0]), 0};
    if (args.size() == 1) return {uname == "SO" ? Fam::SO_PQ : Fam::O_PQ, expr(args[0]), 0};
    return {uname == "SO" ? Fam::SO_PQ : Fam::O_PQ, expr(args[0]), expr(args[1])};
  }
  if (uname == "SP") {
    if (args.size() == 2 && args[1] == "R") return {Fam::SP_R, expr(args[0]), 0};
    if (args.size() == 2 && args[1] == "C") return {Fam::SP_C, expr(args[0]), 0};
    if (args.size() == 1) return {Fam::SP_PQ, expr(args[0]), 0};
    return {Fam::SP_PQ, expr(args[0]), expr(args[1])};
  }
  if (uname == "SPIN") {
    // The complex spin group shares its Lie stats with SO(n,C).
    if (args.size() == 2 && args[1] == "C") return {Fam::O_C, expr(args[0]), 0};
    if (args.size() == 1) return {Fam::SPIN, expr(args[0]), 0};
    return {Fam::SPIN, expr(args[0]), expr(args[1])};
  }
  throw unsupported_error("unknown group family: " + name);
}

}  // namespace detail

inline GroupDesc parse_group(const std::string& raw,
                             const std::map<std::string, long>& env = {}) {
  std::string s = detail::strip(raw);
  GroupDesc g;
  // The trivial group: no atoms, all stats zero.
  if (s == "e" || s == "{e}" || s == "1") return g;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "^2") == 0) {
    g.dbl = true;
    s = detail::strip(s.substr(0, s.size() - 2));
  }
  if (s.size() > 2 && s.compare(0, 2, "S(") == 0 && s.back() == ')') {
    // Check the opening paren really closes at the end.
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) {
        wraps = false;
        break;
      }
    }
    if (wraps) {
      g.s_wrapper = true;
      s = s.substr(2, s.size() - 3);
    }
  }
  // Split the product on 'x' or '+' separators outside parentheses; the
  // latter spelling appears in Lie-algebra direct sums.
  int depth = 0;
  std::string cur;
  std::vector<std::string> parts;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == 'x' || c == '+') && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (const auto& part : parts) {
    const std::string t = detail::strip(part);
    if (t.size() > 2 && t.compare(0, 2, "S(") == 0 && t.back() == ')')
      g.sub.push_back(parse_group(t, env));
    else
      g.atoms.push_back(detail::parse_atom(t, env));
  }
  if (g.atoms.empty() && g.sub.empty()) throw std::invalid_argument("empty group descriptor");
  return g;
}

inline GroupStats stats_of(const std::string& descriptor,
                           const std::map<std::string, long>& env = {}) {
  return group_stats(parse_group(descriptor, env));
}

inline long eval_param(const std::string& expr, const std::map<std::string, long>& env) {
  return detail::ExprParser(expr, env).parse();
}

}  // namespace ck

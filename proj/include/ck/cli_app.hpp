#pragma once

// Command line front end. Every verb maps to one library operation; output
// is plain text or, with --json, a machine-readable record. Exit codes:
// 0 success (including Exists and Open verdicts), 1 NotExists or a failed
// verification, 2 usage error, 3 incomplete verification.

#include <iostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ck/catalog.hpp"
#include "ck/motion.hpp"
#include "ck/real_rep.hpp"

namespace ck::cli {

// Matrix-algebra display form: R(256) reads M(256,R), doubled classes read
// as a direct sum.
inline std::string clifford_display(const CliffordClass& c) {
  const std::string f(1, ground_letter(c.ground));
  const std::string base = c.n > 1 ? "M(" + std::to_string(c.n) + "," + f + ")" : f;
  return c.dbl ? base + " + " + base : base;
}

namespace detail_cli {

inline nlohmann::json jmat(const QMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (long r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (long c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json jvec(const std::vector<Rat>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Rat& r : v) a.push_back(rat_str(r));
  return a;
}

inline void print_qmat(std::ostream& os, const QMat& m, const char* indent = "  ") {
  for (long r = 0; r < m.rows(); ++r) {
    os << indent;
    for (long c = 0; c < m.cols(); ++c) {
      if (c) os << " ";
      os << rat_str(m.at(r, c));
    }
    os << "\n";
  }
}

inline void print_vec(std::ostream& os, const std::vector<Rat>& v) {
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(v[i]);
  }
  os << ")";
}

inline QMat givens(long n, long i, long j, const Rat& c, const Rat& s) {
  QMat g = QMat::identity(n);
  g.at(i, i) = c;
  g.at(j, j) = c;
  g.at(i, j) = -s;
  g.at(j, i) = s;
  return g;
}

// Seed-deterministic rational motion element: a product of Pythagorean
// Givens rotations with an optional reflection, plus a small rational
// translation. Exactly orthogonal by construction.
inline MotionElement sample_motion(long n, std::mt19937_64& rng) {
  static const long tri[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {20, 21, 29}};
  std::uniform_int_distribution<long> slot(0, n - 1), which(0, 3), num(-3, 3), den(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  QMat k = QMat::identity(n);
  if (coin(rng)) {
    QMat flip = QMat::identity(n);
    flip.at(0, 0) = -1;
    k = k * flip;
  }
  for (long t = 0; t < 2 * n; ++t) {
    const long i = slot(rng);
    long j = slot(rng);
    if (i == j) j = (j + 1) % n;
    const auto& a = tri[which(rng)];
    const Rat c(a[0], a[2]), s(a[1], a[2]);
    k = k * givens(n, i, j, c, coin(rng) ? s : -s);
  }
  std::vector<Rat> v(static_cast<std::size_t>(n));
  for (Rat& e : v) e = Rat(num(rng), den(rng));
  return motion(std::move(k), std::move(v));
}

inline int verdict_exit(const DecisionRecord& r) {
  return r.verdict == DecisionRecord::Verdict::NotExists ? 1 : 0;
}

// "Exists (admissible-triple)"; Open verdicts surface the conjecture note.
inline std::string verdict_line(const DecisionRecord& r) {
  const bool open_note = r.verdict == DecisionRecord::Verdict::Open && !r.note.empty();
  return to_string(r.verdict) + " (" + (open_note ? r.note : r.criterion) + ")";
}

inline nlohmann::json report_json(const CheckReport& rep) {
  nlohmann::json items = nlohmann::json::array();
  for (const CheckItem& it : rep.items)
    items.push_back(
        {{"name", it.name}, {"status", to_string(it.status)}, {"detail", it.detail}});
  return {{"subject", rep.subject}, {"items", items}, {"overall", to_string(rep.overall())}};
}

inline void print_report(std::ostream& out, const CheckReport& rep) {
  out << rep.subject << "\n";
  for (const CheckItem& it : rep.items) {
    out << "  [" << to_string(it.status) << "] " << it.name;
    if (!it.detail.empty()) out << ": " << it.detail;
    out << "\n";
  }
}

}  // namespace detail_cli

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail_cli;
  using nlohmann::json;

  CLI::App app{"exact arithmetic toolkit for Clifford algebras and compact Clifford-Klein forms"};
  app.name("ckt");
  app.require_subcommand(1);

  bool as_json = false;
  unsigned long seed = 12345;
  long max_size = 512;
  std::string catalog_path = Catalog::default_path();
  app.add_flag("--json", as_json, "emit a JSON record instead of text");
  app.add_option("--seed", seed, "seed for sampled verification points");
  app.add_option("--max-size", max_size, "largest representation size rep will build");
  app.add_option("--catalog", catalog_path, "catalog data file");

  long p = 0, q = 0, n = 3;
  std::string kappa, space;

  const auto num_range = CLI::Range(0L, 62L);
  CLI::App* c_clifford = app.add_subcommand("clifford", "classify C(p,q) as a matrix algebra");
  c_clifford->add_option("p", p, "plus generators")->required()->check(num_range);
  c_clifford->add_option("q", q, "minus generators")->required()->check(num_range);

  CLI::App* c_group = app.add_subcommand("group", "classify the twisted-conjugation group G(p,q)");
  c_group->add_option("p", p)->required()->check(CLI::Range(0L, 8L));
  c_group->add_option("q", q)->required()->check(CLI::Range(0L, 8L));

  CLI::App* c_rep = app.add_subcommand("rep", "print a minimal faithful real representation of C(p,q)");
  c_rep->add_option("p", p)->required()->check(num_range);
  c_rep->add_option("q", q)->required()->check(num_range);

  CLI::App* c_hr = app.add_subcommand("hr", "Hurwitz-Radon decomposition and rho(q)");
  c_hr->add_option("q", q)->required();

  CLI::App* c_fields = app.add_subcommand("fields", "independent tangent vector fields on the unit sphere of R^q");
  c_fields->add_option("q", q, "ambient dimension")->required();
  c_fields->add_option("p", p, "number of fields")->required();

  CLI::App* c_sos = app.add_subcommand("sos", "sum-of-squares identity of size [p,q,q]");
  c_sos->add_option("p", p)->required();
  c_sos->add_option("q", q)->required();

  CLI::App* c_sf = app.add_subcommand("spaceform", "existence of a compact space form of signature (p,q)");
  c_sf->add_option("p", p)->required()->check(num_range);
  c_sf->add_option("q", q)->required()->check(num_range);
  c_sf->add_option("kappa", kappa, "curvature sign: + 0 -")
      ->required()
      ->check(CLI::IsMember({"+", "0", "-"}));

  CLI::App* c_tan = app.add_subcommand("tangential", "existence of a compact tangential space form of signature (p,q)");
  c_tan->add_option("p", p)->required()->check(num_range);
  c_tan->add_option("q", q)->required()->check(num_range);

  CLI::App* c_decide = app.add_subcommand("decide", "run the decision pipeline on a catalog space");
  c_decide->add_option("space", space, "catalog name, e.g. SU(2,2n)/Sp(1,n)")->required();

  CLI::App* c_check = app.add_subcommand("check-triple", "verify the admissible triples recorded for a catalog space");
  c_check->add_option("space", space)->required();

  CLI::App* c_verify = app.add_subcommand("verify-tables", "recompute every table the catalog encodes");

  CLI::App* c_jordan = app.add_subcommand("jordan", "Jordan decomposition of a sampled rational motion of R^n");
  c_jordan->add_option("n", n, "dimension")->required()->check(CLI::Range(1L, 8L));

  for (CLI::App* sub :
       {c_clifford, c_group, c_rep, c_hr, c_fields, c_sos, c_sf, c_tan, c_decide, c_check,
        c_verify, c_jordan})
    sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    err << "run 'ckt --help' for usage\n";
    return 2;
  }

  try {
    if (c_clifford->parsed()) {
      if (p + q > 62) {
        err << "p + q must stay below 63\n";
        return 2;
      }
      const CliffordClass c = classify_clifford(Sig{static_cast<int>(p), static_cast<int>(q)});
      if (as_json) {
        out << json{{"p", p},
                    {"q", q},
                    {"class", to_string(c)},
                    {"display", clifford_display(c)},
                    {"ground", std::string(1, ground_letter(c.ground))},
                    {"size", c.n},
                    {"doubled", c.dbl},
                    {"real_dim", clifford_class_real_dim(c)}}
                   .dump()
            << "\n";
      } else {
        out << clifford_display(c) << "\n";
      }
      return 0;
    }

    if (c_group->parsed()) {
      const GroupClass g = classify_group(Sig{static_cast<int>(p), static_cast<int>(q)});
      if (as_json) {
        out << json{{"p", p},
                    {"q", q},
                    {"group", to_string(g)},
                    {"dim", group_dim(g)},
                    {"d", group_noncompact_dim(g)}}
                   .dump()
            << "\n";
      } else {
        out << to_string(g) << ": dim " << group_dim(g) << ", d " << group_noncompact_dim(g)
            << "\n";
      }
      return 0;
    }

    if (c_rep->parsed()) {
      const GRep r = build_real_rep(Sig{static_cast<int>(p), static_cast<int>(q)});
      if (r.dim > max_size) {
        err << "representation size " << r.dim << " exceeds the --max-size cap " << max_size
            << "\n";
        return 1;
      }
      if (as_json) {
        // Streamed by hand: the largest outputs are megabytes of rationals.
        out << "{\"p\":" << p << ",\"q\":" << q << ",\"class\":\"" << to_string(r.cls)
            << "\",\"display\":\"" << clifford_display(r.cls) << "\",\"size\":" << r.dim
            << ",\"generators\":[";
        for (std::size_t gi = 0; gi < r.gens.size(); ++gi) {
          if (gi) out << ",";
          out << "[";
          const QMat& m = r.gens[gi];
          for (long row = 0; row < m.rows(); ++row) {
            if (row) out << ",";
            out << "[";
            for (long col = 0; col < m.cols(); ++col) {
              if (col) out << ",";
              out << "\"" << rat_str(m.at(row, col)) << "\"";
            }
            out << "]";
          }
          out << "]";
        }
        out << "]}\n";
      } else {
        out << "C(" << p << "," << q << ") ~ " << clifford_display(r.cls)
            << ", faithful real representation of size " << r.dim << "\n";
        for (std::size_t gi = 0; gi < r.gens.size(); ++gi) {
          out << "e" << gi + 1 << " (square " << (static_cast<long>(gi) < p ? "+1" : "-1")
              << "):\n";
          print_qmat(out, r.gens[gi]);
        }
      }
      return 0;
    }

    if (c_hr->parsed()) {
      if (q == 0) {
        if (as_json)
          out << json{{"q", 0}, {"rho", "infinity"}}.dump() << "\n";
        else
          out << "rho(0) = infinity\n";
        return 0;
      }
      const HurwitzDecomposition d = hurwitz_decompose(q);
      if (as_json) {
        out << json{{"q", d.q}, {"u", d.u}, {"alpha", d.alpha}, {"beta", d.beta}, {"rho", d.rho}}
                   .dump()
            << "\n";
      } else {
        out << "q = " << d.q << " = " << d.u << " * 2^(4*" << d.alpha << "+" << d.beta
            << "), rho(q) = 8*" << d.alpha << " + 2^" << d.beta << " = " << d.rho << "\n";
      }
      return 0;
    }

    if (c_fields->parsed()) {
      const SphereVectorFields f = vector_fields_on_sphere(q, p);
      std::mt19937_64 rng(seed);
      bool ok = true;
      for (int t = 0; t < 3 && ok; ++t) ok = f.independent_at(rational_sphere_point(q, rng));
      if (as_json) {
        out << json{{"q", q},
                    {"p", p},
                    {"sphere", "S^" + std::to_string(q - 1)},
                    {"independent_at_samples", ok}}
                   .dump()
            << "\n";
      } else {
        out << p << " tangent vector fields on S^" << q - 1
            << (ok ? ", independent at 3 sampled rational points\n"
                   : ", DEPENDENT at a sampled point\n");
      }
      return ok ? 0 : 1;
    }

    if (c_sos->parsed()) {
      const SosCertificate c = sum_of_squares_identity(p, q);
      if (as_json) {
        nlohmann::json zs = nlohmann::json::array();
        for (const QMat& z : c.z) zs.push_back(jmat(z));
        out << json{{"p", c.p1}, {"q", c.q}, {"z", zs}, {"verified", true}}.dump() << "\n";
      } else {
        out << sos_text(c) << "exact identity verified\n";
      }
      return 0;
    }

    if (c_sf->parsed()) {
      const DecisionRecord r = space_form_status(p, q, kappa[0]);
      if (as_json) {
        out << r.to_json().dump() << "\n";
      } else {
        out << verdict_line(r) << "\n";
        if (r.verdict != DecisionRecord::Verdict::Open && !r.note.empty())
          out << "note: " << r.note << "\n";
      }
      return verdict_exit(r);
    }

    if (c_tan->parsed()) {
      const DecisionRecord r = tangential_space_form_status(p, q, seed);
      if (as_json)
        out << r.to_json().dump() << "\n";
      else
        out << to_string(r.verdict) << " (" << r.evidence.value("comparison", "") << ")\n";
      return verdict_exit(r);
    }

    if (c_decide->parsed()) {
      const Catalog cat = Catalog::load(catalog_path);
      const DecisionRecord r = cat.decide(space);
      if (as_json) {
        out << r.to_json().dump() << "\n";
      } else {
        out << r.space << ": " << verdict_line(r) << "\n";
        if (r.verdict != DecisionRecord::Verdict::Open && !r.note.empty())
          out << "note: " << r.note << "\n";
        if (r.evidence.contains("certificate"))
          out << "certificate: " << r.evidence.at("certificate").get<std::string>() << "\n";
      }
      return verdict_exit(r);
    }

    if (c_check->parsed()) {
      const Catalog cat = Catalog::load(catalog_path);
      const SpaceEntry& e = cat.find(space);
      std::vector<CheckReport> reports;
      reports.push_back(cat.check_entry(e));
      const std::vector<const TripleRow*> rows = cat.triples_for(e.name);
      for (const TripleRow* t : rows) reports.push_back(cat.check_triple(*t));
      if (rows.empty()) {
        CheckReport none{e.name};
        none.add_incomplete("admissible triple recorded",
                            "the catalog lists no subgroup L for this space");
        reports.push_back(std::move(none));
      }
      CheckStatus overall = CheckStatus::Pass;
      for (const CheckReport& rep : reports) {
        if (rep.failed()) overall = CheckStatus::Fail;
        if (overall != CheckStatus::Fail && rep.overall() == CheckStatus::Incomplete)
          overall = CheckStatus::Incomplete;
      }
      if (as_json) {
        nlohmann::json rs = nlohmann::json::array();
        for (const CheckReport& rep : reports) rs.push_back(report_json(rep));
        out << json{{"space", e.name}, {"reports", rs}, {"overall", to_string(overall)}}.dump()
            << "\n";
      } else {
        for (const CheckReport& rep : reports) print_report(out, rep);
        out << "overall: " << to_string(overall) << "\n";
      }
      return overall == CheckStatus::Pass ? 0 : overall == CheckStatus::Fail ? 1 : 3;
    }

    if (c_verify->parsed()) {
      const Catalog cat = Catalog::load(catalog_path);
      const TableRunSummary sum = cat.verify_tables(seed);
      if (as_json) {
        nlohmann::json rs = nlohmann::json::array();
        for (const CheckReport& rep : sum.reports) rs.push_back(report_json(rep));
        out << json{{"passes", sum.passes},
                    {"failures", sum.failures},
                    {"incompletes", sum.incompletes},
                    {"failed_items", sum.failed_items},
                    {"incomplete_items", sum.incomplete_items},
                    {"reports", rs}}
                   .dump()
            << "\n";
      } else {
        out << sum.text();
      }
      return sum.failures == 0 ? 0 : 1;
    }

    if (c_jordan->parsed()) {
      std::mt19937_64 rng(seed);
      const MotionElement g = sample_motion(n, rng);
      const auto [s, w] = jordan_decompose_motion(g);
      const bool recompose = motion_mul(s, w) == g && motion_mul(w, s) == g;
      const bool pure_translation = w.k == QMat::identity(n);
      std::vector<Rat> kv(w.v.size(), Rat(0));
      for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c)
          kv[static_cast<std::size_t>(r)] += g.k.at(r, c) * w.v[static_cast<std::size_t>(c)];
      const bool fixed = kv == w.v;
      if (as_json) {
        out << json{{"n", n},
                    {"g", {{"k", jmat(g.k)}, {"v", jvec(g.v)}}},
                    {"s", {{"k", jmat(s.k)}, {"v", jvec(s.v)}}},
                    {"w", {{"k", jmat(w.k)}, {"v", jvec(w.v)}}},
                    {"checks",
                     {{"recompose", recompose},
                      {"commute", recompose},
                      {"translation_part_trivial_rotation", pure_translation},
                      {"translation_fixed_by_k", fixed}}}}
                   .dump()
            << "\n";
      } else {
        out << "g = (k, v) with k exactly orthogonal, v = ";
        print_vec(out, g.v);
        out << "\nk:\n";
        print_qmat(out, g.k);
        out << "elliptic part s = (k, v2), v2 = ";
        print_vec(out, s.v);
        out << "\ntranslation part w = (I, v1), v1 = ";
        print_vec(out, w.v);
        out << "\nchecks: s*w = w*s = g " << (recompose ? "ok" : "FAILED")
            << "; v1 fixed by k " << (fixed ? "ok" : "FAILED") << "\n";
      }
      return recompose && pure_translation && fixed ? 0 : 1;
    }
  } catch (const existence_error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const resource_error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ck::cli

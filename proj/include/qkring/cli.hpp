#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "adams.hpp"
#include "cohomology.hpp"
#include "kring.hpp"
#include "lens.hpp"
#include "rep_ring.hpp"
#include "serialization.hpp"
#include "truncated.hpp"

namespace qkring::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxCliN = 10;
inline constexpr std::size_t kMaxCliTruncation = 16;
inline constexpr std::size_t kMaxCliAdams = 1000;
inline constexpr std::size_t kMaxCliK = 1024;
inline constexpr std::size_t kMaxCliDegree = 100000;

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations",   "oracle",      "redundancy", "minimality",
                                              "restriction", "confluence", "all"};
  return names;
}

namespace detail {

inline json formal_to_json(const FormalPoly& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) {
    json t = json::object();
    t["v1"] = m.v1;
    t["v2"] = m.v2;
    t["phi"] = m.phi;
    t["coeff"] = c.str();
    out.push_back(std::move(t));
  }
  return out;
}

inline Report minimality_report(const GroupParams& p) {
  Report rep;
  rep.title = "minimality witness";
  const MinimalityWitness w = verify_minimality_witness(p);
  rep.add("all basis products close under Relations 1,2,4,5,6", w.full_set_closes);
  for (const auto& e : w.entries) {
    std::string detail;
    if (e.stuck_pair) {
      detail = KElement::basis_name(e.stuck_pair->first) + "*" + KElement::basis_name(e.stuck_pair->second) +
               " -> " + e.stuck_value.to_string();
    }
    rep.add("without " + relation_name(e.dropped) + " some product is stuck", e.witnessed, detail);
  }
  return rep;
}

inline Report redundancy_report(const GroupParams& p) {
  Report rep;
  rep.title = "Relation 3 redundancy";
  const RedundancyProof proof = relation3_redundancy(p);
  rep.add("(φ+2)·Relation 6 reduces to ±g_" + std::to_string(2 * p.k()) + "(φ) via Relations 1,2,4,5", proof.holds(),
          proof.reduced.to_string());
  return rep;
}

inline Report oracle_report(const GroupParams& p) {
  Report rep;
  rep.title = "character oracle";
  rep.append(verify_structure_constants(p));
  rep.append(verify_orthogonality(p));
  return rep;
}

inline Report confluence_report(const GroupParams& p) {
  Report rep;
  rep.title = "presentation certificate";
  rep.append(verify_local_confluence(p));
  rep.append(verify_commuting_square(p));
  const BasisChange bc = basis_change_matrix(p);
  rep.add("basis change matrix unimodular", bc.unimodular(), "det = " + bc.det.str());
  rep.add("4kφ = f(φ)φ²", verify_f_relation(p));
  return rep;
}

inline Report restriction_report(const GroupParams& p) {
  Report rep;
  rep.title = "lens restriction";
  rep.add("restriction is a ring homomorphism", verify_restriction_hom(p, 32));
  rep.append(verify_relations_vanish(p));
  return rep;
}

inline std::vector<std::pair<std::string, Report>> run_suites(const GroupParams& p, const std::string& suite) {
  std::vector<std::pair<std::string, Report>> out;
  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  if (want("relations")) out.emplace_back("relations", verify_relations_in_R(p));
  if (want("oracle")) out.emplace_back("oracle", oracle_report(p));
  if (want("redundancy")) out.emplace_back("redundancy", redundancy_report(p));
  if (want("minimality")) out.emplace_back("minimality", minimality_report(p));
  if (want("restriction")) out.emplace_back("restriction", restriction_report(p));
  if (want("confluence")) out.emplace_back("confluence", confluence_report(p));
  return out;
}

inline std::string order_text(const std::optional<Integer>& o) { return o ? o->str() : "infinite"; }

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name. Returns 0 on success,
/// 1 when a verification fails, 2 on usage errors.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in R(Q_{2^n}) and the K-ring of BQ_{2^n}", "qkring"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  int n = 3;
  std::size_t trunc = 0;
  int n_max = 6;
  std::size_t trunc_max = 3;
  std::size_t adams_i = 1;
  std::size_t g_k = 2;
  std::size_t coh_p = 0;
  std::string suite = "all";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n", n, "Group exponent: Q_{2^n}")->check(CLI::Range(3, kMaxCliN));
    if (required) opt->required();
  };

  auto* present = app.add_subcommand("present", "Print the generators and minimal relations");
  add_n(present, true);
  add_format(present);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_n(verify, true);
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suite_names()));
  add_format(verify);

  auto* order = app.add_subcommand("order", "Order of φ in R(Q)/φ^{N+2}R(Q)");
  add_n(order, true);
  order->add_option("--N", trunc, "Truncation level")->required()->check(CLI::Range(std::size_t{0}, kMaxCliTruncation));
  add_format(order);

  auto* table = app.add_subcommand("table", "Grid of orders of φ against 2^{n+2N}");
  table->add_option("--n-max", n_max, "Largest n")->check(CLI::Range(3, kMaxCliN));
  table->add_option("--N-max", trunc_max, "Largest N")->check(CLI::Range(std::size_t{0}, kMaxCliTruncation));
  add_format(table);

  auto* adams = app.add_subcommand("adams", "Print ψ^i(φ)");
  adams->add_option("--i", adams_i, "Degree")->required()->check(CLI::Range(std::size_t{1}, kMaxCliAdams));
  add_format(adams);

  auto* g = app.add_subcommand("g", "Print g_{2k}(φ)");
  g->add_option("--k", g_k, "k")->required()->check(CLI::Range(std::size_t{2}, kMaxCliK));
  add_format(g);

  auto* coh = app.add_subcommand("cohomology", "H^p(BQ_{4k}; Z)");
  coh->add_option("--p", coh_p, "Degree")->required()->check(CLI::Range(std::size_t{0}, kMaxCliDegree));
  add_n(coh, false);
  add_format(coh);

  auto* cons = app.add_subcommand("consistency", "Computed orders against cohomology bookkeeping");
  add_n(cons, true);
  cons->add_option("--N", trunc, "Truncation level")->required()->check(CLI::Range(std::size_t{0}, kMaxCliTruncation));
  add_format(cons);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const bool as_json = format == "json";

  try {
    if (present->parsed()) {
      const GroupParams p = GroupParams::from_n(n);
      const RelationSet rels(p);
      if (as_json) {
        json doc = json::object();
        doc["n"] = n;
        doc["k"] = p.k();
        doc["generators"] = json::array({"v1", "v2", "phi"});
        json relations = json::array();
        for (Relation id : kMinimalRelations) {
          const Rule& r = rels.rule(id);
          json entry = json::object();
          entry["name"] = relation_name(id);
          entry["lhs"] = detail::formal_to_json(FormalPoly::term(r.lhs));
          entry["rhs"] = detail::formal_to_json(r.rhs);
          relations.push_back(std::move(entry));
        }
        doc["relations"] = std::move(relations);
        json derived = json::object();
        derived["name"] = relation_name(Relation::R3);
        derived["g"] = to_json(g_poly(p.k()));
        doc["derived"] = std::move(derived);
        out << doc.dump(2) << "\n";
      } else {
        out << "K(BQ_" << p.group_order() << "), n = " << n << ", k = " << p.k() << "\n";
        out << "generators: v1, v2, φ\n";
        for (Relation id : kMinimalRelations) {
          const Rule& r = rels.rule(id);
          out << relation_name(id) << ": " << r.lhs.to_string() << " = " << r.rhs.to_string() << "\n";
        }
        out << "derived (redundant) " << relation_name(Relation::R3) << ": " << g_poly(p.k()).to_string() << " = 0\n";
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const GroupParams p = GroupParams::from_n(n);
      const auto results = detail::run_suites(p, suite);
      bool ok = true;
      if (as_json) {
        json doc = json::object();
        doc["n"] = n;
        json suites = json::object();
        for (const auto& [name, rep] : results) {
          suites[name] = to_json(rep);
          ok = ok && rep.all_passed();
        }
        doc["suites"] = std::move(suites);
        doc["pass"] = ok;
        out << doc.dump(2) << "\n";
      } else {
        for (const auto& [name, rep] : results) {
          for (const auto& c : rep.checks) {
            out << (c.passed ? "PASS " : "FAIL ") << name << ": " << c.name;
            if (!c.passed && !c.detail.empty()) out << " [" << c.detail << "]";
            out << "\n";
          }
          ok = ok && rep.all_passed();
        }
        out << (ok ? "all checks passed" : "verification FAILED") << "\n";
      }
      return ok ? kExitOk : kExitFailed;
    }

    if (order->parsed()) {
      const OrderCell cell = order_cell(n, trunc);
      if (as_json) {
        out << to_json(cell).dump(2) << "\n";
      } else {
        out << "order of φ in R(Q_" << (std::size_t{1} << n) << ")/φ^" << phi_truncation_exponent(trunc)
            << ": " << detail::order_text(cell.order) << "\n";
        out << "expected 2^(n+2N) = 2^" << cell.expected_exponent << " = " << pow2(cell.expected_exponent) << "\n";
        out << "match: " << (cell.match ? "yes" : "no") << "\n";
      }
      return cell.match ? kExitOk : kExitFailed;
    }

    if (table->parsed()) {
      const auto cells = order_table(n_max, trunc_max);
      bool ok = true;
      for (const auto& c : cells) ok = ok && c.match;
      if (as_json) {
        json arr = json::array();
        for (const auto& c : cells) arr.push_back(to_json(c));
        out << arr.dump(2) << "\n";
      } else {
        out << "order of φ in R(Q_{2^n})/φ^{N+2}; expected 2^(n+2N)\n";
        out << "n\\N";
        for (std::size_t N = 0; N <= trunc_max; ++N) out << "\t" << N;
        out << "\n";
        std::size_t idx = 0;
        for (int nn = GroupParams::kMinN; nn <= n_max; ++nn) {
          out << nn;
          for (std::size_t N = 0; N <= trunc_max; ++N, ++idx) {
            const auto& c = cells[idx];
            out << "\t" << (c.order ? power_of_two_string(*c.order) : std::string("inf")) << (c.match ? "" : "!");
          }
          out << "\n";
        }
        out << (ok ? "all cells match 2^(n+2N)" : "MISMATCH (marked with !)") << "\n";
      }
      return ok ? kExitOk : kExitFailed;
    }

    if (adams->parsed()) {
      const PhiPoly series = psi_series(adams_i);
      const bool agrees = series == psi_oracle(adams_i);
      if (as_json) {
        json doc = json::object();
        doc["i"] = adams_i;
        doc["psi"] = to_json(series);
        doc["oracle_agrees"] = agrees;
        out << doc.dump(2) << "\n";
      } else {
        out << "ψ^" << adams_i << "(φ) = " << series.to_string() << "\n";
        out << "Chebyshev oracle: " << (agrees ? "agrees" : "DISAGREES") << "\n";
      }
      return agrees ? kExitOk : kExitFailed;
    }

    if (g->parsed()) {
      const PhiPoly poly = g_poly(g_k);
      const bool identity = verify_g_identity(g_k);
      if (as_json) {
        json doc = json::object();
        doc["k"] = g_k;
        doc["g"] = to_json(poly);
        doc["equals_psi_difference"] = identity;
        out << doc.dump(2) << "\n";
      } else {
        out << "g_" << 2 * g_k << "(φ) = " << poly.to_string() << "\n";
        out << "ψ^" << g_k + 1 << " - ψ^" << g_k - 1 << ": " << (identity ? "equal" : "DIFFERENT") << "\n";
      }
      return identity ? kExitOk : kExitFailed;
    }

    if (coh->parsed()) {
      const GroupParams p = GroupParams::from_n(n);
      const CohGroup grp = h_group(coh_p, p.k());
      if (as_json) {
        json doc = to_json(grp);
        doc["p"] = coh_p;
        doc["k"] = p.k();
        out << doc.dump(2) << "\n";
      } else {
        out << "H^" << coh_p << "(BQ_" << p.group_order() << "; Z) = " << grp.to_string() << "\n";
      }
      return kExitOk;
    }

    if (cons->parsed()) {
      const ConsistencyReport r = consistency_report(GroupParams::from_n(n), trunc);
      if (as_json) {
        out << to_json(r).dump(2) << "\n";
      } else {
        out << "torsion of R/φ^" << trunc + 1 << ": " << r.torsion << "\n";
        out << "cohomology prediction 4^(N+1)(4k)^N: " << r.predicted << " ("
            << (r.torsion_match ? "match" : "mismatch") << ")\n";
        out << "order of φ in R/φ^" << phi_truncation_exponent(trunc) << ": " << detail::order_text(r.phi_order) << "\n";
        out << "expected 2^(n+2N): " << r.phi_expected << " (" << (r.phi_match ? "match" : "mismatch") << ")\n";
        if (r.phi_ratio) out << "growth from N-1: " << *r.phi_ratio << "\n";
      }
      return r.phi_match ? kExitOk : kExitFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace qkring::cli

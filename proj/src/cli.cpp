#include "rmac/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rmac/errors.hpp"
#include "rmac/json_io.hpp"
#include "rmac/modrep.hpp"
#include "rmac/polygon.hpp"
#include "rmac/spectral.hpp"
#include "rmac/words.hpp"

namespace rmac {
namespace {

struct Options {
  int n = 0;
  bool json = false;
  bool quotient = false;
  bool audit = false;
  bool field = false;
  bool timing = false;
  int max_p = 6;
  std::string depth;
  std::string complex_path;
  std::string model = "rmac";
  std::size_t cell_cap = default_cell_cap;
  int perm_cap = 10;
};

struct Source {
  SimplicialComplex complex;
  std::string name;
  bool polygon = false;
};

Source load_source(const Options& o) {
  if (!o.complex_path.empty()) {
    std::ifstream in(o.complex_path);
    if (!in) throw InvalidArgument("cannot read complex file " + o.complex_path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw InvalidArgument("malformed JSON in " + o.complex_path + ": " + e.what());
    }
    return {complex_from_json(j), o.complex_path, false};
  }
  if (o.n == 0) throw InvalidArgument("either --n or --complex is required");
  return {polygon_boundary(o.n), "K_" + std::to_string(o.n), true};
}

CellComplex build(const SimplicialComplex& k, const Options& o) {
  return o.model == "cc" ? build_cc(k, o.cell_cap) : build_rmac(k, o.cell_cap);
}

void write_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_surface(std::ostream& out, const CellComplex& c, const SurfaceReport& r) {
  out << "cells:";
  for (int k = 0; k <= c.dimension(); ++k) out << ' ' << c.cell_count(k);
  out << '\n';
  for (std::size_t k = 0; k < r.homology.size(); ++k) out << "H_" << k << " = " << r.homology[k].to_string() << '\n';
  out << "euler characteristic: " << r.euler << '\n';
  out << "closed orientable surface: " << yes_no(r.closed_orientable_surface);
  if (r.genus) out << ", genus " << *r.genus;
  out << '\n';
}

Json surface_json(const CellComplex& c, const SurfaceReport& r) {
  Json cells = Json::array();
  for (int k = 0; k <= c.dimension(); ++k) cells.push_back(c.cell_count(k));
  Json groups = Json::array();
  for (const FGAbelianGroup& g : r.homology) groups.push_back(to_json(g));
  Json j{{"cells", cells}, {"homology", groups}, {"euler", r.euler},
         {"closed_orientable_surface", r.closed_orientable_surface}};
  j["genus"] = r.genus ? Json(*r.genus) : Json(nullptr);
  return j;
}

int cmd_genus(const Options& o, std::ostream& out) {
  if (o.audit) {
    write_json(out, to_json(riemann_hurwitz_audit(o.n)));
    return 0;
  }
  Json j{{"n", o.n}, {"genus", integer_to_json(genus_closed_form(o.n))}};
  if (o.quotient) j["quotient_genus"] = integer_to_json(quotient_genus(o.n));
  write_json(out, j);
  return 0;
}

int cmd_homology(const Options& o, std::ostream& out) {
  const Source s = load_source(o);
  const CellComplex c = build(s.complex, o);
  const SurfaceReport r = surface_report(c);
  if (o.json) {
    Json j{{"complex", s.name}, {"model", o.model}};
    j.update(surface_json(c, r));
    write_json(out, j);
  } else {
    out << "complex: " << s.name << " (" << s.complex.vertex_count() << " vertices, "
        << s.complex.maximal_faces().size() << " maximal faces), model " << o.model << '\n';
    print_surface(out, c, r);
  }
  return 0;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  const CellComplex c = build_rmac(polygon_boundary(o.n), o.cell_cap);
  const CellComplex q = quotient_complex(c, rotation_action(c, o.n));
  const SurfaceReport r = surface_report(q);
  if (o.json) {
    Json j{{"n", o.n}};
    j.update(surface_json(q, r));
    j["quotient_genus_formula"] = integer_to_json(quotient_genus(o.n));
    write_json(out, j);
  } else {
    out << "quotient of R Z_{K_" << o.n << "} by Z_" << o.n << '\n';
    print_surface(out, q, r);
    out << "genus formula: " << quotient_genus(o.n) << '\n';
  }
  return 0;
}

int cmd_words(const Options& o, std::ostream& out) {
  if (!o.json) {
    out << class_listing(o.n);
    return 0;
  }
  Json classes = Json::array();
  long long total = 0;
  for (const ClassGroup& g : group_by_class(representatives(o.n))) {
    Json faces = Json::array();
    for (const WordClass& w : g.members) faces.push_back(w.face);
    const long long gap = static_cast<long long>(g.iota) * o.n / g.d;
    const long long basis = static_cast<long long>(g.members.size()) * g.d * (gap - 1);
    total += basis;
    classes.push_back(Json{{"orbit_size", g.d}, {"iota", g.iota}, {"gap_number", gap}, {"count", g.members.size()},
                           {"faces", faces}, {"basis", basis}});
  }
  write_json(out, Json{{"n", o.n}, {"classes", classes}, {"total_basis", total}});
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const H1Decomposition dec = decompose_h1(o.n);
  if (o.json) {
    write_json(out, to_json(dec));
  } else {
    out << decomposition_table(dec);
    out << "H_1 = " << module_summary(dec) << '\n';
  }
  return 0;
}

int cmd_e2(const Options& o, std::ostream& out) {
  if (o.field) {
    const FieldE2Page page = e2_page_field(o.n, o.max_p);
    if (o.json) {
      Json dims = Json::object();
      for (const auto& [pq, d] : page.dimensions) dims[std::to_string(pq.first) + "," + std::to_string(pq.second)] = d;
      write_json(out, Json{{"n", o.n}, {"max_p", o.max_p}, {"field", true}, {"dimensions", dims}});
    } else {
      out << page.render();
    }
    return 0;
  }
  const E2Page page = e2_page(o.n, o.max_p);
  if (o.json) {
    write_json(out, to_json(page));
  } else {
    out << page.render();
  }
  return 0;
}

int cmd_poincare(const Options& o, std::ostream& out) {
  const PoincareSeries p = poincare_series(o.n);
  if (o.json) {
    write_json(out, Json{{"n", o.n},
                         {"coefficients", {integer_to_json(p.c0), integer_to_json(p.c1), integer_to_json(p.c2)}}});
  } else {
    out << "P(t) = " << p.to_string() << '\n';
  }
  return 0;
}

int cmd_aut(const Options& o, std::ostream& out) {
  const Source s = load_source(o);
  const std::vector<VertexPermutation> g = automorphism_group(s.complex, o.perm_cap);
  if (o.json) {
    Json perms = Json::array();
    for (const VertexPermutation& p : g) perms.push_back(p.images());
    write_json(out, Json{{"complex", s.name}, {"order", g.size()}, {"permutations", perms}});
  } else {
    out << "Aut(" << s.name << ") has order " << g.size() << '\n';
    for (const VertexPermutation& p : g) out << "  " << p.to_cycle_string() << '\n';
  }
  return 0;
}

int cmd_dump(const Options& o, std::ostream& out) {
  const Source s = load_source(o);
  out << dump_json(build(s.complex, o)).dump(1) << '\n';
  return 0;
}

// verify -----------------------------------------------------------------

enum class LegStatus { pass, fail, skipped };

struct LegResult {
  std::string name;
  LegStatus status = LegStatus::pass;
  std::string detail;
  double seconds = 0;
};

const char* status_name(LegStatus s) {
  switch (s) {
    case LegStatus::pass:
      return "PASS";
    case LegStatus::fail:
      return "FAIL";
    case LegStatus::skipped:
      return "SKIPPED";
  }
  return "?";
}

class Verifier {
 public:
  Verifier(int n, bool full) : n_(n), full_(full) {}

  std::vector<LegResult> run() {
    std::vector<LegResult> out;
    run_leg(out, "genus oracle", true, [&] { return genus_leg(); });
    run_leg(out, "quotient oracle", true, [&] { return quotient_leg(); });
    run_leg(out, "Riemann-Hurwitz audit", false, [&] { return rh_leg(); });
    run_leg(out, "decomposition rank and charpoly", false, [&] { return decomposition_leg(); });
    run_leg(out, "group homology agreement", true, [&] { return group_homology_leg(); });
    run_leg(out, "E2 figure comparison", false, [&] { return e2_leg(); });
    run_leg(out, "identity audit", false, [&] { return identity_leg(); });
    return out;
  }

 private:
  static void check(bool ok, const std::string& what) {
    if (!ok) throw VerificationFailure(what);
  }

  void run_leg(std::vector<LegResult>& out, const std::string& name, bool cellular,
               const std::function<std::string()>& body) {
    LegResult r{name, LegStatus::pass, "", 0};
    if (cellular && !full_) {
      r.status = LegStatus::skipped;
      r.detail = "cellular oracle, full depth only";
      out.push_back(r);
      return;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = body();
    } catch (const std::exception& e) {
      r.status = LegStatus::fail;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(r);
  }

  const CellComplex& complex() {
    if (!complex_) complex_ = build_rmac(polygon_boundary(n_));
    return *complex_;
  }

  const IntMatrix& sigma() {
    if (!sigma_) sigma_ = sigma_on_h1(n_, n_);
    return *sigma_;
  }

  std::string genus_leg() {
    const SurfaceReport r = surface_report(complex());
    check(r.genus.has_value(), "R Z_K is not a closed orientable surface");
    const Integer g(static_cast<std::int64_t>(*r.genus));
    check(g == genus_closed_form(n_), "cellular genus " + g.to_string() + " differs from the closed form " +
                                          genus_closed_form(n_).to_string());
    check(genus_by_recursion(n_) == g, "recursion disagrees with the cellular genus");
    return "genus " + g.to_string();
  }

  std::string quotient_leg() {
    const SurfaceReport r = surface_report(quotient_complex(complex(), rotation_action(complex(), n_)));
    check(r.genus.has_value(), "quotient is not a closed orientable surface");
    const Integer g(static_cast<std::int64_t>(*r.genus));
    check(g == quotient_genus(n_), "quotient complex genus " + g.to_string() + " differs from the formula " +
                                       quotient_genus(n_).to_string());
    return "quotient genus " + g.to_string();
  }

  std::string rh_leg() {
    const GenusReport r = riemann_hurwitz_audit(n_);
    return "euler " + r.euler_total.to_string() + " = " + std::to_string(n_) + "*" + r.euler_quotient.to_string() +
           " - " + r.branch_sum.to_string();
  }

  std::string decomposition_leg() {
    const H1Decomposition dec = decompose_h1(n_);
    check(Integer(dec.total_rank) == Integer(2) * genus_closed_form(n_), "total rank is not twice the genus");
    std::string detail = module_summary(dec);
    if (full_) {
      check(predicted_charpoly(dec) == charpoly_finite_order(sigma(), static_cast<unsigned>(n_)),
            "predicted characteristic polynomial differs from the cellular one");
      detail += "; charpoly matches";
    } else {
      detail += "; charpoly skipped at quick depth";
    }
    return detail;
  }

  std::string group_homology_leg() {
    CyclicHomology predicted;
    for (const Summand& s : decompose_h1(n_).summands)
      predicted += summand_homology(n_, s.word_class.d, s.word_class.iota);
    const CyclicHomology cellular = cyclic_group_homology(n_, sigma());
    check(cellular == predicted, "cellular " + cellular.to_sage_string() + " but decomposition gives " +
                                     predicted.to_sage_string());
    return cellular.to_sage_string();
  }

  std::string e2_leg() {
    const int max_p = 6;
    const E2Page page = e2_page(n_, max_p);
    FGAbelianGroup torsion;
    for (unsigned d : divisors(static_cast<unsigned>(n_))) {
      if (d == 1 || static_cast<int>(d) == n_) continue;
      torsion += multiple(FGAbelianGroup::cyclic(Integer(n_ / static_cast<int>(d))),
                          lyndon_words(static_cast<int>(d)).size());
    }
    const Integer r = Integer(2) + Integer::pow(2, static_cast<unsigned>(n_ - 2)) - necklace_count(static_cast<unsigned>(n_));
    const FGAbelianGroup zn = FGAbelianGroup::cyclic(Integer(n_));
    for (int p = 0; p <= max_p; ++p) {
      const FGAbelianGroup outer = p == 0 ? FGAbelianGroup::free(1) : p % 2 ? zn : FGAbelianGroup();
      const FGAbelianGroup middle = p == 0   ? FGAbelianGroup::free(static_cast<std::size_t>(r.to_int64())) + torsion
                                    : p % 2 ? FGAbelianGroup()
                                            : torsion;
      check(page.at(p, 0) == outer && page.at(p, 2) == outer, "outer rows differ at p = " + std::to_string(p));
      check(page.at(p, 1) == middle, "E2_{" + std::to_string(p) + ",1} = " + page.at(p, 1).to_string() +
                                         ", figure predicts " + middle.to_string());
    }
    return "E2_{0,1} = " + page.at(0, 1).to_primary_string();
  }

  std::string identity_leg() {
    const IdentityAudit a = identity_audit(n_);
    return "R_n = " + a.from_words.to_string();
  }

  int n_;
  bool full_;
  std::optional<CellComplex> complex_;
  std::optional<IntMatrix> sigma_;
};

int cmd_verify(const Options& o, std::ostream& out) {
  const std::string depth = o.depth.empty() ? (o.n <= 8 ? "full" : "quick") : o.depth;
  const bool full = depth == "full";
  if (o.n < 3 || o.n > (full ? 8 : 12)) {
    throw InvalidArgument("verify at " + depth + " depth supports 3 <= n <= " + (full ? "8" : "12"));
  }
  const std::vector<LegResult> legs = Verifier(o.n, full).run();
  std::size_t passed = 0, failed = 0;
  for (const LegResult& l : legs) {
    passed += l.status == LegStatus::pass;
    failed += l.status == LegStatus::fail;
  }
  if (o.json) {
    Json arr = Json::array();
    for (const LegResult& l : legs) {
      Json item{{"name", l.name}, {"status", status_name(l.status)}, {"detail", l.detail}};
      if (o.timing) item["seconds"] = l.seconds;
      arr.push_back(item);
    }
    write_json(out, Json{{"n", o.n}, {"depth", depth}, {"legs", arr}, {"passed", passed},
                         {"failed", failed}, {"total", legs.size()}});
  } else {
    std::size_t index = 0;
    for (const LegResult& l : legs) {
      out << '[' << ++index << '/' << legs.size() << "] " << std::left << std::setw(32) << l.name << ' '
          << std::setw(7) << status_name(l.status) << ' ' << l.detail;
      if (o.timing && l.status != LegStatus::skipped) out << " (" << std::fixed << std::setprecision(3) << l.seconds << " s)";
      out << '\n';
    }
    out << "verify n=" << o.n << " depth=" << depth << ": " << passed << '/' << legs.size() << " PASS";
    if (failed) out << ", " << failed << " FAIL";
    if (passed + failed < legs.size()) out << ", " << legs.size() - passed - failed << " SKIPPED";
    out << '\n';
  }
  return failed ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topology of real moment-angle complexes over polygons", "rmac"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--n", o.n, "polygon size")->check(CLI::Range(1, 64));
    if (required) opt->required();
    return opt;
  };
  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", o.json, "machine-readable output"); };
  auto add_complex = [&](CLI::App* cmd, CLI::Option* n_opt) {
    cmd->add_option("--complex", o.complex_path, "simplicial complex JSON file")->excludes(n_opt);
  };
  auto add_cell_cap = [&](CLI::App* cmd) { cmd->add_option("--cell-cap", o.cell_cap, "maximum number of cells"); };
  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--model", o.model, "cube model")->check(CLI::IsMember({"rmac", "cc"}));
  };

  auto* genus = app.add_subcommand("genus", "closed-form genus of R Z_{K_n} (JSON)");
  add_n(genus, true);
  genus->add_flag("--quotient", o.quotient, "include the genus of the Z_n quotient");
  genus->add_flag("--audit", o.audit, "full Riemann-Hurwitz report");
  add_json(genus);

  auto* homology = app.add_subcommand("homology", "cellular homology of R Z_K");
  add_complex(homology, add_n(homology, false));
  add_cell_cap(homology);
  add_model(homology);
  add_json(homology);

  auto* quotient = app.add_subcommand("quotient", "homology of the Z_n quotient");
  add_n(quotient, true);
  add_cell_cap(quotient);
  add_json(quotient);

  auto* words = app.add_subcommand("words", "orbit representatives as Lyndon words");
  add_n(words, true);
  add_json(words);

  auto* decompose = app.add_subcommand("decompose", "Z[Z_n]-module structure of H_1");
  add_n(decompose, true);
  add_json(decompose);

  auto* e2 = app.add_subcommand("e2-page", "E^2 page of the homotopy orbit spectral sequence");
  add_n(e2, true);
  e2->add_option("--max-p", o.max_p, "last column")->check(CLI::Range(2, 64));
  e2->add_flag("--field", o.field, "coefficients in a field of characteristic prime to n");
  add_json(e2);

  auto* poincare = app.add_subcommand("poincare", "Poincare series of the homotopy orbit space");
  add_n(poincare, true);
  add_json(poincare);

  auto* aut = app.add_subcommand("aut", "automorphism group of K");
  add_complex(aut, add_n(aut, false));
  aut->add_option("--perm-cap", o.perm_cap, "largest vertex count for the permutation search");
  add_json(aut);

  auto* verify = app.add_subcommand("verify", "run every cross-check for one n");
  add_n(verify, true);
  verify->add_option("--depth", o.depth, "quick (formulas) or full (cellular oracles)")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--timing", o.timing, "report wall time per leg");
  add_json(verify);

  auto* dump = app.add_subcommand("dump", "cells and boundary matrices as JSON");
  add_complex(dump, add_n(dump, false));
  add_cell_cap(dump);
  add_model(dump);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (genus->parsed()) return cmd_genus(o, out);
    if (homology->parsed()) return cmd_homology(o, out);
    if (quotient->parsed()) return cmd_quotient(o, out);
    if (words->parsed()) return cmd_words(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (e2->parsed()) return cmd_e2(o, out);
    if (poincare->parsed()) return cmd_poincare(o, out);
    if (aut->parsed()) return cmd_aut(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (dump->parsed()) return cmd_dump(o, out);
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return 1;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace rmac

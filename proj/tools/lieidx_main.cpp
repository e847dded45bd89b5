// Command line front end: validation, index and regularity computations,
// catalog access, deformation sampling, and the full expectation-table run.
//
// Exit codes: 0 success, 1 domain errors (bad data, failed expectations),
// 2 usage errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lieidx/catalog.hpp"
#include "lieidx/deformation.hpp"
#include "lieidx/errors.hpp"
#include "lieidx/index.hpp"
#include "lieidx/io.hpp"
#include "lieidx/regular.hpp"
#include "lieidx/series.hpp"

using json = nlohmann::ordered_json;
using namespace lieidx;

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

json rational_vec_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json algebra_json(const StructureConstants& alg) {
  json brackets = json::array();
  for (const auto& [i, j, s, c] : alg.entries())
    brackets.push_back(json::array({i, j, s, c.str()}));
  return json{{"dim", alg.dim()}, {"brackets", brackets}};
}

json validation_json(const ValidationReport& v) {
  json out;
  out["ok"] = v.ok();
  json viol = json::array();
  for (const auto& x : v.violations)
    viol.push_back(json{{"i", x.i},
                        {"j", x.j},
                        {"k", x.k},
                        {"t", x.t},
                        {"residual", x.residual.str()}});
  out["violations"] = viol;
  return out;
}

json index_json(const IndexReport& r) {
  json out;
  out["index"] = r.index;
  out["rank"] = r.rank;
  out["method"] = to_string(r.method);
  if (r.witness_point)
    out["witness_point"] = rational_vec_json(*r.witness_point);
  if (r.method != RankMethod::Symbolic)
    out["certification"] = json{{"trials", r.trials},
                                {"bound", r.bound},
                                {"seed", r.seed}};
  return out;
}

json regularity_json(const RegularityReport& r) {
  json out;
  out["functional"] = rational_vec_json(r.functional);
  out["kernel_dim"] = r.kernel_dim;
  json basis = json::array();
  for (const auto& row : r.kernel.basis()) basis.push_back(rational_vec_json(row));
  out["kernel_basis"] = basis;
  out["is_regular"] = r.is_regular;
  out["algebra_index"] = r.algebra_index;
  if (r.attempts > 0) out["attempts"] = r.attempts;
  return out;
}

json family_report_json(const FamilyReport& r) {
  json out;
  out["family"] = r.family.str();
  out["algebra_index"] = r.algebra_index;
  out["samples"] = r.samples;
  out["seed"] = r.seed;
  out["verdict"] = to_string(r.verdict);
  json branches = json::array();
  for (const auto& b : r.branches) {
    json bj{{"label", b.label}, {"verdict", to_string(b.verdict)}};
    if (b.counterexample)
      bj["counterexample"] = rational_vec_json(*b.counterexample);
    if (b.boundary_witness)
      bj["boundary_witness"] = rational_vec_json(*b.boundary_witness);
    if (b.refuted_set) bj["refuted_set"] = *b.refuted_set;
    branches.push_back(bj);
  }
  out["branches"] = branches;
  out["notes"] = r.notes;
  return out;
}

void print_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

io::AlgebraFile load(const std::string& path) {
  return io::parse_algebra_file(path);
}

RankMethod parse_method(const std::string& m) {
  if (m == "symbolic") return RankMethod::Symbolic;
  if (m == "randomized") return RankMethod::Randomized;
  if (m == "both") return RankMethod::Both;
  throw CLI::ValidationError("--method must be symbolic, randomized or both");
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(Rational::from_string(tok));
  return out;
}

std::vector<int> parse_index_list(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(std::stoi(tok));
  return out;
}

// clause grammar: "free=1,2;zero=6;nonzero=3+4+5,7;tied=4+5+6"
FunctionalFamily parse_family_spec(const std::string& spec, int dim) {
  FunctionalFamily fam;
  fam.dim = dim;
  std::stringstream ss(spec);
  std::string clause;
  while (std::getline(ss, clause, ';')) {
    if (clause.empty()) continue;
    auto eq = clause.find('=');
    if (eq == std::string::npos)
      throw DomainError("family clause '" + clause + "' is not key=value");
    std::string key = clause.substr(0, eq);
    std::string val = clause.substr(eq + 1);
    if (key == "free")
      fam.free_indices = parse_index_list(val, ',');
    else if (key == "zero")
      fam.zero_indices = parse_index_list(val, ',');
    else if (key == "nonzero") {
      std::stringstream vs(val);
      std::string set;
      while (std::getline(vs, set, ','))
        fam.nonzero_sets.push_back(parse_index_list(set, '+'));
    } else if (key == "tied") {
      std::stringstream vs(val);
      std::string group;
      while (std::getline(vs, group, ','))
        fam.tied_groups.push_back({parse_index_list(group, '+'), std::nullopt});
    } else {
      throw DomainError("unknown family clause '" + key + "'");
    }
  }
  return fam;
}

int cmd_validate(const std::string& path, bool as_json) {
  auto file = load(path);
  ValidationReport v = validate(file.algebra);
  if (as_json) {
    json out{{"schema", 1}, {"command", "validate"}};
    out["algebra"] = algebra_json(file.algebra);
    out["validation"] = validation_json(v);
    print_json(out);
  } else if (v.ok()) {
    std::cout << "valid Lie algebra (dim " << file.algebra.dim() << ")\n";
  } else {
    std::cout << v.violations.size() << " Jacobi violation(s):\n";
    for (const auto& x : v.violations)
      std::cout << "  triple (" << x.i << "," << x.j << "," << x.k
                << "): coefficient of x" << x.t << " is " << x.residual.str()
                << "\n";
  }
  return v.ok() ? 0 : 1;
}

int cmd_index(const std::string& path, const IndexOptions& opts, bool as_json) {
  auto file = load(path);
  IndexReport r = index(file.algebra, opts);
  if (as_json) {
    json out{{"schema", 1}, {"command", "index"}, {"seed", opts.seed}};
    out["algebra"] = algebra_json(file.algebra);
    out["index"] = index_json(r);
    print_json(out);
  } else {
    std::cout << "rank " << r.rank << ", index " << r.index << " (method "
              << to_string(r.method) << ")\n";
    if (r.witness_point)
      std::cout << "witness point " << to_string(*r.witness_point) << " (seed "
                << r.seed << ", trials " << r.trials << ")\n";
  }
  return 0;
}

int cmd_regular(const std::string& path, bool find, bool minors,
                const std::string& check, const std::string& family_spec,
                int samples, std::uint64_t seed, bool as_json) {
  auto file = load(path);
  json out{{"schema", 1}, {"command", "regular"}, {"seed", seed}};
  out["algebra"] = algebra_json(file.algebra);
  if (minors) {
    auto list = regular_set_minors(file.algebra);
    if (as_json) {
      json arr = json::array();
      for (const auto& m : list) arr.push_back(m.str("p"));
      out["minors"] = arr;
      out["all_functionals_regular"] = list.empty();
      print_json(out);
    } else if (list.empty()) {
      std::cout << "minor order 0: every functional is regular\n";
    } else {
      std::cout << list.size()
                << " distinct nonzero minors; a functional is regular iff "
                   "one of them is nonzero at it:\n";
      for (const auto& m : list) std::cout << "  " << m.str("p") << "\n";
    }
    return 0;
  }
  if (find) {
    RegularityReport r = find_regular(file.algebra, seed);
    if (as_json) {
      out["regular"] = regularity_json(r);
      print_json(out);
    } else {
      std::cout << "regular functional " << to_string(r.functional)
                << "\nkernel dim " << r.kernel_dim << " = index, found after "
                << r.attempts << " attempt(s) (seed " << seed << ")\n";
    }
    return 0;
  }
  if (!check.empty()) {
    RegularityReport r = kernel_at(file.algebra, parse_rational_list(check));
    if (as_json) {
      out["regular"] = regularity_json(r);
      print_json(out);
    } else {
      std::cout << "kernel dim " << r.kernel_dim << ", algebra index "
                << r.algebra_index << ": "
                << (r.is_regular ? "regular" : "not regular") << "\n";
    }
    return 0;
  }
  FunctionalFamily fam = parse_family_spec(family_spec, file.algebra.dim());
  FamilyReport r = verify_family_parallel(file.algebra, fam, samples, seed);
  if (as_json) {
    out["family_report"] = family_report_json(r);
    print_json(out);
  } else {
    std::cout << "family " << fam.str() << ": " << to_string(r.verdict)
              << " (samples " << samples << ", seed " << seed << ")\n";
    for (const auto& b : r.branches) {
      std::cout << "  branch " << b.label << ": " << to_string(b.verdict)
                << "\n";
      if (b.counterexample)
        std::cout << "    counterexample " << to_string(*b.counterexample)
                  << "\n";
      if (b.boundary_witness)
        std::cout << "    boundary witness " << to_string(*b.boundary_witness)
                  << "\n";
    }
  }
  return 0;
}

int cmd_report(const std::string& path, std::uint64_t seed, bool as_json,
               bool with_regular) {
  auto file = load(path);
  const StructureConstants& alg = file.algebra;
  ValidationReport v = validate(alg);

  json out{{"schema", 1}, {"command", "report"}, {"seed", seed}};
  out["algebra"] = algebra_json(alg);
  if (file.name) out["name"] = *file.name;
  out["validation"] = validation_json(v);

  std::ostringstream text;
  text << "dim " << alg.dim() << (file.name ? " (" + *file.name + ")" : "")
       << "\n";
  text << "validation: " << (v.ok() ? "ok" : "FAILED") << "\n";

  if (v.ok()) {
    auto ni = nilindex(alg);
    out["nilpotent"] = ni.has_value();
    if (ni) {
      out["nilindex"] = *ni;
      text << "nilpotent, nilindex " << *ni << "\n";
      CharacteristicSequence cs = characteristic_sequence(alg, 8, seed);
      json parts = json::array();
      for (int p : cs.parts) parts.push_back(p);
      out["characteristic_sequence"] =
          json{{"parts", parts},
               {"method", "sampled supremum"},
               {"samples", cs.samples},
               {"seed", cs.seed}};
      text << "characteristic sequence (sampled supremum, seed " << cs.seed
           << "): (";
      for (std::size_t i = 0; i < cs.parts.size(); ++i)
        text << (i ? ", " : "") << cs.parts[i];
      text << ")\n";
      out["filiform"] = is_filiform(alg);
      out["quasi_filiform"] = is_quasi_filiform(alg);
      text << "filiform: " << (is_filiform(alg) ? "yes" : "no")
           << ", quasi-filiform: " << (is_quasi_filiform(alg) ? "yes" : "no")
           << "\n";
    } else {
      out["nilindex"] = nullptr;
      text << "not nilpotent\n";
    }
    out["center_dim"] = center(alg).dim();
    text << "center dim " << center(alg).dim() << "\n";

    IndexOptions opts;
    opts.seed = seed;
    IndexReport r = index(alg, opts);
    out["index"] = index_json(r);
    out["frobenius"] = r.index == 0;
    text << "rank " << r.rank << ", index " << r.index << " (method both)\n";
    text << "frobenius: " << (r.index == 0 ? "yes" : "no") << "\n";
    if (with_regular) {
      RegularityReport reg = find_regular(alg, seed);
      out["regular"] = regularity_json(reg);
      text << "regular functional " << to_string(reg.functional) << " after "
           << reg.attempts << " attempt(s)\n";
    }
  }

  if (as_json)
    print_json(out);
  else
    std::cout << text.str();
  return v.ok() ? 0 : 1;
}

int cmd_catalog_list(bool as_json) {
  auto fams = catalog::families();
  if (as_json) {
    json out{{"schema", 1}, {"command", "catalog list"}};
    json arr = json::array();
    for (const auto& f : fams)
      arr.push_back(json{{"name", f.name},
                         {"parameters", f.parameters},
                         {"summary", f.summary}});
    out["families"] = arr;
    print_json(out);
  } else {
    for (const auto& f : fams)
      std::cout << f.name << "  [" << f.parameters << "]  " << f.summary
                << "\n";
  }
  return 0;
}

int cmd_catalog_emit(const std::string& name,
                     const std::vector<std::string>& kv,
                     const std::string& out_path) {
  catalog::Params params;
  for (const auto& item : kv) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw DomainError("catalog parameter '" + item + "' is not key=value");
    params[item.substr(0, eq)] = Rational::from_string(item.substr(eq + 1));
  }
  catalog::Entry e = catalog::make_entry(name, params);
  std::string note = "status: " + e.status;
  for (const auto& n : e.notes) note += "; " + n;
  std::string text = io::emit_algebra(e.algebra, e.display_name(), note);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw DomainError("cannot write '" + out_path + "'");
    f << text;
  }
  return 0;
}

int cmd_deform(const std::string& base_path, const std::string& pert_path,
               const std::string& t_csv, int degree, bool as_json) {
  auto base = load(base_path);
  auto pert = load(pert_path);
  Deformation def{base.algebra, {{degree, pert.algebra}}};
  std::vector<Rational> samples = parse_rational_list(t_csv);
  DeformationIndexReport r = deformation_index(def, samples);
  if (as_json) {
    json out{{"schema", 1}, {"command", "deform"}};
    out["index_at_zero"] = r.index_at_zero;
    json arr = json::array();
    for (const auto& [t, chi] : r.sampled)
      arr.push_back(json{{"t", t.str()}, {"index", chi}});
    out["sampled"] = arr;
    out["generic_index"] = r.generic_index;
    out["monotone"] = r.monotone;
    print_json(out);
  } else {
    std::cout << "index at t=0: " << r.index_at_zero << "\n";
    for (const auto& [t, chi] : r.sampled)
      std::cout << "index at t=" << t.str() << ": " << chi << "\n";
    std::cout << "generic index (min over samples): " << r.generic_index
              << "\n";
    std::cout << "generic <= index(0): " << (r.monotone ? "yes" : "NO") << "\n";
  }
  return 0;
}

int cmd_expect(std::uint64_t seed, bool as_json) {
  int failures = 0;
  json items = json::array();
  IndexOptions opts;
  opts.seed = seed;

  for (const auto& exp : catalog::expected_results()) {
    catalog::Entry e = catalog::make_entry(exp.name, exp.params);
    std::string label = e.display_name();
    json item{{"entry", label}, {"source", exp.source}};
    std::string line;
    if (!e.verified()) {
      item["status"] = "unverified-transcription";
      line = "[flagged] " + label + " : unverified transcription, skipped";
      if (exp.expected_index && !exp.conditional_on_validation) {
        ++failures;
        line = "[FAIL] " + label + " : expected a verified entry";
        item["status"] = "expected-verified";
      }
    } else {
      int chi = index(e.algebra, opts).index;
      item["index"] = chi;
      if (!exp.expected_index) {
        item["status"] = "reported";
        line = "[report] " + label + " : index " + std::to_string(chi) +
               " (" + exp.source + ")";
      } else if (chi == *exp.expected_index) {
        item["status"] = "ok";
        line = "[ok] " + label + " : index " + std::to_string(chi) + " (" +
               exp.source + ")";
      } else {
        ++failures;
        item["status"] = "mismatch";
        item["expected"] = *exp.expected_index;
        line = "[FAIL] " + label + " : index " + std::to_string(chi) +
               ", expected " + std::to_string(*exp.expected_index) + " (" +
               exp.source + ")";
      }
    }
    items.push_back(item);
    if (!as_json) std::cout << line << "\n";
  }

  json fams = json::array();
  for (const auto& fe : catalog::expected_regular_families()) {
    catalog::Entry e = catalog::make_entry(fe.name, fe.params);
    if (!e.verified()) continue;
    FamilyReport r = verify_family_parallel(e.algebra, fe.family, 20, seed);
    std::string label = e.display_name();
    fams.push_back(json{{"entry", label},
                        {"family", fe.family.str()},
                        {"verdict", to_string(r.verdict)},
                        {"source", fe.source}});
    if (!as_json)
      std::cout << "[family] " << label << " {" << fe.family.str()
                << "} : " << to_string(r.verdict) << "\n";
  }

  if (as_json) {
    json out{{"schema", 1},
             {"command", "expect"},
             {"seed", seed},
             {"expectations", items},
             {"families", fams},
             {"failures", failures}};
    print_json(out);
  } else {
    std::cout << (failures == 0 ? "all expectations match ("
                                : "FAILURES: ")
              << (failures == 0 ? std::to_string(items.size()) + " entries)"
                                : std::to_string(failures))
              << "\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact index and regular-functional computations for Lie "
               "algebras given by rational structure constants"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string path, method = "both", check, family_spec, t_csv = "1,2,1/3";
  std::string pert_path, out_path, catalog_name;
  std::vector<std::string> catalog_kv;
  std::uint64_t seed = kDefaultSeed;
  int samples = 20, trials = 3, degree = 1;
  std::int64_t bound = 1 << 16;
  bool find = false, with_regular = false, want_minors = false;

  auto json_flag = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit a machine-readable report");
  };

  auto* v = app.add_subcommand("validate", "check the Jacobi identity");
  v->add_option("file", path)->required();
  json_flag(v);

  auto* ix = app.add_subcommand("index", "rank and index of the algebra");
  ix->add_option("file", path)->required();
  ix->add_option("--method", method, "symbolic | randomized | both");
  ix->add_option("--trials", trials);
  ix->add_option("--bound", bound);
  ix->add_option("--seed", seed);
  json_flag(ix);

  auto* rg = app.add_subcommand("regular", "regular functionals");
  rg->add_option("file", path)->required();
  rg->add_flag("--find", find, "search for a regular functional");
  rg->add_flag("--minors", want_minors,
               "list the minors cutting out the regular set");
  rg->add_option("--check", check, "comma-separated coordinates p1,...,pn");
  rg->add_option("--family", family_spec,
                 "family spec: free=..;zero=..;nonzero=a+b,..;tied=a+b,..");
  rg->add_option("--samples", samples);
  rg->add_option("--seed", seed);
  json_flag(rg);

  auto* rp = app.add_subcommand("report", "full structural report");
  rp->add_option("file", path)->required();
  rp->add_option("--seed", seed);
  rp->add_flag("--regular", with_regular, "include a regular functional");
  json_flag(rp);

  auto* cat = app.add_subcommand("catalog", "built-in algebra families");
  auto* cl = cat->add_subcommand("list", "list family names and parameters");
  json_flag(cl);
  auto* ce = cat->add_subcommand("emit", "emit a family member as a file");
  ce->add_option("name", catalog_name)->required();
  ce->add_option("params", catalog_kv, "key=value parameters");
  ce->add_option("--out", out_path, "write to a file instead of stdout");

  auto* df = app.add_subcommand("deform", "index along a bracket deformation");
  df->add_option("base", path)->required();
  df->add_option("perturbation", pert_path)->required();
  df->add_option("--t", t_csv, "comma-separated nonzero samples");
  df->add_option("--degree", degree, "perturbation degree in t");
  json_flag(df);

  auto* ex = app.add_subcommand("expect",
                                "run the full expectation tables");
  ex->add_option("--seed", seed);
  json_flag(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (v->parsed()) return cmd_validate(path, as_json);
    if (ix->parsed()) {
      IndexOptions opts;
      opts.method = parse_method(method);
      opts.trials = trials;
      opts.bound = bound;
      opts.seed = seed;
      return cmd_index(path, opts, as_json);
    }
    if (rg->parsed()) {
      if (static_cast<int>(find) + static_cast<int>(want_minors) +
              static_cast<int>(!check.empty()) +
              static_cast<int>(!family_spec.empty()) !=
          1) {
        std::cerr << "regular needs exactly one of --find, --minors, "
                     "--check, --family\n";
        return 2;
      }
      return cmd_regular(path, find, want_minors, check, family_spec, samples,
                         seed, as_json);
    }
    if (rp->parsed()) return cmd_report(path, seed, as_json, with_regular);
    if (cat->parsed()) {
      if (cl->parsed()) return cmd_catalog_list(as_json);
      if (ce->parsed()) return cmd_catalog_emit(catalog_name, catalog_kv, out_path);
      std::cerr << "catalog needs 'list' or 'emit'\n";
      return 2;
    }
    if (df->parsed()) return cmd_deform(path, pert_path, t_csv, degree, as_json);
    if (ex->parsed()) return cmd_expect(seed, as_json);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

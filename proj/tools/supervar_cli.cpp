// Command-line interface: builds the classical Lie superalgebras, reproduces
// the reference tables, and drives the invariant/cohomology/variety
// computations with deterministic JSON artifacts.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "supervar/cohomology.hpp"
#include "supervar/detecting.hpp"
#include "supervar/errors.hpp"
#include "supervar/invariants.hpp"
#include "supervar/json_io.hpp"
#include "supervar/supermodule.hpp"
#include "supervar/tables.hpp"
#include "supervar/weights.hpp"

using json = nlohmann::json;
using namespace supervar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

struct FamilyArgs {
  std::string family;
  int m = 0, n = 0;

  Family parse() const { return family_from_name(family); }

  std::vector<int> params() const {
    Family f = parse();
    switch (f) {
      case Family::GL:
      case Family::SL:
      case Family::OSP:
        return {m, n};
      case Family::PSL:
      case Family::P:
      case Family::Q:
      case Family::QHAT:
        return {n};
      default:
        throw InvalidParams("family not constructible from the command line");
    }
  }
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa) {
  cmd->add_option("--family", fa.family,
                  "family: gl, sl, psl, osp, p, q, qhat")
      ->required();
  cmd->add_option("--m", fa.m, "first parameter (gl/sl: m, osp: M)");
  cmd->add_option("--n", fa.n, "second parameter (gl/sl: n, osp: N, others: n)");
}

uint64_t prime_from_env(uint64_t fallback) {
  const char* env = std::getenv("SUPERVAR_PRIME");
  if (!env) return fallback;
  return std::strtoull(env, nullptr, 10);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json series_json(const DimensionSeries& s) {
  json out = json::array();
  for (auto d : s.dims) out.push_back(d);
  return out;
}

json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(rat_str(c));
  return out;
}

json basis_json(const std::vector<Vec>& basis) {
  json out = json::array();
  for (const auto& v : basis) out.push_back(vec_json(v));
  return out;
}

std::shared_ptr<const LieSuperalgebra> build_shared(const FamilyArgs& fa) {
  return std::make_shared<const LieSuperalgebra>(build(fa.parse(), fa.params()));
}

/// Module zoo shared by `module make`, `cohom --coeff`, and `rankvar`.
Supermodule make_module_kind(const std::string& kind,
                             std::shared_ptr<const LieSuperalgebra> a) {
  auto natural_of = [&]() {
    if (a->family == Family::SUB)
      return restrict_module(natural_module(a->parent), a);
    return natural_module(a);
  };
  if (kind == "trivial") return trivial_module(a);
  if (kind == "natural") return natural_of();
  if (kind == "adjoint") return adjoint_module(a);
  if (kind == "dual_natural") return dual_module(natural_of());
  if (kind == "natural_tensor_dual") {
    auto nat = natural_of();
    return tensor_module(nat, dual_module(nat));
  }
  if (kind == "natural_plus_trivial")
    return direct_sum(natural_of(), trivial_module(a));
  if (kind == "regular") {
    if (a->family != Family::SUB)
      throw InvalidParams("regular modules are built over detecting subalgebras");
    return regular_induced(a, Vec(a->even_indices().size(), Rat(1)));
  }
  throw InvalidParams("unknown module kind: " + kind);
}

Supermodule load_module(const std::string& coeff,
                        std::shared_ptr<const LieSuperalgebra> a) {
  if (coeff.size() > 5 && coeff.substr(coeff.size() - 5) == ".json")
    return module_from_json(slurp(coeff), std::move(a));
  return make_module_kind(coeff, std::move(a));
}

json detection_report_json(const DetectionReport& rep) {
  json j;
  j["x0"] = {{"omega", basis_json(rep.x0.omega)},
             {"coefficients", vec_json(rep.x0.coefficients)},
             {"vector", vec_json(rep.x0.vector)}};
  j["lieH_basis"] = basis_json(rep.lieH_basis);
  j["f1_basis"] = basis_json(rep.f1_basis);
  j["e1_basis"] = basis_json(rep.e1_basis);
  j["f0_basis"] = basis_json(rep.f0_basis);
  j["dims"] = {{"lieH", rep.dim_lieH},
               {"f1", rep.dim_f1},
               {"e1", rep.dim_e1},
               {"f0", rep.dim_f0}};
  json checks;
  checks["table4_match"] = rep.table4_match;
  checks["e1_equals_krull_dim"] = rep.e1_equals_krull_dim;
  checks["f1f1_in_lieH"] = rep.f1f1_in_lieH;
  checks["closed_orbit"] =
      rep.closed_orbit ? json(*rep.closed_orbit) : json(nullptr);
  checks["polar"] = rep.polar;
  checks["stable"] = rep.stable;
  checks["stability_identity"] =
      rep.stability_identity ? json(*rep.stability_identity) : json(nullptr);
  j["checks"] = checks;
  return j;
}

json rankvar_report_json(const RankVarietyReport& rep) {
  json j;
  j["module"] = rep.module_id;
  j["e1_dim"] = rep.e1_dim;
  j["seed"] = rep.seed;
  j["samples_per_stratum"] = rep.samples_per_stratum;
  json strata = json::array();
  for (const auto& st : rep.strata) {
    json points = json::array();
    for (const auto& pt : st.points) {
      const char* status =
          pt.status == RankVarietyReport::PointStatus::projective
              ? "projective"
              : (pt.status == RankVarietyReport::PointStatus::nonprojective
                     ? "nonprojective"
                     : "not_semisimple");
      points.push_back({{"coords", vec_json(pt.coords)}, {"status", status}});
    }
    strata.push_back({{"support", st.support},
                      {"samples", st.samples},
                      {"nonprojective", st.nonprojective},
                      {"errors", st.errors},
                      {"points", points}});
  }
  j["strata"] = strata;
  j["estimated_dim"] = rep.estimated_dim;
  j["estimated_dim_any"] = rep.estimated_dim_any;
  return j;
}

json ideal_json(const TruncatedIdeal& ideal) {
  json j;
  j["cutoff"] = ideal.cutoff;
  j["e1_dim"] = ideal.e1_dim;
  json gens = json::array();
  for (const auto& g : ideal.generators)
    gens.push_back({{"degree", g.degree}, {"coeffs", vec_json(g.coeffs)}});
  j["generators"] = gens;
  return j;
}

std::string dump(const json& j) { return j.dump(1) + "\n"; }

// ------------------------------------------------------------------ tables

struct TableRow {
  std::string name;
  std::string expected;
  std::string computed;
  bool match;
};

std::vector<std::pair<Family, std::vector<int>>> families_by_size(int max_size) {
  std::vector<std::pair<Family, std::vector<int>>> out;
  for (int m = 1; m < max_size; ++m)
    for (int n = 1; m + n <= max_size; ++n) out.push_back({Family::GL, {m, n}});
  for (int m = 1; m < max_size; ++m)
    for (int n = 1; m + n <= max_size; ++n)
      if (m != n) out.push_back({Family::SL, {m, n}});
  for (int n = 2; 2 * n <= max_size; ++n) out.push_back({Family::PSL, {n}});
  for (int M = 1; M < max_size; ++M)
    for (int N = 2; M + N <= max_size; N += 2)
      out.push_back({Family::OSP, {M, N}});
  for (int n = 3; 2 * n <= max_size; ++n) out.push_back({Family::P, {n}});
  for (int n = 3; 2 * n <= max_size; ++n) out.push_back({Family::Q, {n}});
  for (int n = 1; 2 * n <= max_size; ++n) out.push_back({Family::QHAT, {n}});
  return out;
}

int run_tables(int table, const std::vector<std::pair<Family, std::vector<int>>>& rows,
               int max_degree, const InvariantOptions& opts,
               const std::string& outdir) {
  std::vector<TableRow> result;
  for (const auto& [f, params] : rows) {
    LieSuperalgebra a = build(f, params);
    TableRow row;
    row.name = a.name();
    if (table == 3) {
      auto [d0, d1] = table3_dims(f, params);
      std::ostringstream want, got;
      want << "(" << d0 << "," << d1 << ")";
      got << "(" << a.dim_even() << "," << a.dim_odd() << ")";
      row.expected = want.str();
      row.computed = got.str();
    } else if (table == 1) {
      auto want = predicted_series(f, params, max_degree);
      auto got = invariant_dimensions(a, max_degree, opts);
      std::ostringstream ws, gs;
      for (auto d : want.dims) ws << d << " ";
      for (auto d : got.dims) gs << d << " ";
      row.expected = ws.str();
      row.computed = gs.str();
    } else if (table == 4) {
      auto rep = assemble_detecting(
                     std::make_shared<const LieSuperalgebra>(std::move(a)),
                     Detecting::E)
                     .second;
      row.expected = std::to_string(table4_centralizer_dim(f, params));
      row.computed = std::to_string(rep.dim_lieH);
    } else {
      throw InvalidParams("supported tables: 1, 3, 4");
    }
    row.match = row.expected == row.computed;
    result.push_back(std::move(row));
  }

  json j;
  j["table"] = table;
  json jrows = json::array();
  std::ostringstream text;
  text << "Table " << table << " reproduction\n";
  bool all_match = true;
  for (const auto& r : result) {
    jrows.push_back({{"algebra", r.name},
                     {"expected", r.expected},
                     {"computed", r.computed},
                     {"status", r.match ? "MATCH" : "MISMATCH"}});
    text << "  " << r.name << ": expected " << r.expected << ", computed "
         << r.computed << " -> " << (r.match ? "MATCH" : "MISMATCH") << "\n";
    all_match = all_match && r.match;
  }
  j["rows"] = jrows;
  j["all_match"] = all_match;

  std::filesystem::create_directories(outdir);
  write_output(outdir + "/table" + std::to_string(table) + ".json", dump(j));
  write_output(outdir + "/table" + std::to_string(table) + ".txt", text.str());
  std::cout << text.str();
  return all_match ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for classical Lie superalgebras: invariant "
               "rings, detecting subalgebras, cohomology, support varieties"};
  app.require_subcommand(1);

  FamilyArgs fa;
  std::string output = "-";
  std::string outdir = ".";
  std::string which = "e";
  std::string pair = "g";
  std::string coeff = "trivial";
  std::string module_path;
  std::string kind = "trivial";
  std::string algebra_ref;
  std::string lambda_text;
  int max_degree = 8;
  int table = 3;
  int max_size = 4;
  int samples = 10;
  uint64_t seed = 1;
  std::string mode = "modular";

  auto opts_of = [&]() {
    InvariantOptions o;
    o.mode = (mode == "exact") ? RankMode::exact : RankMode::modular;
    o.prime = prime_from_env(kDefaultPrime);
    if (o.prime == kConfirmPrime) o.confirm_prime = kDefaultPrime;
    return o;
  };

  // build
  auto* cmd_build = app.add_subcommand("build", "construct an algebra and emit its JSON");
  add_family_options(cmd_build, fa);
  cmd_build->add_option("-o,--output", output, "output path (default stdout)");
  cmd_build->callback([&]() {
    auto a = build(fa.parse(), fa.params());
    write_output(output, algebra_to_json(a));
  });

  // validate
  std::string algebra_file;
  auto* cmd_validate = app.add_subcommand("validate", "run the structure-constant validator");
  cmd_validate->add_option("--family", fa.family, "family name");
  cmd_validate->add_option("--m", fa.m, "first parameter");
  cmd_validate->add_option("--n", fa.n, "second parameter");
  cmd_validate->add_option("--algebra", algebra_file, "algebra JSON file");
  cmd_validate->add_option("-o,--output", output, "output path");
  cmd_validate->callback([&]() {
    LieSuperalgebra a = algebra_file.empty()
                            ? build(fa.parse(), fa.params())
                            : algebra_from_json(slurp(algebra_file));
    auto rep = validate(a);
    json j;
    j["algebra"] = a.name();
    j["ok"] = rep.ok();
    j["violations"] = rep.violations;
    write_output(output, dump(j));
    if (!rep.ok()) throw Error("validation failed");
  });

  // invariants
  auto* cmd_inv = app.add_subcommand("invariants", "invariant-ring dimensions vs Table 1");
  add_family_options(cmd_inv, fa);
  cmd_inv->add_option("--max-degree", max_degree, "maximum degree (default 8)");
  cmd_inv->add_option("--mode", mode, "modular (default) or exact");
  cmd_inv->add_option("-o,--output", output, "output path");
  cmd_inv->callback([&]() {
    auto a = build(fa.parse(), fa.params());
    auto opts = opts_of();
    auto computed = invariant_dimensions(a, max_degree, opts);
    auto predicted = predicted_series(fa.parse(), fa.params(), max_degree);
    auto gens = generator_degrees(a, max_degree, opts);
    json j;
    j["family"] = fa.family;
    j["params"] = fa.params();
    j["D"] = max_degree;
    j["computed"] = series_json(computed);
    j["predicted"] = series_json(predicted);
    j["generator_degrees"] = gens;
    j["match"] = computed == predicted;
    write_output(output, dump(j));
  });

  // detect
  auto* cmd_detect = app.add_subcommand("detect", "construct the detecting subalgebras");
  add_family_options(cmd_detect, fa);
  cmd_detect->add_option("--which", which, "e (default) or f");
  cmd_detect->add_option("-o,--output", output, "output path");
  cmd_detect->callback([&]() {
    auto a = build_shared(fa);
    auto [sub, rep] = assemble_detecting(
        a, which == "f" ? Detecting::F : Detecting::E);
    json j = detection_report_json(rep);
    j["algebra"] = a->name();
    j["which"] = which;
    j["subalgebra_dims"] = {{"even", sub.dim_even()}, {"odd", sub.dim_odd()}};
    write_output(output, dump(j));
  });

  // cohom
  auto* cmd_cohom = app.add_subcommand("cohom", "relative cohomology dimensions");
  add_family_options(cmd_cohom, fa);
  cmd_cohom->add_option("--pair", pair, "g (default), f, or e");
  cmd_cohom->add_option("--coeff", coeff,
                        "trivial (default), a module kind, or a module .json");
  cmd_cohom->add_option("--max-degree", max_degree, "maximum degree");
  cmd_cohom->add_option("-o,--output", output, "output path");
  cmd_cohom->callback([&]() {
    auto g = build_shared(fa);
    std::shared_ptr<const LieSuperalgebra> target = g;
    if (pair == "e" || pair == "f") {
      auto [sub, rep] = assemble_detecting(
          g, pair == "f" ? Detecting::F : Detecting::E);
      target = std::make_shared<const LieSuperalgebra>(std::move(sub));
    }
    Supermodule M = load_module(coeff, target);
    auto dims = cohomology_dims(target, M, max_degree);
    json j;
    j["family"] = fa.family;
    j["params"] = fa.params();
    j["pair"] = pair;
    j["coeff"] = coeff;
    j["max_degree"] = max_degree;
    j["dims"] = series_json(dims);
    if (pair == "e") {
      auto ideal = annihilator_truncated(target, M, max_degree);
      j["truncated_ideal"] = ideal_json(ideal);
    }
    write_output(output, dump(j));
  });

  // module
  auto* cmd_module = app.add_subcommand("module", "module utilities");
  cmd_module->require_subcommand(1);
  auto* cmd_mod_validate = cmd_module->add_subcommand("validate", "validate a module file");
  cmd_mod_validate->add_option("--module", module_path, "module JSON file")->required();
  cmd_mod_validate->add_option("--algebra-ref", algebra_ref,
                               "override the file's algebra_ref");
  cmd_mod_validate->add_option("-o,--output", output, "output path");
  cmd_mod_validate->callback([&]() {
    std::string text = slurp(module_path);
    std::string ref = algebra_ref.empty()
                          ? json::parse(text).at("algebra_ref").get<std::string>()
                          : algebra_ref;
    auto a = resolve_algebra_ref(ref);
    Supermodule m = module_from_json(text, a);
    auto rep = validate_module(m);
    json j;
    j["algebra_ref"] = ref;
    j["dim0"] = m.dim0;
    j["dim1"] = m.dim1;
    j["superdimension"] = superdimension(m);
    j["ok"] = rep.ok();
    j["violations"] = rep.violations;
    write_output(output, dump(j));
    if (!rep.ok()) throw Error("module validation failed");
  });
  auto* cmd_mod_make = cmd_module->add_subcommand("make", "emit a module JSON");
  cmd_mod_make->add_option("--algebra-ref", algebra_ref, "algebra reference")->required();
  cmd_mod_make->add_option("--kind", kind,
                           "trivial, natural, adjoint, dual_natural, "
                           "natural_tensor_dual, natural_plus_trivial, regular");
  cmd_mod_make->add_option("-o,--output", output, "output path");
  cmd_mod_make->callback([&]() {
    auto a = resolve_algebra_ref(algebra_ref);
    Supermodule m = make_module_kind(kind, a);
    write_output(output, module_to_json(m, algebra_ref));
  });

  // rankvar
  auto* cmd_rankvar = app.add_subcommand("rankvar", "sampling-based rank variety probe");
  add_family_options(cmd_rankvar, fa);
  cmd_rankvar->add_option("--module", module_path, "module JSON over e(<algebra>)");
  cmd_rankvar->add_option("--kind", kind, "module kind when no file is given");
  cmd_rankvar->add_option("--samples", samples, "samples per stratum");
  cmd_rankvar->add_option("--seed", seed, "sampling seed");
  cmd_rankvar->add_option("-o,--output", output, "output path");
  cmd_rankvar->callback([&]() {
    auto g = build_shared(fa);
    auto [sub, rep] = assemble_detecting(g, Detecting::E);
    auto e = std::make_shared<const LieSuperalgebra>(std::move(sub));
    Supermodule m = module_path.empty() ? make_module_kind(kind, e)
                                        : module_from_json(slurp(module_path), e);
    std::vector<Vec> e1;
    for (int i : e->odd_indices()) {
      Vec u = zero_vec(e->dim());
      u[i] = 1;
      e1.push_back(std::move(u));
    }
    auto report = rank_variety_probe(m, e1, samples, seed,
                                     module_path.empty() ? kind : module_path);
    write_output(output, dump(rankvar_report_json(report)));
  });

  // atyp
  auto* cmd_atyp = app.add_subcommand("atyp", "atypicality and defect combinatorics");
  add_family_options(cmd_atyp, fa);
  cmd_atyp->add_option("--lambda", lambda_text,
                       "weight coordinates, comma separated (default 0)");
  cmd_atyp->add_option("-o,--output", output, "output path");
  cmd_atyp->callback([&]() {
    auto a = build(fa.parse(), fa.params());
    json j;
    j["family"] = fa.family;
    j["params"] = fa.params();
    Vec lambda = zero_vec(a.weight_len);
    if (!lambda_text.empty()) {
      lambda.clear();
      std::stringstream ss(lambda_text);
      std::string item;
      while (std::getline(ss, item, ',')) lambda.push_back(parse_rat(item));
    }
    j["lambda"] = vec_json(lambda);
    if (a.has_weight_form()) {
      j["rho"] = vec_json(rho(a));
      j["atypicality"] = atypicality(a, lambda);
      j["defect_combinatorial"] = defect_combinatorial(a);
    } else {
      j["rho"] = nullptr;
      j["atypicality"] = nullptr;
      j["defect_combinatorial"] = nullptr;
      j["note"] = "family has no even invariant form; only the cohomological "
                  "defect is defined";
    }
    j["cohomological_defect"] = cohomological_defect(a, opts_of());
    write_output(output, dump(j));
  });

  // tables
  auto* cmd_tables = app.add_subcommand("tables", "reproduce the reference tables");
  cmd_tables->add_option("--table", table, "table number: 1, 3, or 4")->required();
  cmd_tables->add_option("--family", fa.family, "restrict to one family");
  cmd_tables->add_option("--m", fa.m, "first parameter");
  cmd_tables->add_option("--n", fa.n, "second parameter");
  cmd_tables->add_option("--max-size", max_size,
                         "defining-matrix size bound for row enumeration");
  cmd_tables->add_option("--max-degree", max_degree, "degree bound for table 1");
  cmd_tables->add_option("--mode", mode, "modular (default) or exact");
  cmd_tables->add_option("--output-dir", outdir, "directory for report files");

  // pipeline
  auto* cmd_pipeline = app.add_subcommand("pipeline", "end-to-end run with a manifest");
  add_family_options(cmd_pipeline, fa);
  cmd_pipeline->add_option("--out", outdir, "artifact directory")->required();
  cmd_pipeline->add_option("--max-degree", max_degree, "invariant/cohomology degree");
  cmd_pipeline->add_option("--samples", samples, "rank-variety samples per stratum");
  cmd_pipeline->add_option("--seed", seed, "sampling seed");

  int exit_code = kExitOk;

  cmd_tables->callback([&]() {
    std::vector<std::pair<Family, std::vector<int>>> rows;
    if (!fa.family.empty())
      rows.push_back({fa.parse(), fa.params()});
    else
      rows = families_by_size(max_size);
    exit_code =
        run_tables(table, rows, table == 1 ? max_degree : 0, opts_of(), outdir);
  });

  cmd_pipeline->callback([&]() {
    std::filesystem::create_directories(outdir);
    std::string stage = "build";
    try {
        json manifest;
        manifest["family"] = fa.family;
        manifest["params"] = fa.params();
        manifest["seed"] = seed;
        json artifacts = json::array();
        auto record = [&](const std::string& name, const std::string& file) {
          artifacts.push_back({{"stage", name}, {"file", file}});
        };

        auto g = build_shared(fa);
        write_output(outdir + "/build.json", algebra_to_json(*g));
        record("build", "build.json");

        stage = "validate";
        auto vrep = validate(*g);
        json vj;
        vj["algebra"] = g->name();
        vj["ok"] = vrep.ok();
        vj["violations"] = vrep.violations;
        write_output(outdir + "/validate.json", dump(vj));
        if (!vrep.ok()) throw Error("validation failed");
        record("validate", "validate.json");

        stage = "invariants";
        auto opts = opts_of();
        auto computed = invariant_dimensions(*g, max_degree, opts);
        auto predicted = predicted_series(fa.parse(), fa.params(), max_degree);
        json ij;
        ij["computed"] = series_json(computed);
        ij["predicted"] = series_json(predicted);
        ij["match"] = computed == predicted;
        write_output(outdir + "/invariants.json", dump(ij));
        record("invariants", "invariants.json");

        stage = "detect";
        auto [sub, drep] = assemble_detecting(g, Detecting::E);
        write_output(outdir + "/detect.json", dump(detection_report_json(drep)));
        record("detect", "detect.json");

        bool polar = table5_polar(fa.parse(), fa.params());
        if (polar) {
          auto e = std::make_shared<const LieSuperalgebra>(std::move(sub));

          stage = "cohom";
          Supermodule triv = trivial_module(e);
          auto dims = cohomology_dims(e, triv, max_degree);
          json cj;
          cj["pair"] = "e";
          cj["coeff"] = "trivial";
          cj["dims"] = series_json(dims);
          cj["truncated_ideal"] = ideal_json(
              annihilator_truncated(e, triv, std::min(max_degree, 4)));
          write_output(outdir + "/cohom.json", dump(cj));
          record("cohom", "cohom.json");

          stage = "rankvar";
          Supermodule probe = make_module_kind(
              g->realization.empty() ? "adjoint" : "natural", e);
          std::vector<Vec> e1;
          for (int i : e->odd_indices()) {
            Vec u = zero_vec(e->dim());
            u[i] = 1;
            e1.push_back(std::move(u));
          }
          auto rv = rank_variety_probe(probe, e1, samples, seed, "pipeline");
          write_output(outdir + "/rankvar.json", dump(rankvar_report_json(rv)));
          record("rankvar", "rankvar.json");
        } else {
          manifest["skipped"] = {"cohom", "rankvar"};
          manifest["skipped_reason"] = "family is not polar";
        }

        manifest["artifacts"] = artifacts;
        write_output(outdir + "/manifest.json", dump(manifest));
    } catch (const std::exception& e) {
      std::cerr << "pipeline failed at stage " << stage << ": " << e.what()
                << "\n";
      exit_code = kExitError;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return exit_code;
}

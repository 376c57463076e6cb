// Batch front-end: energy evaluation, design verification, certification,
// linear programming bounds, energy minimization, and table reproduction.
//
// Exit codes: 0 ok/verified, 1 falsified/mismatch, 2 inconclusive, 64 usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pframe/catalog.hpp"
#include "pframe/certify.hpp"
#include "pframe/energy.hpp"
#include "pframe/lpbound.hpp"
#include "pframe/minimize.hpp"
#include "pframe/reproduce.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 64;

int verdict_code(pframe::Verdict v) {
  switch (v) {
    case pframe::Verdict::Verified: return kOk;
    case pframe::Verdict::Falsified: return kFalsified;
    default: return kInconclusive;
  }
}

std::string scalar_to_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// csv/table renderings flatten the top level; nested values are embedded
// as JSON strings
void render(const json& j, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << j.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      rows.emplace_back(key, scalar_to_string(value));
  } else {
    rows.emplace_back("value", scalar_to_string(j));
  }
  if (format == "csv") {
    os << "field,value\n";
    for (const auto& [k, v] : rows) {
      std::string esc = v;
      for (size_t pos = 0; (pos = esc.find('"', pos)) != std::string::npos;
           pos += 2)
        esc.insert(pos, 1, '"');
      os << k << ",\"" << esc << "\"\n";
    }
  } else {  // table
    size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows)
      os << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  }
}

void emit(const json& j, const std::string& format, const std::string& out) {
  if (out.empty()) {
    render(j, format, std::cout);
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open output file: " + out);
    render(j, format, os);
  }
}

pframe::WeightedConfiguration resolve_config(const std::string& name,
                                             const std::string& file) {
  if (!file.empty()) return pframe::load_config(file);
  if (!name.empty()) return pframe::catalog_get(name);
  throw CLI::ValidationError("need --config or --file");
}

json strength_json(const pframe::WeightedConfiguration& c, int max_t) {
  pframe::StrengthReport rep = pframe::design_strength(c, max_t);
  pframe::TightnessReport tight = pframe::tightness_check(c);
  json j;
  j["space"] = pframe::space_to_string(c.space);
  j["n_points"] = c.size();
  j["strength"] = rep.strength;
  j["moment_residuals"] = rep.residuals;
  j["tight"] = tight.tight;
  j["distinct_distances"] = tight.m_distances;
  if (!tight.note.empty()) j["note"] = tight.note;
  return j;
}

int cmd_energy(const std::string& name, const std::string& file, double p,
               const std::string& format, const std::string& out) {
  pframe::WeightedConfiguration c = resolve_config(name, file);
  std::optional<double> target;
  if (!name.empty()) {
    if (const auto* e = pframe::catalog_find(name))
      for (const auto& ee : e->expected_energies)
        if (std::abs(ee.p - p) < 1e-12) target = ee.value;
  }
  auto rep = pframe::energy_report(c, pframe::PFrameKernel{p}, target);
  emit(rep.to_json(), format, out);
  if (target && std::abs(rep.value - *target) > 1e-10) return kFalsified;
  return kOk;
}

int cmd_verify_design(const std::string& name, const std::string& file,
                      int max_t, const std::string& format,
                      const std::string& out) {
  pframe::WeightedConfiguration c = resolve_config(name, file);
  emit(strength_json(c, max_t), format, out);
  return kOk;
}

int cmd_certify(const std::string& name, const std::string& file, double p,
                bool moment, const std::string& verify_path,
                const std::string& format, const std::string& out) {
  pframe::Certificate cert;
  std::optional<pframe::WeightedConfiguration> config;
  if (!name.empty() || !file.empty()) config = resolve_config(name, file);
  if (!verify_path.empty()) {
    std::ifstream is(verify_path);
    if (!is)
      throw std::runtime_error("cannot read certificate: " + verify_path);
    json j;
    is >> j;
    cert = pframe::Certificate::from_json(j);
    if (!config && !cert.matched_config.empty())
      config = pframe::catalog_get(cert.matched_config);
  } else if (config) {
    cert = moment ? pframe::moment_certificate(*config, name)
                  : pframe::build_tight_certificate(
                        *config, pframe::PFrameKernel{p}, name);
  } else {
    throw CLI::ValidationError("need --config/--file or --verify");
  }
  pframe::verify_certificate(cert, config ? &*config : nullptr);
  emit(cert.to_json(), format, out);
  return verdict_code(cert.verdict);
}

int cmd_certify_600cell(double p, const std::vector<double>& range,
                        const std::string& format, const std::string& out) {
  if (!range.empty()) {
    pframe::RangeReport rep = pframe::certify_600cell_range(range[0], range[1]);
    json j;
    j["verdict"] = pframe::to_string(rep.verdict);
    j["p_lo"] = range[0];
    j["p_hi"] = range[1];
    j["cells"] = rep.cells.size();
    j["grid_sweeps"] = rep.grid_sweeps;
    j["grid_sweeps_ok"] = rep.grid_sweeps_ok;
    if (rep.offending)
      j["offending"] = {rep.offending->lo, rep.offending->hi};
    emit(j, format, out);
    return verdict_code(rep.verdict);
  }
  pframe::Certificate cert = pframe::build_600cell_certificate(p);
  auto config = pframe::catalog_get("600-cell");
  pframe::verify_certificate(cert, &config);
  emit(cert.to_json(), format, out);
  return verdict_code(cert.verdict);
}

int cmd_bound(const std::string& space_text, double p, int degree, int grid,
              const std::string& format, const std::string& out) {
  pframe::SpaceDescriptor space = pframe::parse_space(space_text);
  int deg = degree > 0 ? degree : pframe::default_lp_degree(p);
  pframe::Certificate cert =
      pframe::lp_lower_bound(space, pframe::PFrameKernel{p}, deg, grid);
  emit(cert.to_json(), format, out);
  return verdict_code(cert.verdict);
}

int cmd_minimize(const std::string& space_text, double p, int n, int starts,
                 std::uint64_t seed, const std::string& format,
                 const std::string& out) {
  pframe::SpaceDescriptor space = pframe::parse_space(space_text);
  pframe::KernelSpec kernel = pframe::PFrameKernel{p};
  auto runs = pframe::multistart(space, kernel, n, starts, seed);
  const pframe::ParticleState& best = pframe::best_run(runs);
  pframe::WeightedConfiguration canon = pframe::canonicalize_support(best);
  pframe::CatalogMatch match = pframe::compare_to_catalog(canon, kernel);
  int converged = 0;
  for (const auto& r : runs) converged += r.converged ? 1 : 0;
  json j;
  j["space"] = pframe::space_to_string(space);
  j["p"] = p;
  j["starts"] = starts;
  j["converged_runs"] = converged;
  j["best_energy"] = best.energy;
  j["best_seed"] = best.seed;
  j["support_size"] = canon.size();
  j["catalog_match"] = match.census_match ? match.name : "";
  j["strength_match"] = match.strength_match;
  j["energy_gap"] = match.energy_gap;
  j["best_catalog"] = match.best_name;
  j["best_catalog_energy"] = match.best_energy;
  j["configuration"] = pframe::config_to_json(canon);
  emit(j, format, out);
  return kOk;
}

int cmd_causal(const std::string& support, const std::string& format,
               const std::string& out) {
  pframe::CausalSupport which;
  if (support == "cross-polytope") {
    which = pframe::CausalSupport::CrossPolytope;
  } else if (support == "icosahedron") {
    which = pframe::CausalSupport::Icosahedron;
  } else {
    throw CLI::ValidationError(
        "--support must be cross-polytope or icosahedron");
  }
  pframe::Certificate cert = pframe::causal_certificate(which);
  auto config = pframe::catalog_get(cert.matched_config);
  pframe::verify_certificate(cert, &config);
  emit(cert.to_json(), format, out);
  return verdict_code(cert.verdict);
}

int cmd_reproduce(const std::vector<int>& tables, const std::string& format,
                  const std::string& out) {
  std::vector<int> which = tables;
  if (which.empty()) which = {1, 2, 3, 5, 6, 9};
  auto reports = pframe::reproduce_tables(which);
  json j = json::object();
  bool all = true;
  json list = json::array();
  for (const auto& rep : reports) {
    json t;
    t["table"] = rep.table;
    t["title"] = rep.title;
    t["pass"] = rep.all_pass();
    all = all && rep.all_pass();
    json cells = json::array();
    for (const auto& cell : rep.cells) {
      json cj;
      cj["label"] = cell.label;
      cj["expected"] = cell.expected;
      cj["actual"] = cell.actual;
      cj["tolerance"] = cell.tolerance;
      cj["pass"] = cell.pass;
      if (cell.skipped) cj["skipped"] = true;
      if (!cell.note.empty()) cj["note"] = cell.note;
      cells.push_back(cj);
    }
    t["cells"] = cells;
    list.push_back(t);
  }
  j["tables"] = list;
  j["pass"] = all;
  emit(j, format, out);
  return all ? kOk : kFalsified;
}

int cmd_catalog(const std::string& format, const std::string& out) {
  json list = json::array();
  for (const auto& e : pframe::catalog()) {
    json j;
    j["name"] = e.name;
    j["description"] = e.description;
    j["space"] = pframe::space_to_string(e.space);
    j["n_lines"] = e.n_lines;
    j["strength"] = e.strength;
    j["tight"] = e.tight;
    j["constructible"] = e.constructible();
    list.push_back(j);
  }
  emit(list, format, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-frame and pairwise-energy toolkit"};
  app.require_subcommand(1);

  std::string format = "json", out, config_name, config_file, space_text;
  std::string verify_path, support;
  double p = 3.0;
  int max_t = 6, degree = 0, grid = 0, n_points = 0, starts = 1, threads = 1;
  std::uint64_t seed = 1;
  bool moment = false;
  std::vector<double> range;
  std::vector<int> tables;

  app.add_option("--format", format, "json, csv, or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--out", out, "write the report to a file");
  app.add_option("--threads", threads,
                 "reserved; current implementation is single-threaded");

  auto* energy = app.add_subcommand("energy", "p-frame energy of a "
                                              "configuration");
  energy->add_option("--config", config_name, "catalog entry name");
  energy->add_option("--file", config_file, "configuration JSON file");
  energy->add_option("--p", p, "exponent")->required();

  auto* verify = app.add_subcommand("verify-design",
                                    "design strength and tightness");
  verify->add_option("--config", config_name, "catalog entry name");
  verify->add_option("--file", config_file, "configuration JSON file");
  verify->add_option("--max-t", max_t, "largest moment order to test");

  auto* certify = app.add_subcommand("certify",
                                     "build or re-verify a certificate");
  certify->add_option("--config", config_name, "catalog entry name");
  certify->add_option("--file", config_file, "configuration JSON file");
  certify->add_option("--p", p, "exponent");
  certify->add_flag("--moment", moment,
                    "upper-bound certificate for the next moment");
  certify->add_option("--verify", verify_path,
                      "re-verify a stored certificate JSON");

  auto* c600 = app.add_subcommand("certify-600cell",
                                  "600-cell optimality certificate");
  c600->add_option("--p", p, "exponent in [8, 10]");
  c600->add_option("--range", range, "certify a whole exponent range")
      ->expected(2);

  auto* bound = app.add_subcommand("bound",
                                   "linear programming lower bound");
  bound->add_option("--space", space_text, "e.g. rp:4, cp:3, s:3")
      ->required();
  bound->add_option("--p", p, "exponent")->required();
  bound->add_option("--degree", degree, "polynomial degree (default by p)");
  bound->add_option("--grid", grid, "override the constraint grid size");

  auto* minimize = app.add_subcommand("minimize",
                                      "multistart energy minimization");
  minimize->add_option("--space", space_text, "e.g. rp:3")->required();
  minimize->add_option("--p", p, "exponent")->required();
  minimize->add_option("-N,--points", n_points, "particles per run")
      ->required();
  minimize->add_option("--starts", starts, "independent runs");
  minimize->add_option("--seed", seed, "base RNG seed");

  auto* causal = app.add_subcommand("causal",
                                    "causal kernel certificates on S^2");
  causal->add_option("--support", support,
                     "cross-polytope or icosahedron")->required();

  auto* reproduce = app.add_subcommand("reproduce-tables",
                                       "recompute the reference tables");
  reproduce->add_option("--tables", tables, "subset of {1,2,3,5,6,9}");

  app.add_subcommand("catalog", "list the configuration catalog");

  // allow the common flags after the subcommand name
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (energy->parsed())
      return cmd_energy(config_name, config_file, p, format, out);
    if (verify->parsed())
      return cmd_verify_design(config_name, config_file, max_t, format, out);
    if (certify->parsed())
      return cmd_certify(config_name, config_file, p, moment, verify_path,
                         format, out);
    if (c600->parsed()) return cmd_certify_600cell(p, range, format, out);
    if (bound->parsed())
      return cmd_bound(space_text, p, degree, grid, format, out);
    if (minimize->parsed())
      return cmd_minimize(space_text, p, n_points, starts, seed, format, out);
    if (causal->parsed()) return cmd_causal(support, format, out);
    if (reproduce->parsed()) return cmd_reproduce(tables, format, out);
    return cmd_catalog(format, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconclusive;
  }
}

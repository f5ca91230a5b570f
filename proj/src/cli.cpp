// Copyright 2026 The pahp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pahp/cli.hpp"

#include <filesystem>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "pahp/decimal.hpp"
#include "pahp/error.hpp"
#include "pahp/project.hpp"
#include "pahp/report.hpp"
#include "pahp/service.hpp"

namespace pahp::cli {

namespace {

using session::Json;
using session::Project;

struct Settings {
  std::string project = "project.json";
  std::string format = "text";
  std::uint64_t seed = 0;
  unsigned jobs = 1;

  bool json() const { return format == "json"; }
};

// Domain failure whose message has already been printed.
struct Reported {
  int code;
};

Project load(const Settings& s) { return session::load_file(s.project); }
void store(const Settings& s, const Project& p) { session::save_file(p, s.project); }

report::ReportBundle compute(const Project& p, const Settings& s, bool solve) {
  report::ReportOptions ro;
  ro.solve = solve;
  ro.jobs = s.jobs;
  return report::build_report(p, ro);
}

void print_warnings(const report::ReportBundle& b, std::ostream& out) {
  if (b.warnings.empty()) return;
  out << "WARNING: non-monotone normalized scales\n";
  for (const auto& w : b.warnings) out << "  " << w.message << '\n';
  out << '\n';
}

void print_conflict(const report::ReportBundle& b, std::ostream& out) {
  out << "no compatible capacity (epsilon* = " << format_fixed(b.naror.epsilon_star, 6) << ")\n";
  out << "conflicting statements:\n";
  for (auto k : b.naror.conflict) {
    out << "  [" << k << "] " << naror::describe(b.statements[k]) << '\n';
  }
}

int cmd_init(const Settings& s, const std::string& id, const std::string& criteria_file,
             bool force, std::ostream& out) {
  if (!force && std::filesystem::exists(s.project)) {
    throw Error(s.project + " already exists (use --force to overwrite)");
  }
  Project p(id.empty() ? std::filesystem::path(s.project).stem().string() : id);
  if (!criteria_file.empty()) p.set_criteria(session::import_criteria(session::read_text_file(criteria_file)));
  store(s, p);
  if (s.json()) {
    out << Json{{"project", p.id()}, {"version", p.version()}, {"criteria", p.criteria().size()}}.dump(2)
        << '\n';
  } else {
    out << "created " << s.project << " (" << p.criteria().size() << " criteria)\n";
  }
  return kOk;
}

int cmd_import_performances(const Settings& s, const std::string& file, std::ostream& out) {
  auto p = load(s);
  auto table = session::import_performances(session::read_text_file(file), p.criteria());
  const auto rows = table.rows();
  p.set_ratings(std::move(table));
  store(s, p);
  if (s.json()) {
    out << Json{{"alternatives", rows}, {"version", p.version()}}.dump(2) << '\n';
  } else {
    out << "imported " << rows << " alternatives x " << p.criteria().size() << " criteria\n";
  }
  return kOk;
}

int cmd_set_references(const Settings& s, const std::string& file, const std::string& criterion,
                       const std::vector<double>& levels, const std::vector<double>& values,
                       std::ostream& out) {
  auto p = load(s);
  std::size_t n = 0;
  if (!file.empty()) {
    auto entries = session::import_references(session::read_text_file(file));
    n = entries.size();
    for (auto& e : entries) p.set_references(std::move(e));
  } else {
    if (criterion.empty() || levels.empty()) {
      throw ValidationError("set-references needs --file or --criterion with --levels");
    }
    session::ReferenceEntry e;
    e.levels = {criterion, levels};
    if (!values.empty()) e.values = values;
    p.set_references(std::move(e));
    n = 1;
  }
  store(s, p);
  if (s.json()) {
    out << Json{{"updated", n}, {"version", p.version()}}.dump(2) << '\n';
  } else {
    out << "set reference levels for " << n << " criteria\n";
  }
  return kOk;
}

int cmd_import_matrix(const Settings& s, const std::string& criterion, const std::string& file,
                      std::ostream& out) {
  auto p = load(s);
  const auto judgments = session::import_judgments(session::read_text_file(file));
  const auto r = p.set_matrix(criterion, judgments);
  store(s, p);
  if (s.json()) {
    auto j = report::consistency_to_json(r);
    j["criterion"] = criterion;
    out << j.dump(2) << '\n';
  } else {
    out << criterion << ": CR " << format_fixed(r.cr, 4) << (r.acceptable ? " (acceptable)" : " (NOT acceptable)")
        << '\n';
  }
  return kOk;
}

int cmd_check(const Settings& s, const std::string& ri_mode, int samples, std::ostream& out) {
  const auto p = load(s);
  ahp::RandomIndexSource ri;
  if (ri_mode == "monte-carlo") ri = ahp::RandomIndexSource::monte_carlo(samples, s.seed);
  std::vector<report::MatrixConsistency> rows;
  for (const auto& m : p.matrices()) rows.push_back({m.criterion, ahp::consistency(m.matrix, ri)});
  const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.report.acceptable; });
  if (s.json()) {
    Json a = Json::array();
    for (const auto& r : rows) {
      auto j = report::consistency_to_json(r.report);
      j["criterion"] = r.criterion;
      a.push_back(std::move(j));
    }
    out << Json{{"matrices", a}, {"all_acceptable", all_ok}}.dump(2) << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> t{{"criterion", "n", "lambda_max", "CI", "RI", "CR", "acceptable"}};
  for (const auto& r : rows) {
    t.push_back({r.criterion, std::to_string(p.find_matrix(r.criterion)->matrix.size()),
                 format_fixed(r.report.lambda_max, 5), format_fixed(r.report.ci, 5),
                 format_fixed(r.report.ri, 4), r.report.degenerate ? "inf" : format_fixed(r.report.cr, 4),
                 r.report.acceptable ? "yes" : "no"});
  }
  out << report::render_table(t);
  if (rows.empty()) {
    out << "no pairwise matrices\n";
  } else {
    out << (all_ok ? "all matrices acceptable (CR <= 0.10)\n" : "some matrices exceed CR 0.10\n");
  }
  return kOk;
}

int cmd_normalize(const Settings& s, std::ostream& out) {
  const auto b = compute(load(s), s, false);
  if (s.json()) {
    out << report::to_json(b).dump(2) << '\n';
  } else {
    print_warnings(b, out);
    out << report::to_text(b);
  }
  return kOk;
}

int cmd_add_statement(const Settings& s, const std::string& kind, const std::vector<std::string>& items,
                      const std::string& label, std::ostream& out) {
  auto p = load(s);
  naror::PreferenceStatement st{naror::parse_statement_kind(kind), items, label};
  p.add_statement(st);
  store(s, p);
  if (s.json()) {
    out << Json{{"index", p.statements().size() - 1}, {"version", p.version()}}.dump(2) << '\n';
  } else {
    out << "[" << p.statements().size() - 1 << "] " << naror::describe(st) << '\n';
  }
  return kOk;
}

int cmd_remove_statement(const Settings& s, std::size_t index, std::ostream& out) {
  auto p = load(s);
  p.remove_statement(index);
  store(s, p);
  if (s.json()) {
    out << Json{{"statements", p.statements().size()}, {"version", p.version()}}.dump(2) << '\n';
  } else {
    out << "removed statement " << index << '\n';
  }
  return kOk;
}

void print_capacity(const report::ReportBundle& b, std::ostream& out) {
  const auto& n = b.naror;
  const auto& crit = b.normalized.criteria;
  std::vector<std::vector<std::string>> t{{"subset", "moebius"}};
  const auto s = n.capacity.singleton_masses();
  const auto pm = n.capacity.pair_masses();
  for (std::size_t i = 0; i < crit.size(); ++i) t.push_back({"{" + crit[i] + "}", format_fixed(s[i], 6)});
  for (std::size_t i = 0; i < crit.size(); ++i) {
    for (std::size_t j = i + 1; j < crit.size(); ++j) {
      const double v = pm[choquet::pair_index(i, j, crit.size())];
      if (std::abs(v) > 5e-7) t.push_back({"{" + crit[i] + "," + crit[j] + "}", format_fixed(v, 6)});
    }
  }
  out << "\nRepresentative capacity (Moebius masses, zero pairs omitted)\n" << report::render_table(t);
}

int cmd_solve(const Settings& s, std::ostream& out) {
  auto p = load(s);
  const auto b = compute(p, s, true);
  p.append_round(report::make_round(b));
  store(s, p);
  if (s.json()) {
    out << report::to_json(b).dump(2) << '\n';
    return b.naror.compatible ? kOk : kDomainError;
  }
  print_warnings(b, out);
  const auto& n = b.naror;
  if (!n.compatible) {
    print_conflict(b, out);
    return kDomainError;
  }
  std::size_t strict = 0;
  std::size_t incomparable = 0;
  const auto& r = n.relations;
  for (std::size_t a = 0; a < r.size(); ++a) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (a == c) continue;
      if (r.nec(a, c) && !r.nec(c, a)) ++strict;
      if (a < c && !r.nec(a, c) && !r.nec(c, a)) ++incomparable;
    }
  }
  out << "epsilon*: " << format_fixed(n.epsilon_star, 6) << '\n';
  out << "necessary relation: " << strict << " strict pairs, " << incomparable
      << " incomparable pairs\n";
  out << "representative: stage-1 epsilon " << format_fixed(n.stage1_epsilon, 6) << ", stage-2 delta "
      << format_fixed(n.stage2_delta, 6) << '\n';
  print_capacity(b, out);
  std::vector<std::vector<std::string>> t{{"rank", "alternative", "choquet"}};
  for (const auto& ra : n.ranking) t.push_back({std::to_string(ra.rank), ra.id, format_fixed(ra.value, 4)});
  out << "\nRanking\n" << report::render_table(t);
  out << "\nround " << p.rounds().size() << " recorded\n";
  return kOk;
}

int cmd_rank(const Settings& s, std::ostream& out) {
  const auto p = load(s);
  if (p.alternatives().empty()) throw Error("project has no alternatives to rank");
  const auto b = compute(p, s, true);
  if (!b.naror.compatible) {
    if (s.json()) {
      out << report::to_json(b).dump(2) << '\n';
    } else {
      print_conflict(b, out);
    }
    return kDomainError;
  }
  if (s.json()) {
    Json a = Json::array();
    for (const auto& r : b.naror.ranking) {
      a.push_back({{"alternative", r.id}, {"value", format_decimal(r.value)}, {"rank", r.rank}});
    }
    out << Json{{"ranking", a}}.dump(2) << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> t{{"rank", "alternative", "choquet"}};
  for (const auto& r : b.naror.ranking) t.push_back({std::to_string(r.rank), r.id, format_fixed(r.value, 4)});
  out << report::render_table(t);
  return kOk;
}

int cmd_diagnose(const Settings& s, std::ostream& out) {
  const auto p = load(s);
  const auto b = compute(p, s, false);
  const auto system = naror::compile(p.statements(), b.normalized);
  const auto f = naror::feasibility(system);
  if (f.compatible()) {
    if (s.json()) {
      out << Json{{"compatible", true}, {"epsilon_star", format_decimal(f.epsilon_star)}}.dump(2) << '\n';
    } else {
      out << "statements are compatible (epsilon* = " << format_fixed(f.epsilon_star, 6) << ")\n";
    }
    return kOk;
  }
  const auto conflict = naror::diagnose(p.statements(), b.normalized);
  if (s.json()) {
    Json a = Json::array();
    for (auto k : conflict) a.push_back({{"index", k}, {"statement", naror::describe(p.statements()[k])}});
    out << Json{{"compatible", false}, {"conflict", a}}.dump(2) << '\n';
  } else {
    out << "no compatible capacity; irreducible conflicting subset:\n";
    for (auto k : conflict) out << "  [" << k << "] " << naror::describe(p.statements()[k]) << '\n';
  }
  return kDomainError;
}

int cmd_report(const Settings& s, std::ostream& out) {
  const auto b = compute(load(s), s, true);
  if (s.json()) {
    out << report::to_json(b).dump(2) << '\n';
  } else {
    out << report::to_text(b);
  }
  return kOk;
}

int cmd_budget(const Settings& s, std::ostream& out) {
  const auto p = load(s);
  std::vector<int> counts;
  int subjective = 0;
  for (const auto& c : p.criteria()) {
    if (!c.objective) ++subjective;
    const auto* r = p.find_references(c.id);
    if (!r) throw ValidationError("criterion " + c.id + " has no reference levels", "references." + c.id);
    counts.push_back(static_cast<int>(r->levels.levels.size()));
  }
  const auto b = scale::comparison_budget(subjective, static_cast<int>(p.alternatives().size()), counts);
  if (s.json()) {
    out << Json{{"full_ahp", b.full_ahp}, {"parsimonious", b.parsimonious}}.dump(2) << '\n';
  } else {
    out << report::render_table({{"method", "comparisons"},
                                 {"full AHP", std::to_string(b.full_ahp)},
                                 {"parsimonious", std::to_string(b.parsimonious)}});
  }
  return kOk;
}

int cmd_serve(const Settings& s, const std::string& data_dir, const std::string& host, int port,
              std::ostream& out) {
  service::Service svc({data_dir, s.jobs});
  out << "serving " << data_dir << " on http://" << host << ":" << port << '\n' << std::flush;
  if (!svc.serve(host, port)) throw Error("cannot listen on " + host + ":" + std::to_string(port));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parsimonious AHP with robust ordinal regression on a 2-additive Choquet integral",
               "pahp"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--project", s.project, "Project document path")->capture_default_str();
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", s.seed, "Seed for Monte Carlo random indices");
  app.add_option("--jobs", s.jobs, "Worker threads for relation LPs (0 = all cores)");

  std::function<int()> action;

  auto* init = app.add_subcommand("init", "Create a project document");
  std::string init_id, init_criteria;
  bool init_force = false;
  init->add_option("--id", init_id, "Project id (default: file stem)");
  init->add_option("--criteria", init_criteria, "Criteria CSV")->check(CLI::ExistingFile);
  init->add_flag("--force", init_force, "Overwrite an existing document");
  init->callback([&] { action = [&] { return cmd_init(s, init_id, init_criteria, init_force, out); }; });

  auto* imp = app.add_subcommand("import-performances", "Load the ratings table from CSV");
  std::string imp_file;
  imp->add_option("file", imp_file, "Performance CSV")->required()->check(CLI::ExistingFile);
  imp->callback([&] { action = [&] { return cmd_import_performances(s, imp_file, out); }; });

  auto* refs = app.add_subcommand("set-references", "Set reference levels for criteria");
  std::string refs_file, refs_criterion;
  std::vector<double> refs_levels, refs_values;
  refs->add_option("--file", refs_file, "References CSV (criterion,levels,values)")->check(CLI::ExistingFile);
  refs->add_option("--criterion", refs_criterion, "Criterion id");
  refs->add_option("--levels", refs_levels, "Reference levels, ascending");
  refs->add_option("--values", refs_values, "Normalized values for the levels (no matrix needed)");
  refs->callback([&] {
    action = [&] { return cmd_set_references(s, refs_file, refs_criterion, refs_levels, refs_values, out); };
  });

  auto* mat = app.add_subcommand("import-matrix", "Load a pairwise matrix over reference levels");
  std::string mat_criterion, mat_file;
  mat->add_option("criterion", mat_criterion, "Criterion id")->required();
  mat->add_option("file", mat_file, "Judgments CSV")->required()->check(CLI::ExistingFile);
  mat->callback([&] { action = [&] { return cmd_import_matrix(s, mat_criterion, mat_file, out); }; });

  auto* check = app.add_subcommand("check", "Consistency report for every matrix");
  std::string ri_mode = "tabled";
  int ri_samples = 500;
  check->add_option("--ri", ri_mode, "Random index source")
      ->check(CLI::IsMember({"tabled", "monte-carlo"}))
      ->capture_default_str();
  check->add_option("--samples", ri_samples, "Monte Carlo sample count")->capture_default_str();
  check->callback([&] { action = [&] { return cmd_check(s, ri_mode, ri_samples, out); }; });

  auto* norm = app.add_subcommand("normalize", "Normalized scales and evaluation table");
  norm->callback([&] { action = [&] { return cmd_normalize(s, out); }; });

  auto* add = app.add_subcommand("add-statement", "Append a preference statement");
  std::string add_kind, add_label;
  std::vector<std::string> add_items;
  add->add_option("kind", add_kind, "Statement kind")->required();
  add->add_option("items", add_items, "Alternative or criterion ids")->required();
  add->add_option("--label", add_label, "Free-text label");
  add->callback([&] { action = [&] { return cmd_add_statement(s, add_kind, add_items, add_label, out); }; });

  auto* rm = app.add_subcommand("remove-statement", "Delete a statement by index");
  std::size_t rm_index = 0;
  rm->add_option("index", rm_index, "Statement index")->required();
  rm->callback([&] { action = [&] { return cmd_remove_statement(s, rm_index, out); }; });

  auto* solve = app.add_subcommand("solve", "Compatibility, relations, representative capacity; records a round");
  solve->callback([&] { action = [&] { return cmd_solve(s, out); }; });

  auto* rank = app.add_subcommand("rank", "Ranking under the representative capacity");
  rank->callback([&] { action = [&] { return cmd_rank(s, out); }; });

  auto* diag = app.add_subcommand("diagnose", "Find an irreducible set of conflicting statements");
  diag->callback([&] { action = [&] { return cmd_diagnose(s, out); }; });

  auto* rep = app.add_subcommand("report", "Full report bundle");
  rep->callback([&] { action = [&] { return cmd_report(s, out); }; });

  auto* budget = app.add_subcommand("budget", "Pairwise comparison counts: full AHP vs parsimonious");
  budget->callback([&] { action = [&] { return cmd_budget(s, out); }; });

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  std::string serve_dir = "pahp-data", serve_host = "127.0.0.1";
  int serve_port = 8080;
  serve->add_option("--data-dir", serve_dir, "Project directory")->capture_default_str();
  serve->add_option("--host", serve_host, "Bind address")->capture_default_str();
  serve->add_option("--port", serve_port, "Port")->capture_default_str();
  serve->callback([&] { action = [&] { return cmd_serve(s, serve_dir, serve_host, serve_port, out); }; });

  std::vector<std::string> argv_store{"pahp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << (e.field().empty() ? "" : " [" + e.field() + "]") << '\n';
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << (e.field().empty() ? "" : " [" + e.field() + "]") << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kDomainError;
}

}  // namespace pahp::cli

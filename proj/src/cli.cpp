// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wdqual/abstraction.hpp"
#include "wdqual/dump_reader.hpp"
#include "wdqual/extract.hpp"
#include "wdqual/frequency_tables.hpp"
#include "wdqual/manifest.hpp"
#include "wdqual/scores.hpp"
#include "wdqual/statement_json.hpp"
#include "wdqual/synth.hpp"
#include "wdqual/taxonomy.hpp"

namespace wdqual::cli {

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

Compression parse_compression(const std::string& name) {
  if (name == "auto") return Compression::Auto;
  if (name == "none") return Compression::None;
  if (name == "gzip") return Compression::Gzip;
  if (name == "bzip2") return Compression::Bzip2;
  throw CLI::ValidationError("--compression", "expected auto|none|gzip|bzip2");
}

struct ExtractArgs {
  std::string dump;
  std::string config;
  std::string properties_file;  // optional pre-filtered source for pass 1
  std::string out_dir;
  int shards = 1;
  std::string compression = "auto";
};

int cmd_extract(const ExtractArgs& args, const std::vector<std::string>& argv, std::ostream& out) {
  const auto cfg = args.config.empty() ? AdmissibilityConfig::defaults()
                                       : AdmissibilityConfig::load(args.config);
  const auto compression = parse_compression(args.compression);

  RunManifest manifest("extract");
  manifest.set_argv(argv);
  manifest.add_input(args.dump);
  if (!args.config.empty()) manifest.add_input(args.config);
  if (!args.properties_file.empty()) manifest.add_input(args.properties_file);

  // pass 1 may scan a pre-filtered property-only file instead of the
  // whole dump; property entities are a tiny fraction of it
  const auto& catalog_source = args.properties_file.empty() ? args.dump : args.properties_file;
  auto catalog = build_catalog(catalog_source, args.properties_file.empty() ? compression : Compression::Auto, cfg);
  auto extracted = extract_from_dump(args.dump, compression, catalog.catalog, cfg, args.shards);

  const auto violations = check_table_consistency(extracted.tables);
  if (!violations.empty()) {
    throw std::runtime_error("internal consistency check failed: " + violations.front());
  }

  IngestStatsExtra stats;
  stats.lines = extracted.stream.lines;
  stats.lines_skipped = extracted.stream.skipped;
  stats.parse_error_samples = extracted.stream.error_samples;
  stats.unknown_constraint_shapes = catalog.catalog.unknown_constraint_shapes;
  stats.catalog_properties = catalog.catalog.size();
  save_tables(extracted.tables, stats, args.out_dir);

  for (const char* name : {"p-freq.json", "q-freq.json", "p-q-freq.json", "q-pair-freq.json",
                           "ingest-stats.json"}) {
    manifest.add_output(fs::path(args.out_dir) / name);
  }
  manifest.set_counter("entities", extracted.tables.entities);
  manifest.set_counter("statements", extracted.tables.total_statements);
  manifest.set_counter("lines_skipped", extracted.stream.skipped);
  manifest.set_counter("shards", static_cast<std::uint64_t>(args.shards));
  manifest.write(fs::path(args.out_dir) / "run-manifest.json");

  out << "extracted " << extracted.tables.total_statements << " statements from "
      << extracted.tables.entities << " entities (" << extracted.tables.q_freq.size()
      << " admissible qualifiers, " << extracted.stream.skipped << " lines skipped)\n";
  return kExitOk;
}

struct DiversityArgs {
  std::string tables_dir;
  std::string out_file = "q-diversity-score.csv";
  std::uint64_t top = 0;
  bool raw_score = false;
};

int cmd_diversity(const DiversityArgs& args, const std::vector<std::string>& argv, std::ostream& out) {
  RunManifest manifest("diversity");
  manifest.set_argv(argv);

  const auto tables = load_tables(args.tables_dir);
  auto scores = importance_scores(tables, args.raw_score);

  const auto k = std::min<std::uint64_t>(args.top, scores.size());
  double coverage = -1.0;
  if (k > 0 && !tables.q_pair_freq.empty()) {
    coverage = coverage_of_top_k(tables, scores, k);
  }
  if (k > 0 && scores.size() > k) scores.resize(k);

  write_file_atomic(args.out_file, scores_to_csv(scores));
  manifest.add_output(args.out_file);
  manifest.set_counter("qualifiers", scores.size());
  manifest.write(fs::path(args.out_file).string() + ".manifest.json");

  out << "scored " << scores.size() << " qualifiers -> " << args.out_file << "\n";
  if (coverage >= 0.0) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", 100.0 * coverage);
    out << "top " << k << " qualifiers cover " << buf << "% of qualifications\n";
  }
  return kExitOk;
}

struct PlotDataArgs {
  std::string tables_dir;
  std::string scores_file;
  std::string out_dir;
};

int cmd_plotdata(const PlotDataArgs& args, const std::vector<std::string>& argv, std::ostream& out) {
  RunManifest manifest("plotdata");
  manifest.set_argv(argv);
  manifest.add_input(args.scores_file);

  const auto tables = load_tables(args.tables_dir);
  const auto scores = scores_from_csv_file(args.scores_file);
  const auto dist = frequency_distribution(tables, {});

  fs::create_directories(args.out_dir);
  const auto rank_file = fs::path(args.out_dir) / "rank-frequency.csv";
  const auto fd_file = fs::path(args.out_dir) / "freq-diversity.csv";
  write_file_atomic(rank_file, rank_frequency_csv(dist));
  write_file_atomic(fd_file, freq_diversity_csv(scores));

  manifest.add_output(rank_file);
  manifest.add_output(fd_file);
  manifest.write(fs::path(args.out_dir) / "run-manifest.json");

  out << "wrote " << rank_file.string() << " and " << fd_file.string() << "\n";
  return kExitOk;
}

struct ReportArgs {
  std::string scores_file;
  std::string classes_file;
  std::uint64_t top = 0;
  std::string out_dir;
};

int cmd_report(const ReportArgs& args, const std::vector<std::string>& argv, std::ostream& out) {
  RunManifest manifest("report");
  manifest.set_argv(argv);
  manifest.add_input(args.scores_file);
  manifest.add_input(args.classes_file);

  const auto scores = scores_from_csv_file(args.scores_file);
  const auto registry = load_classification(args.classes_file);
  const auto k = std::min<std::uint64_t>(args.top, scores.size());
  const auto report = category_report(registry, scores, k);

  fs::create_directories(args.out_dir);
  const auto json_file = fs::path(args.out_dir) / "category-report.json";
  const auto csv_file = fs::path(args.out_dir) / "category-report.csv";
  write_file_atomic(json_file, category_report_json(report));
  write_file_atomic(csv_file, category_report_csv(report));

  manifest.add_output(json_file);
  manifest.add_output(csv_file);
  manifest.set_counter("top_k", k);
  manifest.set_counter("unassigned", report.unassigned.size());
  manifest.write(fs::path(args.out_dir) / "run-manifest.json");

  out << "report over top " << k << ": " << report.rows.size() << " categories, "
      << report.unassigned.size() << " unassigned\n";
  return kExitOk;
}

struct ProjectArgs {
  std::string statement_file;
  std::string classes_file;
  std::string intersect_file;
  std::string out_file;
};

int cmd_project(const ProjectArgs& args, std::ostream& out) {
  const auto registry = load_classification(args.classes_file);
  const auto stmt = load_statement_json(args.statement_file);
  const auto values = project_statement(stmt, registry);

  std::string output = category_values_json(values);

  if (!args.intersect_file.empty()) {
    const auto other = load_statement_json(args.intersect_file);
    const auto other_values = project_statement(other, registry);
    const auto overlap = temporal_intersection(values.temporal, other_values.temporal);

    nlohmann::json j;
    j["statement"] = nlohmann::json::parse(output);
    j["other"] = nlohmann::json::parse(category_values_json(other_values));
    switch (overlap.status) {
      case TemporalIntersection::Status::NonEmpty:
        j["temporal_intersection"] = {{"status", "nonempty"},
                                      {"start", overlap.value.start.str()},
                                      {"end", overlap.value.end.str()}};
        break;
      case TemporalIntersection::Status::Empty:
        j["temporal_intersection"] = {{"status", "empty"}};
        break;
      case TemporalIntersection::Status::Unknown:
        j["temporal_intersection"] = {{"status", "unknown"}};
        break;
    }
    j["combined_causality"] =
        nlohmann::json::parse(causality_json(combine_causality(values.causality, other_values.causality)));
    output = j.dump(1) + "\n";
  }

  if (!args.out_file.empty()) {
    write_file_atomic(args.out_file, output);
    out << "wrote " << args.out_file << "\n";
  } else {
    out << output;
  }
  return kExitOk;
}

struct SynthArgs {
  std::string spec_file;
  std::string out_file;
  bool emit_truth = false;
};

int cmd_synth(const SynthArgs& args, const std::vector<std::string>& argv, std::ostream& out) {
  RunManifest manifest("synth");
  manifest.set_argv(argv);
  manifest.add_input(args.spec_file);

  const auto spec = SynthSpec::load(args.spec_file);
  const auto generated = generate_dump(spec);
  write_dump_file(generated.dump_bytes, args.out_file);
  manifest.add_output(args.out_file);

  if (args.emit_truth) {
    const auto truth_dir = fs::path(args.out_file).string() + ".truth";
    save_tables(generated.ground_truth, IngestStatsExtra{}, truth_dir);
  }
  manifest.set_counter("entities", generated.ground_truth.entities);
  manifest.set_counter("statements", generated.ground_truth.total_statements);
  manifest.write(fs::path(args.out_file).string() + ".manifest.json");

  out << "wrote " << args.out_file << " (" << generated.ground_truth.entities << " entities, "
      << generated.ground_truth.total_statements << " countable statements)\n";
  return kExitOk;
}

struct ValidateArgs {
  std::string scores_file;
  std::string classes_file;
  std::uint64_t top = 0;
  std::vector<std::string> ambiguous;
};

int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
  const auto scores = scores_from_csv_file(args.scores_file);
  const auto registry = load_classification(args.classes_file);

  std::set<PropertyId> ambiguous = {17, 123, 585};
  if (!args.ambiguous.empty()) {
    ambiguous.clear();
    for (const auto& raw : args.ambiguous) {
      auto id = parse_property_key(raw);
      if (!id) throw std::runtime_error("bad --ambiguous id '" + raw + "'");
      ambiguous.insert(*id);
    }
  }

  const auto violations = validate_registry(registry, scores, args.top, ambiguous);
  if (violations.empty()) {
    out << "registry ok: " << registry.size() << " assignments cover the top " << args.top << "\n";
    return kExitOk;
  }
  for (const auto& v : violations) err << "violation: " << v.message << "\n";
  err << violations.size() << " violation(s)\n";
  return kExitData;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wikidata qualifier analytics: frequency dictionaries, diversity scores, "
               "taxonomy reports and qualifier abstraction"};
  app.name("wdqual");
  app.require_subcommand(1);

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand("extract", "two-pass frequency-table extraction from an entity dump");
  extract->add_option("dump", extract_args.dump, "entity dump (plain, .gz or .bz2)")->required();
  extract->add_option("--config", extract_args.config, "admissibility config JSON");
  extract->add_option("--properties", extract_args.properties_file,
                      "property-only dump for the catalog pass (defaults to the main dump)");
  extract->add_option("--out", extract_args.out_dir, "output directory")->required();
  extract->add_option("--shards", extract_args.shards, "parallel shard count")->check(CLI::Range(1, 256));
  extract->add_option("--compression", extract_args.compression, "auto|none|gzip|bzip2");

  DiversityArgs diversity_args;
  auto* diversity = app.add_subcommand("diversity", "diversity indices, scores and ranking");
  diversity->add_option("--tables", diversity_args.tables_dir, "directory with extracted tables")->required();
  diversity->add_option("--out", diversity_args.out_file, "score CSV path");
  diversity->add_option("--top", diversity_args.top, "keep only the top K rows (also prints their coverage)");
  diversity->add_flag("--raw-score", diversity_args.raw_score, "score with raw instead of proportional diversity");

  PlotDataArgs plot_args;
  auto* plotdata = app.add_subcommand("plotdata", "rank-frequency and frequency-diversity series");
  plotdata->add_option("--tables", plot_args.tables_dir, "directory with extracted tables")->required();
  plotdata->add_option("--scores", plot_args.scores_file, "score CSV")->required();
  plotdata->add_option("--out", plot_args.out_dir, "output directory")->required();

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "per-category coverage and diversity report");
  report->add_option("--scores", report_args.scores_file, "score CSV")->required();
  report->add_option("--classes", report_args.classes_file, "classification CSV")->required();
  report->add_option("--top", report_args.top, "aggregate over the top K qualifiers")->required();
  report->add_option("--out", report_args.out_dir, "output directory")->required();

  ProjectArgs project_args;
  auto* project = app.add_subcommand("project", "project a statement's qualifiers onto categories");
  project->add_option("--statement", project_args.statement_file, "statement JSON")->required();
  project->add_option("--classes", project_args.classes_file, "classification CSV")->required();
  project->add_option("--intersect-with", project_args.intersect_file,
                      "second statement JSON; also emits the temporal intersection");
  project->add_option("--out", project_args.out_file, "write JSON here instead of stdout");

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "generate a synthetic dump from a plan");
  synth->add_option("--spec", synth_args.spec_file, "plan JSON")->required();
  synth->add_option("--out", synth_args.out_file, "dump path (.gz compresses)")->required();
  synth->add_flag("--truth", synth_args.emit_truth, "also write the exact tables next to the dump");

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "gate the classification file against a score table");
  validate->add_option("--scores", validate_args.scores_file, "score CSV")->required();
  validate->add_option("--classes", validate_args.classes_file, "classification CSV")->required();
  validate->add_option("--top", validate_args.top, "require assignments for the top K")->required();
  validate->add_option("--ambiguous", validate_args.ambiguous, "qualifiers requiring a note")
      ->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::vector<std::string> argv_record;
  argv_record.push_back("wdqual");
  argv_record.insert(argv_record.end(), args.begin(), args.end());

  try {
    if (extract->parsed()) return cmd_extract(extract_args, argv_record, out);
    if (diversity->parsed()) return cmd_diversity(diversity_args, argv_record, out);
    if (plotdata->parsed()) return cmd_plotdata(plot_args, argv_record, out);
    if (report->parsed()) return cmd_report(report_args, argv_record, out);
    if (project->parsed()) return cmd_project(project_args, out);
    if (synth->parsed()) return cmd_synth(synth_args, argv_record, out);
    if (validate->parsed()) return cmd_validate(validate_args, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace wdqual::cli

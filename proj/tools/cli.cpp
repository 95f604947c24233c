/*
 * Copyright 2026 The louc Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "louc/analysis.hpp"
#include "louc/calibration.hpp"
#include "louc/errors.hpp"
#include "louc/ingest.hpp"
#include "louc/louc.hpp"
#include "louc/synth.hpp"
#include "louc/timing.hpp"
#include "table_io.hpp"

namespace louc::tools {
namespace {

namespace fs = std::filesystem;

enum class BasisChoice { kAccuracy, kPrecision, kBoth };

struct RunConfig {
  std::string annotations;
  std::string reference;
  std::string out_dir;
  BasisChoice basis = BasisChoice::kBoth;
  double epsilon = kDefaultEpsilon;
  int bins = 3;
  std::optional<double> time_threshold;
  TableFormat format = TableFormat::kCsv;
  ConfidenceScale scale = ConfidenceScale::kPercent;
  bool lenient = false;
  CohortSpec cohort;
};

bool WantsAccuracy(BasisChoice b) { return b != BasisChoice::kPrecision; }
bool WantsPrecision(BasisChoice b) { return b != BasisChoice::kAccuracy; }

std::shared_ptr<spdlog::logger> MakeLogger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("louc", sink);
  logger->set_pattern("[%l] %v");
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("LOUC_LOG"); env != nullptr && *env) {
    level = spdlog::level::from_str(env);
  }
  logger->set_level(level);
  return logger;
}

Dataset LoadInputs(const RunConfig& config, spdlog::logger& log,
                   IngestReport* report = nullptr) {
  std::vector<std::string> warnings;
  const ReferenceMatch reference = LoadReference(config.reference, &warnings);
  for (const auto& w : warnings) log.warn("{}: {}", config.reference, w);
  log.info("reference: {} matched pairs", reference.size());

  IngestConfig ingest;
  ingest.confidence_scale = config.scale;
  ingest.strict = !config.lenient;
  IngestResult result = LoadAnnotations(config.annotations, ingest, reference);
  for (const auto& r : result.report.rejections) {
    log.warn("{}: row {} rejected: {}", config.annotations, r.row, r.reason);
  }
  log.info("annotations: {} rows read, {} rejected, {} annotators",
           result.report.rows_read, result.report.rows_rejected,
           result.dataset.annotators().size());
  if (report != nullptr) *report = std::move(result.report);
  return std::move(result.dataset);
}

// Writes to <out_dir>/<name> when an output directory is set, else to `out`.
void Emit(const FigureTable& table, const RunConfig& config, std::ostream& out,
          spdlog::logger& log) {
  if (config.out_dir.empty()) {
    WriteTable(table, config.format, out);
    return;
  }
  fs::create_directories(config.out_dir);
  const auto path = WriteTableFile(table, config.format, config.out_dir);
  log.info("wrote {}", path.string());
}

Cell ClassCell(const CalibrationValue& cal, double epsilon) {
  if (!cal.defined()) return Cell{};
  return Cell(std::string(ToString(Classify(cal, epsilon))));
}

Cell Optional(const std::optional<double>& v) {
  return v ? Cell(*v) : Cell{};
}

FigureTable CalibrationTable(const Dataset& dataset, const RunConfig& config) {
  std::vector<std::string> columns = {"annotator_id", "decisions"};
  if (WantsAccuracy(config.basis)) {
    columns.insert(columns.end(), {"mean_normalized_confidence", "accuracy",
                                   "cal_accuracy", "class_accuracy"});
  }
  if (WantsPrecision(config.basis)) {
    columns.insert(columns.end(),
                   {"mean_normalized_confidence_positive", "precision",
                    "cal_precision", "class_precision"});
  }
  FigureTable table("calibration", columns);
  for (const auto& annotator : dataset.annotators()) {
    const auto decisions = CollectDecisions(dataset, annotator);
    std::vector<Cell> row = {Cell(annotator),
                             Cell(static_cast<std::int64_t>(decisions.size()))};
    if (WantsAccuracy(config.basis)) {
      const auto cal = CalAccuracyOf(decisions);
      row.insert(row.end(), {Optional(MeanNormalizedConfidenceOf(decisions)),
                             Cell(AccuracyOf(decisions)), Optional(cal.value),
                             ClassCell(cal, config.epsilon)});
    }
    if (WantsPrecision(config.basis)) {
      const auto cal = CalPrecisionOf(decisions);
      row.insert(row.end(),
                 {Optional(MeanNormalizedConfidenceOf(
                      decisions, OutcomeSet::PredictedMatches())),
                  Optional(PrecisionOf(decisions)), Optional(cal.value),
                  ClassCell(cal, config.epsilon)});
    }
    table.AddRow(std::move(row));
  }
  return table;
}

FigureTable LoucTable(const Dataset& dataset, const RunConfig& config) {
  std::vector<std::string> columns = {"annotator_id", "question_id", "outcome",
                                      "normalized_time"};
  if (WantsAccuracy(config.basis)) {
    columns.insert(columns.end(), {"louc_accuracy", "degenerate_accuracy"});
  }
  if (WantsPrecision(config.basis)) {
    columns.insert(columns.end(), {"louc_precision", "structural_zero_precision",
                                   "degenerate_precision"});
  }
  FigureTable table("louc", columns);
  const TimeNormalizer times(dataset);
  for (const auto& annotator : dataset.annotators()) {
    const auto decisions = CollectDecisions(dataset, annotator);
    std::vector<LoucEntry> acc;
    std::vector<LoucEntry> prec;
    if (WantsAccuracy(config.basis)) acc = LoucAllOf(decisions, Basis::kAccuracy);
    if (WantsPrecision(config.basis)) prec = LoucAllOf(decisions, Basis::kPrecision);
    for (std::size_t i = 0; i < decisions.size(); ++i) {
      const Decision& d = decisions[i];
      std::vector<Cell> row = {
          Cell(annotator), Cell(d.question->id),
          Cell(std::string(ToString(d.outcome))),
          Cell(times.Normalize(annotator, d.question->id).value_seconds)};
      if (!acc.empty()) {
        const bool degenerate = acc[i].status == LoucStatus::kDegenerate;
        row.push_back(degenerate ? Cell{} : Cell(acc[i].louc.value));
        row.push_back(Cell(degenerate));
      }
      if (!prec.empty()) {
        const bool degenerate = prec[i].status == LoucStatus::kDegenerate;
        row.push_back(degenerate ? Cell{} : Cell(prec[i].louc.value));
        row.push_back(Cell(!degenerate && prec[i].louc.structurally_zero));
        row.push_back(Cell(degenerate));
      }
      table.AddRow(std::move(row));
    }
  }
  return table;
}

int RunValidate(const RunConfig& config, std::ostream& out,
                spdlog::logger& log) {
  RunConfig lenient = config;
  lenient.lenient = true;
  IngestReport report;
  const Dataset dataset = LoadInputs(lenient, log, &report);
  const auto violations = Validate(dataset);
  for (const auto& r : report.rejections) {
    out << "row " << r.row << ": " << r.reason << '\n';
  }
  for (const auto& v : violations) out << ToString(v) << '\n';
  const std::size_t total = report.rows_rejected + violations.size();
  out << total << " violations\n";
  return total == 0 ? kExitOk : kExitDataError;
}

int RunSynth(const RunConfig& config, std::ostream& out,
             spdlog::logger& log) {
  const Dataset dataset = GenerateCohort(config.cohort);
  const fs::path dir = config.out_dir;
  fs::create_directories(dir);
  {
    std::ofstream annotations(dir / "annotations.csv",
                              std::ios::binary | std::ios::trunc);
    WriteAnnotations(dataset, annotations, config.scale);
    std::ofstream reference(dir / "reference.csv",
                            std::ios::binary | std::ios::trunc);
    WriteReference(dataset.reference(), reference);
    if (!annotations || !reference) {
      throw Error("failed writing cohort files under " + dir.string());
    }
  }
  log.info("generated {} annotators x {} questions", config.cohort.annotator_count,
           config.cohort.question_count);
  out << "wrote " << (dir / "annotations.csv").string() << " and "
      << (dir / "reference.csv").string() << '\n';
  return kExitOk;
}

void AddInputOptions(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--annotations", config.annotations, "Annotation CSV file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--reference", config.reference, "Reference match CSV file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--confidence-scale", config.scale,
                  "Scale of the confidence column")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ConfidenceScale>{
              {"percent", ConfidenceScale::kPercent},
              {"unit", ConfidenceScale::kUnit}},
          CLI::ignore_case));
  cmd->add_flag("--lenient", config.lenient,
                "Reject bad rows instead of aborting");
}

void AddOutputOptions(CLI::App* cmd, RunConfig& config, bool require_dir) {
  auto* out = cmd->add_option("--out", config.out_dir, "Output directory");
  if (require_dir) out->required();
  cmd->add_option("--format", config.format, "Table format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, TableFormat>{{"csv", TableFormat::kCsv},
                                             {"json", TableFormat::kJson}},
          CLI::ignore_case));
}

void AddAnalysisOptions(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--basis", config.basis, "Calibration basis")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, BasisChoice>{{"acc", BasisChoice::kAccuracy},
                                             {"p", BasisChoice::kPrecision},
                                             {"both", BasisChoice::kBoth}},
          CLI::ignore_case));
  cmd->add_option("--epsilon", config.epsilon,
                  "Half-width of the calibrated band")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--bins", config.bins, "Response-time quantile bins")
      ->check(CLI::Range(2, 1000));
  cmd->add_option("--time-threshold", config.time_threshold,
                  "Fast/slow split in seconds (default: mean of annotator means)");
}

void AddCohortOptions(CLI::App* cmd, CohortSpec& spec) {
  cmd->add_option("--annotators", spec.annotator_count)->check(CLI::PositiveNumber);
  cmd->add_option("--questions", spec.question_count)->check(CLI::PositiveNumber);
  cmd->add_option("--match-fraction", spec.true_match_fraction)
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--accuracy-mean", spec.accuracy_mean)->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--accuracy-spread", spec.accuracy_spread)
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--bias", spec.confidence_bias)->check(CLI::Range(-1.0, 1.0));
  cmd->add_option("--confidence-noise", spec.confidence_noise)
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--base-seconds", spec.time.base_seconds)
      ->check(CLI::PositiveNumber);
  cmd->add_option("--speed-offset", spec.time.speed_offset_seconds)
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--time-noise", spec.time.noise_seconds)
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", spec.seed);
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  RunConfig config;
  CLI::App app{"Calibration and leave-one-out calibration of human matchers"};
  app.require_subcommand(1);
  // Cohort spec files hold `key = value` lines under a [synth] section. The
  // option lives on the root app because CLI11 reads config files there;
  // synth falls through so `louc synth --config FILE` works.
  app.set_config("--config", "", "Cohort spec file for synth ([synth] section)");
  app.allow_config_extras(false);

  auto* validate = app.add_subcommand("validate", "Check an annotation file");
  AddInputOptions(validate, config);

  auto* summarize = app.add_subcommand("summarize", "Cohort summary statistics");
  AddInputOptions(summarize, config);
  AddOutputOptions(summarize, config, false);

  auto* calibration =
      app.add_subcommand("calibration", "Per-annotator calibration table");
  AddInputOptions(calibration, config);
  AddOutputOptions(calibration, config, false);
  AddAnalysisOptions(calibration, config);

  auto* louc = app.add_subcommand("louc", "Per-decision LOUC table");
  AddInputOptions(louc, config);
  AddOutputOptions(louc, config, false);
  AddAnalysisOptions(louc, config);

  auto* figures = app.add_subcommand("figures", "Export every figure table");
  AddInputOptions(figures, config);
  AddOutputOptions(figures, config, true);
  AddAnalysisOptions(figures, config);

  auto* synth = app.add_subcommand("synth", "Generate a synthetic cohort");
  synth->fallthrough();
  synth->add_option("--out", config.out_dir, "Output directory")->required();
  synth->add_option("--confidence-scale", config.scale,
                    "Scale of the written confidence column")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ConfidenceScale>{
              {"percent", ConfidenceScale::kPercent},
              {"unit", ConfidenceScale::kUnit}},
          CLI::ignore_case));
  AddCohortOptions(synth, config.cohort);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  auto log = MakeLogger(err);
  try {
    if (validate->parsed()) return RunValidate(config, out, *log);
    if (synth->parsed()) return RunSynth(config, out, *log);

    const Dataset dataset = LoadInputs(config, *log);
    if (summarize->parsed()) {
      Emit(SummaryTable(Summarize(dataset)), config, out, *log);
    } else if (calibration->parsed()) {
      Emit(CalibrationTable(dataset, config), config, out, *log);
    } else if (louc->parsed()) {
      Emit(LoucTable(dataset, config), config, out, *log);
    } else if (figures->parsed()) {
      FigureOptions options;
      options.accuracy = WantsAccuracy(config.basis);
      options.precision = WantsPrecision(config.basis);
      options.bin_count = config.bins;
      options.time_threshold = config.time_threshold;
      const auto tables = BuildFigures(dataset, options);
      for (const auto& table : tables) Emit(table, config, out, *log);
      out << "wrote " << tables.size() << " figure tables to " << config.out_dir
          << '\n';
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
}

}  // namespace louc::tools

#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "cogclust/error.hpp"
#include "cogclust/pipeline.hpp"
#include "cogclust/wordlist.hpp"

#ifndef COGCLUST_VERSION
#define COGCLUST_VERSION "unknown"
#endif

namespace cogclust::cli {

namespace {

class OutputFile {
 public:
  // Empty path means the fallback stream.
  OutputFile(const std::string& path, std::ostream& fallback) : path_(path), stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw IoError("cannot open '" + path + "' for writing");
    stream_ = &file_;
  }

  std::ostream& stream() { return *stream_; }

  void close() {
    stream_->flush();
    if (!*stream_) throw IoError(path_.empty() ? "write failure on standard output" : "write failure on '" + path_ + "'");
    if (file_.is_open()) file_.close();
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_;
};

WordList load_input(const RunConfig& config) {
  ParseConfig pc;
  pc.modifiers = config.strict_modifiers ? ModifierPolicy::kStrict : ModifierPolicy::kStrip;
  WordList wl = parse_wordlist_file(config.input, pc);
  if (!config.gold.empty()) wl = attach_gold(wl, parse_wordlist_file(config.gold, pc));
  return wl;
}

Scorer make_scorer(const RunConfig& config) {
  if (config.scorer == ScorerKind::kVanilla) return Scorer::vanilla(config.vanilla, config.gaps);
  auto matrix = std::make_shared<const PmiMatrix>(load_pmi_file(config.pmi_matrix));
  if (!matrix->covers(Alphabet::asjp()))
    throw ValidationError("PMI matrix '" + config.pmi_matrix + "' does not cover the full ASJP alphabet");
  return Scorer::pmi(std::move(matrix), config.gaps);
}

ClusterMethod make_method(const RunConfig& config) {
  if (config.threshold) return ThresholdConfig{*config.threshold};
  return config.crp;
}

std::string file_stem_for(const std::string& meaning) {
  std::string out;
  for (char c : meaning) {
    const auto u = static_cast<unsigned char>(c);
    out.push_back(std::isalnum(u) || c == '-' || c == '_' || c == '.' ? c : '_');
  }
  return out.empty() ? "_" : out;
}

int run_align(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const WordList wl = load_input(config);
  const Scorer scorer = make_scorer(config);
  const SimilarityOptions options{config.normalize};

  if (!config.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) throw IoError("cannot create directory '" + config.out_dir + "': " + ec.message());
    for (const auto& meaning : wl.meanings()) {
      const auto forms = forms_for_meaning(wl, meaning);
      OutputFile f((std::filesystem::path(config.out_dir) / (file_stem_for(meaning) + ".tsv")).string(), out);
      write_similarity_tsv(similarity_matrix(forms, scorer, options), f.stream());
      f.close();
    }
    err << "wrote " << wl.meanings().size() << " similarity matrices to " << config.out_dir << '\n';
    return kExitOk;
  }

  OutputFile f(config.out, out);
  for (const auto& meaning : wl.meanings()) {
    const auto forms = forms_for_meaning(wl, meaning);
    f.stream() << "# meaning\t" << meaning << '\n';
    write_similarity_tsv(similarity_matrix(forms, scorer, options), f.stream());
  }
  f.close();
  return kExitOk;
}

int run_cluster(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const WordList wl = load_input(config);
  if (wl.duplicates_collapsed() > 0) err << "collapsed " << wl.duplicates_collapsed() << " duplicate row(s)\n";
  const auto clusterings =
      cluster_wordlist(wl, make_scorer(config), make_method(config), SimilarityOptions{config.normalize}, config.jobs);
  OutputFile f(config.out, out);
  write_partition_tsv(clusterings, f.stream());
  f.close();
  return kExitOk;
}

int run_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const WordList wl = load_input(config);
  if (wl.duplicates_collapsed() > 0) err << "collapsed " << wl.duplicates_collapsed() << " duplicate row(s)\n";
  const bool any_gold =
      std::any_of(wl.meanings().begin(), wl.meanings().end(), [&](const auto& m) { return wl.has_gold(m); });
  if (!any_gold) throw ValidationError("no meaning in '" + config.input + "' carries gold cognate classes");

  MeaningPartitions predictions;
  if (!config.predictions.empty()) {
    std::ifstream in(config.predictions, std::ios::binary);
    if (!in) throw IoError("cannot open predictions '" + config.predictions + "'");
    try {
      predictions = read_partition_tsv(in, wl);
    } catch (const ParseError& e) {
      throw ParseError(config.predictions + ": " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(config.predictions + ": " + e.what());
    }
  } else {
    const auto clusterings =
        cluster_wordlist(wl, make_scorer(config), make_method(config), SimilarityOptions{config.normalize}, config.jobs);
    if (!config.out.empty()) {
      OutputFile f(config.out, out);
      write_partition_tsv(clusterings, f.stream());
      f.close();
    }
    for (const auto& c : clusterings) predictions.emplace_back(c.meaning, c.partition);
  }

  const EvalReport report = evaluate_clusterings(wl, predictions);
  OutputFile f(config.report, out);
  const ReportStyle style{config.decimals};
  if (config.report_format == ReportFormat::kKeyValue) write_report_kv(report, f.stream(), style);
  else write_report_text(report, f.stream(), style);
  f.close();
  return kExitOk;
}

int run_pmi_estimate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream in(config.input, std::ios::binary);
  if (!in) throw IoError("cannot open aligned pairs '" + config.input + "'");
  std::vector<AlignedPair> pairs;
  try {
    pairs = parse_aligned_pairs(in);
  } catch (const ParseError& e) {
    throw ParseError(config.input + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(config.input + ": " + e.what());
  }
  const auto estimate = estimate_pmi(pairs, Alphabet::asjp(), config.smoothing);
  if (estimate.unobserved_pairs > 0)
    err << "warning: " << estimate.unobserved_pairs << " segment pair(s) never co-occur; scored -inf\n";
  OutputFile f(config.out, out);
  save_pmi(estimate.matrix, f.stream());
  f.close();
  return kExitOk;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.input.empty()) throw UsageError("--input is required");
  const bool scores = config.command != Command::kPmiEstimate &&
                      !(config.command == Command::kEvaluate && !config.predictions.empty());
  if (scores) {
    if (config.scorer == ScorerKind::kPmi && config.pmi_matrix.empty())
      throw UsageError("--scorer pmi requires --pmi-matrix");
    if (config.scorer == ScorerKind::kVanilla && !config.pmi_matrix.empty())
      throw UsageError("--pmi-matrix is only valid with --scorer pmi");
  }
  if (config.decimals < 0 || config.decimals > 17) throw UsageError("--decimals must be in 0..17");
  if (config.jobs == 0) throw UsageError("--jobs must be >= 1");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::kAlign: return run_align(config, out, err);
      case Command::kCluster: return run_cluster(config, out, err);
      case Command::kEvaluate: return run_evaluate(config, out, err);
      case Command::kPmiEstimate: return run_pmi_estimate(config, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cognate clustering of multilingual word lists"};
  app.set_version_flag("--version", std::string("cogclust ") + COGCLUST_VERSION);
  app.require_subcommand(1);

  RunConfig config;
  config.jobs = std::max(1u, std::thread::hardware_concurrency());

  const std::map<std::string, ScorerKind> scorers{{"vanilla", ScorerKind::kVanilla}, {"pmi", ScorerKind::kPmi}};
  const std::map<std::string, Linkage> linkages{{"average", Linkage::kAverage}, {"single", Linkage::kSingle}};
  const std::map<std::string, ReportFormat> formats{{"text", ReportFormat::kText}, {"kv", ReportFormat::kKeyValue}};

  const auto add_input = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--input", config.input, help)->required();
  };
  const auto add_scoring = [&](CLI::App* sub) {
    sub->add_option("--scorer", config.scorer, "Substitution scores")
        ->transform(CLI::CheckedTransformer(scorers, CLI::ignore_case))
        ->default_str("vanilla");
    sub->add_option("--pmi-matrix", config.pmi_matrix, "PMI matrix file (with --scorer pmi)");
    sub->add_option("--gap-open", config.gaps.open, "Score of the first gap symbol in a run")->capture_default_str();
    sub->add_option("--gap-extend", config.gaps.extend, "Score of each further gap symbol")->capture_default_str();
    sub->add_option("--match", config.vanilla.match, "Vanilla match score")->capture_default_str();
    sub->add_option("--mismatch", config.vanilla.mismatch, "Vanilla mismatch score")->capture_default_str();
    sub->add_flag("--normalize", config.normalize, "Divide scores by the mean self-score before the ReLU clamp");
    sub->add_flag("--strict", config.strict_modifiers, "Reject ASJP modifier characters instead of stripping them");
    sub->add_option("--gold", config.gold, "Separate word list supplying gold cognate classes");
  };
  const auto add_clustering = [&](CLI::App* sub) {
    sub->add_option("--alpha", config.crp.alpha, "New-cluster threshold")->capture_default_str();
    sub->add_option("--max-scans", config.crp.max_scans, "Maximum number of scans")->capture_default_str();
    sub->add_option("--linkage", config.crp.linkage, "Cluster similarity criterion")
        ->transform(CLI::CheckedTransformer(linkages, CLI::ignore_case))
        ->default_str("average");
    sub->add_option("--shuffle-seed", config.crp.shuffle_seed, "Visit words in a seeded random order");
    sub->add_option("--threshold", config.threshold, "Use average-linkage clustering with this stopping threshold");
    sub->add_option("--jobs", config.jobs, "Worker threads (default: available parallelism)");
  };

  auto* align = app.add_subcommand("align", "Write per-meaning similarity matrices");
  add_input(align, "Word list TSV");
  add_scoring(align);
  align->add_option("--out", config.out, "Output file (default: standard output)");
  align->add_option("--out-dir", config.out_dir, "Write one TSV per meaning into this directory");
  align->callback([&] { config.command = Command::kAlign; });

  auto* cluster = app.add_subcommand("cluster", "Cluster each meaning into cognate sets");
  add_input(cluster, "Word list TSV");
  add_scoring(cluster);
  add_clustering(cluster);
  cluster->add_option("--out", config.out, "Partition TSV (default: standard output)");
  cluster->callback([&] { config.command = Command::kCluster; });

  auto* evaluate = app.add_subcommand("evaluate", "Cluster (or read a partition) and score against gold classes");
  add_input(evaluate, "Word list TSV with gold classes");
  add_scoring(evaluate);
  add_clustering(evaluate);
  evaluate->add_option("--predictions", config.predictions, "Existing partition TSV to score instead of clustering");
  evaluate->add_option("--out", config.out, "Also write the partition TSV here");
  evaluate->add_option("--report", config.report, "Report file (default: standard output)");
  evaluate->add_option("--report-format", config.report_format, "text or kv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");
  evaluate->add_option("--decimals", config.decimals, "Decimal places in the report")->capture_default_str();
  evaluate->callback([&] { config.command = Command::kEvaluate; });

  auto* pmi = app.add_subcommand("pmi-estimate", "Estimate a PMI matrix from aligned segment pairs");
  add_input(pmi, "Aligned pairs TSV (aligned_a<TAB>aligned_b, '-' for gaps)");
  pmi->add_option("--smoothing", config.smoothing, "Pseudo-count per segment pair")->capture_default_str();
  pmi->add_option("--out", config.out, "Matrix file (default: standard output)");
  pmi->callback([&] { config.command = Command::kPmiEstimate; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace cogclust::cli

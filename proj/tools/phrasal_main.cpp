// phrasal: command-line front end for the relatedness and compositionality
// library. Subcommands cover network ingestion, relatedness queries,
// collocation counting, distributional similarity, rule-based
// classification, rule learning, and in-context evaluation.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "phrasal/collocation.hpp"
#include "phrasal/context.hpp"
#include "phrasal/errors.hpp"
#include "phrasal/features.hpp"
#include "phrasal/metrics.hpp"
#include "phrasal/network.hpp"
#include "phrasal/path_search.hpp"
#include "phrasal/pmi_vector.hpp"
#include "phrasal/relations.hpp"
#include "phrasal/rule_learner.hpp"
#include "phrasal/rules.hpp"
#include "phrasal/stopwords.hpp"

namespace {

using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitVocabMiss = 3;
constexpr int kExitMissingResource = 4;
constexpr int kExitDegenerate = 5;

// A required input the chosen mode cannot run without (distinct from a file
// that exists but fails to parse).
struct MissingResourceError : phrasal::Error {
  using phrasal::Error::Error;
};

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// JSON carries the same rounded value the TSV prints.
double json4(double v) { return std::stod(fmt4(v)); }

std::string fmt10(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double json10(double v) { return std::stod(fmt10(v)); }

struct GlobalOpts {
  std::string params_path;
  std::string weights_path;
  int window = 3;
  std::size_t topk = 1000;
  std::string format = "tsv";

  bool as_json() const { return format == "json"; }
};

struct ScoringConfig {
  phrasal::RelationTable table;
  phrasal::RelatednessParams params;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int parse_positive_int(const std::string& text, long lineno) {
  std::string t = trim(text);
  if (t.empty()) throw phrasal::ParseError("empty value", lineno);
  for (char c : t)
    if (c < '0' || c > '9')
      throw phrasal::ParseError("bad number '" + t + "'", lineno);
  long v = std::stol(t);
  if (v <= 0) throw phrasal::ParseError("value must be positive", lineno);
  return static_cast<int>(v);
}

// --weights remaps relation names to categories; --params overrides category
// weights (`sense=5`) and the derived path costs (`max_path_cost=30`).
// Derivation from the table runs first, so explicit cost keys win.
ScoringConfig make_config(const GlobalOpts& g) {
  phrasal::RelationTable table;
  if (!g.weights_path.empty()) table.load_overrides(g.weights_path);

  std::optional<int> max_cost;
  std::optional<int> min_cost;
  if (!g.params_path.empty()) {
    std::ifstream in(g.params_path);
    if (!in) throw phrasal::IoError(g.params_path);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (trim(line).empty() || line[0] == '#') continue;
      auto eq = line.find('=');
      if (eq == std::string::npos)
        throw phrasal::ParseError("expected key=value", lineno);
      std::string key = phrasal::normalize_label(trim(line.substr(0, eq)));
      int value = parse_positive_int(line.substr(eq + 1), lineno);
      if (key == "max_path_cost")
        max_cost = value;
      else if (key == "min_path_cost")
        min_cost = value;
      else
        table.set_weight(phrasal::parse_category(key), value);
    }
  }

  ScoringConfig cfg{std::move(table), {}};
  cfg.params = phrasal::RelatednessParams::from_table(cfg.table);
  if (max_cost) cfg.params.max_path_cost = *max_cost;
  if (min_cost) cfg.params.min_path_cost = *min_cost;
  return cfg;
}

// Splits positional phrase arguments on whitespace so both
// `relate car "formal meeting"` and `relate car formal meeting` work.
std::vector<std::string> phrase_tokens(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& arg : args) {
    std::istringstream in(arg);
    std::string tok;
    while (in >> tok) out.push_back(phrasal::normalize_label(tok));
  }
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

void emit_report(const GlobalOpts& g,
                 const std::vector<std::pair<std::string, std::size_t>>& counts,
                 const std::vector<std::string>& warnings) {
  if (g.as_json()) {
    json j;
    for (const auto& [name, value] : counts) j[name] = value;
    j["warnings"] = warnings;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [name, value] : counts)
      std::cout << name << '\t' << value << "\n";
    for (const auto& w : warnings) std::cout << "warning\t" << w << "\n";
  }
}

int run_build_net(const GlobalOpts& g, const std::string& edge_path,
                  const std::string& out_path) {
  ScoringConfig cfg = make_config(g);
  phrasal::SemanticNetwork net =
      phrasal::load_network(edge_path, std::move(cfg.table));
  net.validate();
  std::vector<std::string> warnings;
  if (net.node_count() == 0) warnings.push_back("empty network");
  if (!out_path.empty()) net.save(out_path);
  emit_report(g,
              {{"node_count", net.node_count()}, {"edge_count", net.edge_count()}},
              warnings);
  return 0;
}

int run_relate(const GlobalOpts& g, const std::string& net_path,
               const std::string& word_arg,
               const std::vector<std::string>& phrase_args, bool explain) {
  ScoringConfig cfg = make_config(g);
  phrasal::SemanticNetwork net = phrasal::load_network(net_path, cfg.table);
  std::string word = phrasal::normalize_label(word_arg);
  std::vector<std::string> phrase = phrase_tokens(phrase_args);

  phrasal::RelatednessScore score =
      phrasal::word_phrase_relatedness(net, word, phrase, cfg.params);

  if (!g.as_json()) {
    std::cout << fmt4(score.value) << "\n";
    if (explain) {
      for (const auto& pw : phrase) {
        phrasal::PathResult path =
            phrasal::shortest_path_cost(net, word, pw, cfg.params);
        std::cout << "path\t" << pw << "\tcost\t" << path.cost << "\tcapped\t"
                  << (path.capped ? 1 : 0) << "\n";
        for (const auto& hop : phrasal::format_path(net, path))
          std::cout << hop << "\n";
      }
    }
    return 0;
  }

  json j;
  j["value"] = json4(score.value);
  if (explain) {
    json paths = json::array();
    for (const auto& pw : phrase) {
      phrasal::PathResult path =
          phrasal::shortest_path_cost(net, word, pw, cfg.params);
      json p;
      p["target"] = pw;
      p["cost"] = path.cost;
      p["capped"] = path.capped;
      p["hops"] = phrasal::format_path(net, path);
      paths.push_back(std::move(p));
    }
    j["paths"] = std::move(paths);
  }
  std::cout << j.dump() << "\n";
  return 0;
}

int run_dist_build(const GlobalOpts& g, const std::string& corpus_path,
                   const std::string& out_path) {
  phrasal::Corpus corpus = phrasal::load_corpus(corpus_path);
  phrasal::CollocationCounts counts =
      phrasal::count_collocations(corpus, g.window);
  phrasal::save_counts(counts, out_path);
  std::size_t tokens = phrasal::corpus_token_count(corpus);
  std::vector<std::string> warnings;
  if (tokens == 0) warnings.push_back("empty corpus");
  emit_report(g, {{"token_count", tokens}}, warnings);
  return 0;
}

int run_dist_sim(const GlobalOpts& g, const std::string& counts_path,
                 const std::string& word_arg,
                 const std::vector<std::string>& phrase_args, bool dump) {
  phrasal::CollocationCounts counts = phrasal::load_counts(counts_path);
  std::string word = phrasal::normalize_label(word_arg);
  std::vector<std::string> phrase = phrase_tokens(phrase_args);
  double value = phrasal::word_phrase_similarity(counts, word, phrase, g.topk);

  phrasal::PmiVector word_vec;
  phrasal::PmiVector phrase_vec;
  if (dump) {
    word_vec = phrasal::pmi_vector(counts, word, g.topk);
    std::vector<phrasal::PmiVector> parts;
    bool any_empty = false;
    for (const auto& pw : phrase) {
      parts.push_back(phrasal::pmi_vector(counts, pw, g.topk));
      if (parts.back().empty()) any_empty = true;
    }
    if (!any_empty) phrase_vec = phrasal::compose(parts);
  }

  if (!g.as_json()) {
    std::cout << fmt4(value) << "\n";
    if (dump) {
      phrasal::dump_vector(word_vec, std::cout);
      phrasal::dump_vector(phrase_vec, std::cout);
    }
    return 0;
  }

  json j;
  j["value"] = json4(value);
  if (dump) {
    json wv = json::object();
    for (const auto& [ctx, pmi] : word_vec.entries) wv[ctx] = json10(pmi);
    json pv = json::object();
    for (const auto& [ctx, pmi] : phrase_vec.entries) pv[ctx] = json10(pmi);
    j["word_vector"] = std::move(wv);
    j["phrase_vector"] = std::move(pv);
  }
  std::cout << j.dump() << "\n";
  return 0;
}

phrasal::RuleSet rules_for_mode(const std::string& mode,
                                const std::string& rules_path) {
  if (mode == "run1") return phrasal::run1_rules();
  if (mode == "run2") return phrasal::run2_rules();
  if (mode == "run3") return phrasal::run3_rules();
  if (rules_path.empty())
    throw MissingResourceError("mode 'learned' requires --rules");
  return phrasal::load_rules(rules_path);
}

void emit_metrics_tsv(const phrasal::Metrics& m, const char* prefix) {
  std::cout << prefix << "tp\t" << m.tp << "\n"
            << prefix << "fp\t" << m.fp << "\n"
            << prefix << "tn\t" << m.tn << "\n"
            << prefix << "fn\t" << m.fn << "\n"
            << prefix << "precision\t" << fmt4(m.precision()) << "\n"
            << prefix << "recall\t" << fmt4(m.recall()) << "\n"
            << prefix << "f_measure\t" << fmt4(m.f_measure()) << "\n";
}

json metrics_json(const phrasal::Metrics& m) {
  json j;
  j["tp"] = m.tp;
  j["fp"] = m.fp;
  j["tn"] = m.tn;
  j["fn"] = m.fn;
  j["precision"] = json4(m.precision());
  j["recall"] = json4(m.recall());
  j["f_measure"] = json4(m.f_measure());
  return j;
}

int run_classify(const GlobalOpts& g, const std::string& data_path,
                 const std::string& mode, const std::string& net_path,
                 const std::string& counts_path, const std::string& rules_path) {
  std::vector<phrasal::WordPhraseInstance> dataset =
      phrasal::load_word_phrase_dataset(data_path);
  ScoringConfig cfg = make_config(g);
  phrasal::SemanticNetwork net = phrasal::load_network(net_path, cfg.table);
  phrasal::CollocationCounts counts = phrasal::load_counts(counts_path);
  phrasal::RuleSet rules = rules_for_mode(mode, rules_path);

  phrasal::Metrics m;
  bool any_gold = false;
  json rows = json::array();

  for (const auto& inst : dataset) {
    phrasal::FeatureVector fv = phrasal::assemble_features(
        net, counts, inst.word, inst.phrase, cfg.params, g.topk);
    const std::string& label = phrasal::apply_rules(rules, fv.to_map());

    if (!inst.label.empty()) {
      any_gold = true;
      bool gold_pos = inst.label == phrasal::kPositive;
      bool pred_pos = label == phrasal::kPositive;
      if (gold_pos && pred_pos) ++m.tp;
      else if (!gold_pos && pred_pos) ++m.fp;
      else if (!gold_pos && !pred_pos) ++m.tn;
      else ++m.fn;
    }

    if (g.as_json()) {
      json row;
      row["word"] = inst.word;
      row["phrase"] = join_tokens(inst.phrase);
      row["sn"] = fv.sn ? json(json4(*fv.sn)) : json(nullptr);
      row["ds"] = json4(fv.ds);
      row["label"] = label;
      rows.push_back(std::move(row));
    } else {
      std::cout << inst.word << '\t' << join_tokens(inst.phrase) << '\t'
                << (fv.sn ? fmt4(*fv.sn) : "") << '\t' << fmt4(fv.ds) << '\t'
                << label << "\n";
    }
  }

  if (g.as_json()) {
    json j;
    j["instances"] = std::move(rows);
    if (any_gold) j["metrics"] = metrics_json(m);
    std::cout << j.dump() << "\n";
  } else if (any_gold) {
    emit_metrics_tsv(m, "#");
  }
  return 0;
}

int run_train(const GlobalOpts& g, const std::string& data_path,
              const std::string& out_path, std::size_t max_rules,
              const std::string& target, const std::string& fallback) {
  phrasal::FeatureDataset fd = phrasal::load_feature_dataset(data_path);
  phrasal::RuleSet rules =
      phrasal::learn_threshold_rules(fd.instances, max_rules, target, fallback);
  phrasal::save_rules(rules, out_path);

  std::size_t correct = 0;
  for (const auto& inst : fd.instances)
    if (phrasal::apply_rules(rules, inst.features) == inst.label) ++correct;
  double accuracy =
      fd.instances.empty()
          ? 0.0
          : static_cast<double>(correct) / static_cast<double>(fd.instances.size());

  if (g.as_json()) {
    json j;
    j["training_accuracy"] = json4(accuracy);
    j["rule_count"] = rules.rules.size();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "training_accuracy\t" << fmt4(accuracy) << "\n"
              << "rule_count\t" << rules.rules.size() << "\n";
  }
  return 0;
}

int run_context(const GlobalOpts& g, const std::string& data_path,
                const std::string& net_path, const std::string& corpus_path,
                const std::string& rules_path, const std::string& stop_path) {
  std::vector<phrasal::ContextInstance> instances =
      phrasal::load_context_dataset(data_path);
  if (instances.empty())
    throw phrasal::EmptyDatasetError("context dataset contains no instances");

  ScoringConfig cfg = make_config(g);
  phrasal::SemanticNetwork net = phrasal::load_network(net_path, cfg.table);
  phrasal::Stopwords stopwords = stop_path.empty()
                                     ? phrasal::Stopwords()
                                     : phrasal::Stopwords::from_file(stop_path);

  phrasal::ContextPipeline pipeline;
  pipeline.net = &net;
  pipeline.stopwords = &stopwords;
  pipeline.params = cfg.params;
  pipeline.rules = rules_path.empty() ? phrasal::default_context_rules()
                                      : phrasal::load_rules(rules_path);

  if (!corpus_path.empty()) {
    phrasal::Corpus corpus = phrasal::load_corpus(corpus_path);
    std::map<std::string, std::vector<std::string>> phrases;
    for (const auto& inst : instances)
      phrases.emplace(join_tokens(inst.phrase), inst.phrase);
    for (const auto& [key, toks] : phrases)
      pipeline.csets.emplace(key,
                             phrasal::build_collocation_set(corpus, toks, g.topk));
  }

  std::size_t labeled = 0;
  std::size_t correct = 0;
  json rows = json::array();

  for (const auto& inst : instances) {
    phrasal::ContextFeatures feats = pipeline.features_for(inst);
    const std::string& label =
        phrasal::apply_rules(pipeline.rules, feats.to_map());
    if (!inst.label.empty()) {
      ++labeled;
      if (label == inst.label) ++correct;
    }
    if (g.as_json()) {
      json row;
      row["phrase"] = join_tokens(inst.phrase);
      row["start"] = inst.start;
      row["end"] = inst.end;
      row["fc"] = feats.fc;
      row["srb"] = json4(feats.srb);
      row["sra"] = json4(feats.sra);
      row["label"] = label;
      rows.push_back(std::move(row));
    } else {
      std::cout << join_tokens(inst.phrase) << '\t' << inst.start << '\t'
                << inst.end << '\t' << feats.fc << '\t' << fmt4(feats.srb)
                << '\t' << fmt4(feats.sra) << '\t' << label << "\n";
    }
  }

  double accuracy =
      labeled ? static_cast<double>(correct) / static_cast<double>(labeled) : 0.0;
  if (g.as_json()) {
    json j;
    j["instances"] = std::move(rows);
    if (labeled) j["accuracy"] = json4(accuracy);
    std::cout << j.dump() << "\n";
  } else if (labeled) {
    std::cout << "#accuracy\t" << fmt4(accuracy) << "\n";
  }
  return 0;
}

int run_eval(const GlobalOpts& g, const std::string& data_path,
             const std::string& rules_path, const std::string& positive) {
  phrasal::FeatureDataset fd = phrasal::load_feature_dataset(data_path);
  phrasal::RuleSet rules = phrasal::load_rules(rules_path);
  std::vector<std::pair<phrasal::FeatureMap, std::string>> pairs;
  pairs.reserve(fd.instances.size());
  for (const auto& inst : fd.instances)
    pairs.emplace_back(inst.features, inst.label);
  phrasal::Metrics m = phrasal::evaluate(rules, pairs, positive);

  if (g.as_json()) {
    std::cout << metrics_json(m).dump() << "\n";
  } else {
    emit_metrics_tsv(m, "");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semantic relatedness and phrase compositionality toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--params", g.params_path,
                 "key=value file: max_path_cost, min_path_cost, category weights");
  app.add_option("--weights", g.weights_path,
                 "relation-to-category override file (TSV)");
  app.add_option("--window", g.window, "collocation window size")
      ->check(CLI::PositiveNumber);
  app.add_option("--topk", g.topk, "collocates kept per vector")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));

  std::string edge_path, out_path;
  auto* build_net = app.add_subcommand("build-net", "load, validate and report an edge file");
  build_net->fallthrough();
  build_net->add_option("edge_file", edge_path, "edge TSV")->required();
  build_net->add_option("-o,--out", out_path, "write the normalized network here");

  std::string net_path, word_arg;
  std::vector<std::string> phrase_args;
  bool explain = false;
  auto* relate = app.add_subcommand("relate", "word-to-phrase semantic relatedness");
  relate->fallthrough();
  relate->add_option("--net", net_path, "edge TSV")->required();
  relate->add_option("word", word_arg, "query word")->required();
  relate->add_option("phrase", phrase_args, "phrase words")->required()->expected(-1);
  relate->add_flag("--explain", explain, "print the shortest path per phrase word");

  std::string corpus_path, counts_out;
  auto* dist_build = app.add_subcommand("dist-build", "count windowed collocations");
  dist_build->fallthrough();
  dist_build->add_option("corpus", corpus_path, "tokenized corpus, blank line = sentence break")->required();
  dist_build->add_option("-o,--out", counts_out, "count TSV to write")->required();

  std::string counts_path;
  bool dump = false;
  auto* dist_sim = app.add_subcommand("dist-sim", "word-to-phrase distributional similarity");
  dist_sim->fallthrough();
  dist_sim->add_option("--counts", counts_path, "count TSV")->required();
  dist_sim->add_option("word", word_arg, "query word")->required();
  dist_sim->add_option("phrase", phrase_args, "phrase words")->required()->expected(-1);
  dist_sim->add_flag("--dump", dump, "print the word and composed phrase vectors");

  std::string data_path, mode = "run3", rules_path;
  auto* classify = app.add_subcommand("classify", "label word-phrase pairs");
  classify->fallthrough();
  classify->add_option("--data", data_path, "word/phrase/label TSV")->required();
  classify->add_option("--mode", mode, "rule configuration")
      ->check(CLI::IsMember({"run1", "run2", "run3", "learned"}));
  classify->add_option("--net", net_path, "edge TSV")->required();
  classify->add_option("--counts", counts_path, "count TSV")->required();
  classify->add_option("--rules", rules_path, "rule file for --mode learned");

  std::string train_out, target_label = phrasal::kPositive;
  std::string default_label = phrasal::kNegative;
  std::size_t max_rules = 8;
  auto* train = app.add_subcommand("train", "learn threshold rules from a feature table");
  train->fallthrough();
  train->add_option("--data", data_path, "feature TSV with header and label column")->required();
  train->add_option("-o,--out", train_out, "rule file to write")->required();
  train->add_option("--max-rules", max_rules, "rule budget")->check(CLI::PositiveNumber);
  train->add_option("--target", target_label, "label to learn rules for");
  train->add_option("--default", default_label, "fallback label");

  std::string ctx_corpus, stop_path;
  auto* context = app.add_subcommand("context", "literal vs figurative in sentence context");
  context->fallthrough();
  context->add_option("--data", data_path, "context TSV")->required();
  context->add_option("--net", net_path, "edge TSV")->required();
  context->add_option("--corpus", ctx_corpus, "corpus for collocation sets");
  context->add_option("--rules", rules_path, "override the built-in context rules");
  context->add_option("--stopwords", stop_path, "override the bundled stopword list");

  std::string positive_label = phrasal::kPositive;
  auto* eval = app.add_subcommand("eval", "score a rule file against a feature table");
  eval->fallthrough();
  eval->add_option("--data", data_path, "feature TSV with gold labels")->required();
  eval->add_option("--rules", rules_path, "rule file")->required();
  eval->add_option("--positive", positive_label, "label treated as positive");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (app.got_subcommand(build_net))
      return run_build_net(g, edge_path, out_path);
    if (app.got_subcommand(relate))
      return run_relate(g, net_path, word_arg, phrase_args, explain);
    if (app.got_subcommand(dist_build))
      return run_dist_build(g, corpus_path, counts_out);
    if (app.got_subcommand(dist_sim))
      return run_dist_sim(g, counts_path, word_arg, phrase_args, dump);
    if (app.got_subcommand(classify))
      return run_classify(g, data_path, mode, net_path, counts_path, rules_path);
    if (app.got_subcommand(train))
      return run_train(g, data_path, train_out, max_rules, target_label,
                       default_label);
    if (app.got_subcommand(context))
      return run_context(g, data_path, net_path, ctx_corpus, rules_path,
                         stop_path);
    if (app.got_subcommand(eval))
      return run_eval(g, data_path, rules_path, positive_label);
  } catch (const phrasal::WordNotInNetworkError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitVocabMiss;
  } catch (const MissingResourceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitMissingResource;
  } catch (const phrasal::DegenerateTrainingError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDegenerate;
  } catch (const phrasal::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitMissingResource;
  } catch (const phrasal::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  }
  return 0;
}

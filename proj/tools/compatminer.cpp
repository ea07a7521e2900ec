// compatminer: mines compatible/incompatible products from product-community
// yes/no QA. Subcommands cover corpus statistics, lexicon bootstrapping from
// reviews, distant training of the answer classifier, end-to-end prediction,
// evaluation, and a deterministic synthetic corpus generator.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcqa/bootstrap.hpp"
#include "pcqa/corpus.hpp"
#include "pcqa/eval.hpp"
#include "pcqa/model_io.hpp"
#include "pcqa/pipeline.hpp"
#include "pcqa/synth.hpp"
#include "pcqa/util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace pcqa;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGateFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

struct CommonOpts {
  uint64_t seed = 42;
  unsigned jobs = 1;
  bool lenient = false;
  std::string output_dir = ".";

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Top-level random seed");
    cmd->add_option("--jobs", jobs, "Worker thread cap for parallel stages");
    cmd->add_flag("--lenient,!--strict", lenient,
                  "Skip and count malformed corpus records instead of aborting");
    cmd->add_option("--output-dir,-o", output_dir, "Directory for output files");
    cmd->set_config("--config", "", "Key=value config file; command-line flags win");
  }

  LoadOptions load_options() const { return {.strict = !lenient, .resolve_parses = true}; }
};

// Every run drops a resolved-config snapshot next to its outputs.
void write_snapshot(const CommonOpts& common, const std::string& command, json extra) {
  extra["command"] = command;
  extra["seed"] = common.seed;
  extra["jobs"] = common.jobs;
  extra["strict"] = !common.lenient;
  write_file(fs::path(common.output_dir) / (command + ".config.json"), extra.dump(2) + "\n");
}

std::vector<QAPair> load_qa(const std::string& qa_path, const std::string& parses_path,
                            const CommonOpts& common, LoadStats* stats, bool need_parses) {
  LoadOptions opts = common.load_options();
  opts.resolve_parses = need_parses;
  ParseIndex index;
  if (need_parses) index = ParseIndex::from_conllu(read_file(parses_path), common.lenient ? stats : nullptr);
  std::ifstream in(qa_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + qa_path);
  return load_qa_corpus(in, need_parses ? &index : nullptr, opts, stats);
}

std::vector<DepPattern> load_patterns(const std::string& path) {
  return parse_pattern_file(path.empty() ? default_pattern_text() : read_file(path));
}

std::set<std::string> parse_seed_list(const std::string& csv) {
  std::set<std::string> out;
  for (const std::string& s : split(csv, ','))
    if (!trim(s).empty()) out.insert(to_lower(trim(s)));
  return out;
}

// Category -> QA pairs, preserving corpus order inside each group.
std::vector<std::pair<std::string, std::vector<QAPair>>> by_category(const std::vector<QAPair>& corpus) {
  std::vector<std::pair<std::string, std::vector<QAPair>>> groups;
  for (const QAPair& qa : corpus) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == qa.category; });
    if (it == groups.end()) {
      groups.push_back({qa.category, {qa}});
    } else {
      it->second.push_back(qa);
    }
  }
  return groups;
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

int cmd_stats(const CommonOpts& common, const std::string& qa_path, const std::string& parses_path) {
  LoadStats ls;
  std::vector<QAPair> corpus =
      load_qa(qa_path, parses_path, common, common.lenient ? &ls : nullptr, !parses_path.empty());
  std::vector<std::pair<std::string, DatasetStats>> rows;
  for (auto& [category, group] : by_category(corpus)) rows.push_back({category, corpus_stats(group)});
  if (rows.size() > 1) rows.push_back({"all", corpus_stats(corpus)});
  std::string table = render_stats_table(rows);
  std::cout << table;
  write_file(fs::path(common.output_dir) / "stats.json", stats_to_json(rows));
  write_file(fs::path(common.output_dir) / "stats.txt", table);
  write_snapshot(common, "stats", {{"qa", qa_path}, {"parses", parses_path}});
  if (common.lenient && ls.n_skipped > 0)
    std::cerr << "skipped " << ls.n_skipped << " malformed records\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bootstrap
// ---------------------------------------------------------------------------

int cmd_bootstrap(const CommonOpts& common, const std::string& reviews_path,
                  const std::string& patterns_path, const std::string& seeds_csv,
                  const BootstrapParams& params, const std::string& stopwords_csv) {
  BootstrapParams p = params;
  if (!stopwords_csv.empty()) p.stopword_verbs = parse_seed_list(stopwords_csv);
  std::set<std::string> seeds = parse_seed_list(seeds_csv);
  std::vector<DepPattern> patterns = load_patterns(patterns_path);
  LoadStats ls;
  std::ifstream in(reviews_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + reviews_path);
  std::vector<ReviewSentence> reviews =
      load_review_corpus(in, common.load_options(), common.lenient ? &ls : nullptr);
  BootstrapResult res = bootstrap(reviews, seeds, patterns, p, common.jobs);
  write_file(fs::path(common.output_dir) / "verbs.lex", lexicon_to_text(res.verbs.entries));
  write_file(fs::path(common.output_dir) / "entities.lex", lexicon_to_text(res.entities.entries));
  write_snapshot(common, "bootstrap",
                 {{"reviews", reviews_path},
                  {"patterns", patterns_path.empty() ? "<builtin>" : patterns_path},
                  {"seeds", json(seeds)},
                  {"max_iterations", p.max_iterations},
                  {"min_entity_support", p.min_entity_support},
                  {"min_verb_support", p.min_verb_support},
                  {"stopword_verbs", json(p.stopword_verbs)}});
  std::cout << "verbs: " << res.verbs.entries.size() << " (" << seeds.size() << " seeds), entities: "
            << res.entities.entries.size() << ", iterations: " << res.iterations_run << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// train
// ---------------------------------------------------------------------------

int cmd_train(const CommonOpts& common, const std::string& qa_path, const std::string& parses_path,
              PUParams pu_params, LinearHyperParams binary_params, bool unigrams) {
  LoadStats ls;
  std::vector<QAPair> corpus =
      load_qa(qa_path, parses_path, common, common.lenient ? &ls : nullptr, !parses_path.empty());
  std::vector<std::string> answers;
  for (const QAPair& qa : corpus)
    for (const std::string& a : qa.answers) answers.push_back(a);
  FeatureConfig cfg{.unigrams = unigrams};
  AnswerModel model = train_answer_model(answers, common.seed, pu_params, binary_params, cfg);
  write_file(fs::path(common.output_dir) / "model.txt", save_answer_model(model));
  write_snapshot(common, "train",
                 {{"qa", qa_path},
                  {"n_answers", answers.size()},
                  {"spy_fraction", pu_params.spy_fraction},
                  {"noise_percentile", pu_params.noise_percentile},
                  {"max_step2_iters", pu_params.max_step2_iters},
                  {"epochs", binary_params.epochs},
                  {"learning_rate", binary_params.learning_rate},
                  {"regularization", binary_params.regularization},
                  {"unigrams", unigrams}});
  std::cout << "features: " << model.space.size() << ", spies: " << model.pu.n_spies
            << ", reliable negatives: " << model.pu.reliable_negatives.size()
            << ", selected step-2 iteration: " << model.pu.selected_iteration << "\n";
  if (model.pu.degenerate)
    std::cerr << "warning: PU step 2 pushed every unlabeled answer into the negative set\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// predict
// ---------------------------------------------------------------------------

AnswerPolicy parse_policy(const std::string& s) {
  if (s == "first") return AnswerPolicy::First;
  if (s == "vote") return AnswerPolicy::Vote;
  throw std::runtime_error("unknown answer policy '" + s + "' (expected first|vote)");
}

int cmd_predict(const CommonOpts& common, const std::string& qa_path, const std::string& parses_path,
                const std::string& verbs_path, const std::string& model_path,
                const std::string& patterns_path, const std::string& policy_name) {
  AnswerPolicy policy = parse_policy(policy_name);
  LoadStats ls;
  std::vector<QAPair> corpus =
      load_qa(qa_path, parses_path, common, common.lenient ? &ls : nullptr, true);
  VerbLexicon verbs;
  verbs.entries = lexicon_from_text(read_file(verbs_path));
  std::vector<DepPattern> patterns = load_patterns(patterns_path);
  AnswerModel model = load_answer_model(read_file(model_path));
  std::vector<CompatibilityRecord> records =
      run_pipeline(corpus, verbs, patterns, model, policy, common.jobs);
  write_file(fs::path(common.output_dir) / "records.jsonl", records_to_jsonl(records));
  write_snapshot(common, "predict",
                 {{"qa", qa_path},
                  {"parses", parses_path},
                  {"verbs", verbs_path},
                  {"model", model_path},
                  {"patterns", patterns_path.empty() ? "<builtin>" : patterns_path},
                  {"answer_policy", policy_name},
                  {"n_records", records.size()}});
  std::cout << "records: " << records.size() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

ProductEval evaluate_group(const std::string& name, const std::vector<QAPair>& group,
                           const VerbLexicon& verbs, const std::vector<DepPattern>& patterns,
                           const AnswerModel& model, AnswerPolicy policy, unsigned jobs) {
  ProductEval pe;
  pe.product = name;
  pe.n_questions = static_cast<int>(group.size());

  MentionSets predictions, gold;
  for (const QAPair& qa : group) {
    if (!qa.gold) throw std::runtime_error("evaluate: missing gold for qa_id " + qa.qa_id);
    QuestionExtraction ext = extract_from_question(qa, verbs, patterns);
    std::set<std::string>& p = predictions[qa.qa_id];
    for (const ExtractedMention& m : ext.mentions) p.insert(m.surface);
    gold[qa.qa_id] = std::set<std::string>(qa.gold->entities.begin(), qa.gold->entities.end());
    if (!qa.gold->entities.empty()) pe.n_gold_bearing++;
  }
  pe.cer = eval_cer(predictions, gold);
  pe.np_baseline = eval_cer(baseline_np_chunker(group), gold);

  std::map<std::string, Polarity> answer_preds;
  for (const QAPair& qa : group) answer_preds[qa.qa_id] = classify_qa_answer(qa, model, policy);
  pe.answer_accuracy = eval_answers(answer_preds, group);
  pe.yesno_accuracy = eval_answers(baseline_yesno(group, policy), group);

  std::vector<CompatibilityRecord> records = run_pipeline(group, verbs, patterns, model, policy, jobs);
  pe.overall_accuracy = eval_overall(records, group);
  return pe;
}

int cmd_evaluate(const CommonOpts& common, const std::string& qa_path, const std::string& parses_path,
                 const std::string& verbs_path, const std::string& model_path,
                 const std::string& patterns_path, const std::string& policy_name, double min_cer_f1,
                 double min_overall) {
  AnswerPolicy policy = parse_policy(policy_name);
  LoadStats ls;
  std::vector<QAPair> corpus =
      load_qa(qa_path, parses_path, common, common.lenient ? &ls : nullptr, true);
  VerbLexicon verbs;
  verbs.entries = lexicon_from_text(read_file(verbs_path));
  std::vector<DepPattern> patterns = load_patterns(patterns_path);
  AnswerModel model = load_answer_model(read_file(model_path));

  EvalReport report;
  auto groups = by_category(corpus);
  for (auto& [category, group] : groups)
    report.products.push_back(
        evaluate_group(category, group, verbs, patterns, model, policy, common.jobs));
  if (groups.size() > 1)
    report.products.push_back(
        evaluate_group("all", corpus, verbs, patterns, model, policy, common.jobs));

  json config = {{"qa", qa_path},
                 {"parses", parses_path},
                 {"verbs", verbs_path},
                 {"model", model_path},
                 {"patterns", patterns_path.empty() ? "<builtin>" : patterns_path},
                 {"answer_policy", policy_name},
                 {"min_cer_f1", min_cer_f1},
                 {"min_overall", min_overall}};
  report.config_json = config.dump();

  std::string tables = render_eval_tables(report);
  std::cout << tables;
  write_file(fs::path(common.output_dir) / "report.json", eval_report_to_json(report));
  write_file(fs::path(common.output_dir) / "report.txt", tables);
  write_snapshot(common, "evaluate", config);

  for (const ProductEval& p : report.products) {
    if (p.cer.f1().value() < min_cer_f1 || p.overall_accuracy.value() < min_overall) {
      std::cerr << "evaluation gate failed for " << p.product << "\n";
      return kExitGateFailed;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// synth
// ---------------------------------------------------------------------------

int cmd_synth(const CommonOpts& common, const SynthSpec& spec) {
  SynthSpec s = spec;
  s.seed = common.seed;
  SynthOutput out = generate_synthetic_corpus(s);
  fs::path dir(common.output_dir);
  write_file(dir / "qa.jsonl", out.qa_jsonl);
  write_file(dir / "questions.conllu", out.question_conllu);
  write_file(dir / "reviews.conllu", out.review_conllu);
  write_file(dir / "manifest.json", out.manifest_json);
  write_snapshot(common, "synth",
                 {{"n_questions", s.n_questions},
                  {"fraction_explicit", s.fraction_explicit},
                  {"fraction_neutral", s.fraction_neutral},
                  {"entity_question_fraction", s.templates.entity_question_fraction},
                  {"two_sentence_fraction", s.templates.two_sentence_fraction},
                  {"yes_ratio", s.templates.yes_ratio},
                  {"entity_support", s.vocab.entity_support},
                  {"verb_support", s.vocab.verb_support},
                  {"decoy_support", s.vocab.decoy_support}});
  std::cout << "questions: " << s.n_questions << ", manifest: " << (dir / "manifest.json").string()
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mines compatible/incompatible products from product-community yes/no QA"};
  app.require_subcommand(1);

  // stats
  auto* stats = app.add_subcommand("stats", "Dataset statistics from a gold-annotated QA corpus");
  CommonOpts stats_common;
  std::string stats_qa, stats_parses;
  stats_common.attach(stats);
  stats->add_option("--qa", stats_qa, "QA corpus (JSONL)")->required();
  stats->add_option("--parses", stats_parses, "Question parses (CoNLL-U); optional for stats");

  // bootstrap
  auto* boot = app.add_subcommand("bootstrap", "Expand verb/entity lexicons from unlabeled reviews");
  CommonOpts boot_common;
  std::string boot_reviews, boot_patterns, boot_seeds = "work,fit", boot_stopwords;
  BootstrapParams boot_params;
  boot_common.attach(boot);
  boot->add_option("--reviews", boot_reviews, "Review parses (CoNLL-U)")->required();
  boot->add_option("--patterns", boot_patterns, "Pattern DSL file (default: builtin set)");
  boot->add_option("--seeds", boot_seeds, "Seed verb lemmas, comma separated");
  boot->add_option("--max-iterations", boot_params.max_iterations);
  boot->add_option("--min-entity-support", boot_params.min_entity_support);
  boot->add_option("--min-verb-support", boot_params.min_verb_support);
  boot->add_option("--stopword-verbs", boot_stopwords, "Override stopword verbs, comma separated");

  // train
  auto* train = app.add_subcommand("train", "Distant-train the PU + binary answer classifiers");
  CommonOpts train_common;
  std::string train_qa, train_parses;
  PUParams train_pu_params;
  LinearHyperParams train_binary_params;
  bool train_unigrams = false;
  train_common.attach(train);
  train->add_option("--qa", train_qa, "QA corpus (JSONL); answers are the training text")->required();
  train->add_option("--parses", train_parses, "Question parses (optional; answers-only otherwise)");
  train->add_option("--spy-fraction", train_pu_params.spy_fraction);
  train->add_option("--noise-percentile", train_pu_params.noise_percentile);
  train->add_option("--max-step2-iters", train_pu_params.max_step2_iters);
  train->add_option("--epochs", train_binary_params.epochs);
  train->add_option("--learning-rate", train_binary_params.learning_rate);
  train->add_option("--regularization", train_binary_params.regularization);
  train->add_flag("--unigrams", train_unigrams, "Add unigram features next to bigrams");

  // predict
  auto* predict = app.add_subcommand("predict", "Run the two-stage pipeline, emit records JSONL");
  CommonOpts predict_common;
  std::string predict_qa, predict_parses, predict_verbs, predict_model, predict_patterns;
  std::string predict_policy = "first";
  predict_common.attach(predict);
  predict->add_option("--qa", predict_qa)->required();
  predict->add_option("--parses", predict_parses)->required();
  predict->add_option("--verbs", predict_verbs, "Verb lexicon file")->required();
  predict->add_option("--model", predict_model, "Answer model file")->required();
  predict->add_option("--patterns", predict_patterns, "Pattern DSL file (default: builtin set)");
  predict->add_option("--answer-policy", predict_policy, "first|vote");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate extraction, answers and overall");
  CommonOpts eval_common;
  std::string eval_qa, eval_parses, eval_verbs, eval_model, eval_patterns;
  std::string eval_policy = "first";
  double eval_min_cer_f1 = 0.0, eval_min_overall = 0.0;
  eval_common.attach(evaluate);
  evaluate->add_option("--qa", eval_qa)->required();
  evaluate->add_option("--parses", eval_parses)->required();
  evaluate->add_option("--verbs", eval_verbs)->required();
  evaluate->add_option("--model", eval_model)->required();
  evaluate->add_option("--patterns", eval_patterns);
  evaluate->add_option("--answer-policy", eval_policy, "first|vote");
  evaluate->add_option("--min-cer-f1", eval_min_cer_f1, "Gate: fail (exit 1) below this CER F1");
  evaluate->add_option("--min-overall", eval_min_overall, "Gate: fail (exit 1) below this overall accuracy");

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a deterministic synthetic corpus");
  CommonOpts synth_common;
  SynthSpec synth_spec;
  synth_common.attach(synth);
  synth->add_option("--n-questions", synth_spec.n_questions);
  synth->add_option("--fraction-explicit", synth_spec.fraction_explicit);
  synth->add_option("--fraction-neutral", synth_spec.fraction_neutral);
  synth->add_option("--entity-question-fraction", synth_spec.templates.entity_question_fraction);
  synth->add_option("--two-sentence-fraction", synth_spec.templates.two_sentence_fraction);
  synth->add_option("--yes-ratio", synth_spec.templates.yes_ratio);
  synth->add_option("--n-question-entities", synth_spec.vocab.n_question_entities);
  synth->add_option("--n-review-entities", synth_spec.vocab.n_review_entities);
  synth->add_option("--n-verbs", synth_spec.vocab.n_verbs);
  synth->add_option("--n-decoy-verbs", synth_spec.vocab.n_decoy_verbs);
  synth->add_option("--entity-support", synth_spec.vocab.entity_support);
  synth->add_option("--verb-support", synth_spec.vocab.verb_support);
  synth->add_option("--decoy-support", synth_spec.vocab.decoy_support);
  synth->add_option("--n-noise-reviews", synth_spec.vocab.n_noise_reviews);

  CLI11_PARSE(app, argc, argv);

  try {
    if (stats->parsed()) return cmd_stats(stats_common, stats_qa, stats_parses);
    if (boot->parsed())
      return cmd_bootstrap(boot_common, boot_reviews, boot_patterns, boot_seeds, boot_params,
                           boot_stopwords);
    if (train->parsed()) {
      train_pu_params.base = train_binary_params;
      return cmd_train(train_common, train_qa, train_parses, train_pu_params, train_binary_params,
                       train_unigrams);
    }
    if (predict->parsed())
      return cmd_predict(predict_common, predict_qa, predict_parses, predict_verbs, predict_model,
                         predict_patterns, predict_policy);
    if (evaluate->parsed())
      return cmd_evaluate(eval_common, eval_qa, eval_parses, eval_verbs, eval_model, eval_patterns,
                          eval_policy, eval_min_cer_f1, eval_min_overall);
    if (synth->parsed()) return cmd_synth(synth_common, synth_spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

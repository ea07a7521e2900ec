#include "pcqa/model_io.hpp"

#include <sstream>
#include <stdexcept>

#include "pcqa/util.hpp"

namespace pcqa {

AnswerModel train_answer_model(const std::vector<std::string>& answers, uint64_t seed,
                               const PUParams& pu_params, const LinearHyperParams& binary_params,
                               const FeatureConfig& cfg) {
  AnswerModel m;
  m.seed = seed;
  m.fconfig = cfg;
  DistantTrainingSet ts = build_distant_training_set(answers, m.space, cfg);
  m.space.freeze();
  m.pu_params = pu_params;
  m.pu_params.seed = derive_seed(seed, "train.pu");
  m.binary_params = binary_params;
  m.binary_params.seed = derive_seed(seed, "train.binary");
  m.pu = train_pu(ts, m.space.size(), m.pu_params);
  m.binary = train_binary_yesno(ts, m.space.size(), m.binary_params);
  return m;
}

namespace {

void put_kv(std::string& out, const std::string& key, const std::string& value) {
  out += key;
  out += ' ';
  out += value;
  out += '\n';
}

void put_weights(std::string& out, const std::string& key, const LinearModel& m) {
  put_kv(out, key + ".epochs", std::to_string(m.hp.epochs));
  put_kv(out, key + ".learning_rate", format_double(m.hp.learning_rate));
  put_kv(out, key + ".regularization", format_double(m.hp.regularization));
  put_kv(out, key + ".seed", std::to_string(m.hp.seed));
  put_kv(out, key + ".objective", format_double(m.final_objective));
  put_kv(out, key + ".bias", format_double(m.bias));
  put_kv(out, key + ".weights", std::to_string(m.weights.size()));
  for (double w : m.weights) {
    out += format_double(w);
    out += '\n';
  }
}

struct Reader {
  std::istringstream in;
  int line_no = 0;

  explicit Reader(const std::string& text) : in(text) {}

  std::string next_line() {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("model file: unexpected end of file");
    ++line_no;
    return line;
  }
  // "key value" line; checks the key.
  std::string value_for(const std::string& key) {
    std::string line = next_line();
    if (!starts_with(line, key + " "))
      throw std::runtime_error("model file line " + std::to_string(line_no) + ": expected '" + key +
                               "', got '" + line + "'");
    return line.substr(key.size() + 1);
  }
};

LinearModel read_weights(Reader& r, const std::string& key) {
  LinearModel m;
  m.hp.epochs = std::stoi(r.value_for(key + ".epochs"));
  m.hp.learning_rate = std::stod(r.value_for(key + ".learning_rate"));
  m.hp.regularization = std::stod(r.value_for(key + ".regularization"));
  m.hp.seed = std::stoull(r.value_for(key + ".seed"));
  m.final_objective = std::stod(r.value_for(key + ".objective"));
  m.bias = std::stod(r.value_for(key + ".bias"));
  size_t n = std::stoull(r.value_for(key + ".weights"));
  m.weights.reserve(n);
  for (size_t i = 0; i < n; ++i) m.weights.push_back(std::stod(r.next_line()));
  return m;
}

}  // namespace

std::string save_answer_model(const AnswerModel& model) {
  std::string out;
  out += std::string(kModelMagic) + " v" + std::to_string(kModelVersion) + "\n";
  put_kv(out, "seed", std::to_string(model.seed));
  put_kv(out, "unigrams", model.fconfig.unigrams ? "1" : "0");
  put_kv(out, "pu.spy_fraction", format_double(model.pu_params.spy_fraction));
  put_kv(out, "pu.noise_percentile", format_double(model.pu_params.noise_percentile));
  put_kv(out, "pu.max_step2_iters", std::to_string(model.pu_params.max_step2_iters));
  put_kv(out, "pu.seed", std::to_string(model.pu_params.seed));
  put_kv(out, "pu.threshold", format_double(model.pu.spy_threshold));
  put_kv(out, "pu.n_spies", std::to_string(model.pu.n_spies));
  put_kv(out, "pu.n_reliable_negatives", std::to_string(model.pu.reliable_negatives.size()));
  put_kv(out, "pu.n_final_negatives", std::to_string(model.pu.final_negatives.size()));
  put_kv(out, "pu.selected_iteration", std::to_string(model.pu.selected_iteration));
  put_kv(out, "pu.degenerate", model.pu.degenerate ? "1" : "0");
  put_kv(out, "features", std::to_string(model.space.size()));
  for (size_t i = 0; i < model.space.names.size(); ++i)
    put_kv(out, std::to_string(i), model.space.names[i]);
  put_weights(out, "pu.model", model.pu.model);
  put_weights(out, "binary", model.binary);
  out += "end\n";
  return out;
}

AnswerModel load_answer_model(const std::string& text) {
  Reader r(text);
  std::string header = r.next_line();
  std::string expected = std::string(kModelMagic) + " v" + std::to_string(kModelVersion);
  if (header != expected)
    throw std::runtime_error("model file: unsupported header '" + header + "' (expected '" +
                             expected + "')");
  AnswerModel m;
  m.seed = std::stoull(r.value_for("seed"));
  m.fconfig.unigrams = r.value_for("unigrams") == "1";
  m.pu_params.spy_fraction = std::stod(r.value_for("pu.spy_fraction"));
  m.pu_params.noise_percentile = std::stod(r.value_for("pu.noise_percentile"));
  m.pu_params.max_step2_iters = std::stoi(r.value_for("pu.max_step2_iters"));
  m.pu_params.seed = std::stoull(r.value_for("pu.seed"));
  m.pu.spy_threshold = std::stod(r.value_for("pu.threshold"));
  m.pu.n_spies = std::stoi(r.value_for("pu.n_spies"));
  int n_rn = std::stoi(r.value_for("pu.n_reliable_negatives"));
  int n_fn = std::stoi(r.value_for("pu.n_final_negatives"));
  // Index sets are diagnostics; only their sizes survive a round trip.
  m.pu.reliable_negatives.assign(static_cast<size_t>(n_rn), -1);
  m.pu.final_negatives.assign(static_cast<size_t>(n_fn), -1);
  m.pu.selected_iteration = std::stoi(r.value_for("pu.selected_iteration"));
  m.pu.degenerate = r.value_for("pu.degenerate") == "1";
  size_t n_features = std::stoull(r.value_for("features"));
  for (size_t i = 0; i < n_features; ++i) {
    std::string name = r.value_for(std::to_string(i));
    m.space.add_or_get(name);
  }
  m.space.freeze();
  m.pu.model = read_weights(r, "pu.model");
  m.binary = read_weights(r, "binary");
  m.binary_params = m.binary.hp;
  if (r.next_line() != "end") throw std::runtime_error("model file: missing end marker");
  if (m.pu.model.weights.size() != m.space.size() || m.binary.weights.size() != m.space.size())
    throw std::runtime_error("model file: weight vectors do not match the feature space");
  m.pu_params.base = m.pu.model.hp;
  return m;
}

}  // namespace pcqa

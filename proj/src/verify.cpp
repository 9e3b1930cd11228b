#include "weylsym/verify.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "weylsym/symmetrization.hpp"

namespace weylsym {

namespace {

using Json = nlohmann::ordered_json;

// Words are drawn from a stream decorrelated from the family's stream.
constexpr std::uint64_t kWordStream = 0x5851f42d4c957f2dULL;

std::string format_term(const Monomial& m, const Rational& c) {
  return c.get_str() + "*" + to_string(m);
}

void record_residual(TrialRecord& rec, const WeylElement& residual) {
  rec.residual_terms += residual.size();
  if (!rec.first_offending && !residual.is_zero()) {
    const auto terms = residual.sorted_terms();
    rec.first_offending = format_term(terms.front().first, terms.front().second);
  }
}

void run_parallel(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t t = 0; t < count; ++t) body(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (std::size_t t; (t = next++) < count;) {
        try {
          body(t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

TrialRecord theorem_trial(const RunConfig& cfg, std::size_t index) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = cfg.seed + index;
  const auto fam = random_family(cfg.n, cfg.max_order, cfg.sparsity, rec.seed);
  Rng rng(rec.seed ^ kWordStream);
  const auto word = WordSpec::random(cfg.n, cfg.k, rng);
  rec.word = word.letters();
  const auto g = build_generators(fam, TruncationOrder{cfg.effective_order()});
  const auto report = theorem_check(g, word);
  rec.passed = report.passed;
  record_residual(rec, report.residual.element());
  if (!report.truncation_sufficient) rec.details.emplace_back("warning", "truncation order below k-1");
  return rec;
}

TrialRecord cancellation_trial(const RunConfig& cfg, std::size_t index) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = cfg.seed + index;
  const auto fam = random_family(cfg.n, cfg.max_order, cfg.sparsity, rec.seed);
  Rng rng(rec.seed ^ kWordStream);
  const auto word = WordSpec::random(cfg.n, cfg.k, rng);
  rec.word = word.letters();
  for (std::size_t l = 0; l < cfg.n; ++l)
    for (unsigned order = 1; order <= cfg.max_order; ++order)
      record_residual(rec, cancellation_check(fam, word, l, order).element());
  rec.passed = rec.residual_terms == 0;
  return rec;
}

TrialRecord span_trial(const RunConfig& cfg, std::size_t index) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = cfg.seed + index;
  const auto fam = random_family(cfg.n, cfg.max_order, cfg.sparsity, rec.seed);
  const auto g = build_generators(fam, TruncationOrder{cfg.effective_order()});
  const auto dims = span_dimension(g, cfg.k);
  rec.passed = dims.words >= dims.symmetric;
  rec.details = {{"dim_words", std::to_string(dims.words)},
                 {"dim_symmetric", std::to_string(dims.symmetric)},
                 {"compared_degree", std::to_string(dims.compared_degree)}};
  return rec;
}

std::vector<TrialRecord> iota_records(const RunConfig& cfg) {
  const auto sc = load_structure_constants(*cfg.sc_path);
  const std::size_t n = sc.dimension();
  const TruncationOrder order{cfg.effective_order()};
  std::vector<TrialRecord> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      TrialRecord rec;
      rec.index = out.size();
      rec.seed = cfg.seed;
      rec.word = {i, j};
      const auto defect = homomorphism_defect(sc, i, j, order);
      rec.passed = defect.is_zero();
      record_residual(rec, defect);
      rec.details.emplace_back("check", "bracket");
      out.push_back(std::move(rec));
    }
  const auto g = build_generators(derived_family(sc, std::max(order.degree, 1u)), order);
  for (std::size_t i = 0; i < n; ++i) {
    TrialRecord rec;
    rec.index = out.size();
    rec.seed = cfg.seed;
    rec.word = {i};
    const auto diff = g.X[i] - iota(sc, i, order);
    rec.passed = diff.is_zero();
    record_residual(rec, diff);
    rec.details.emplace_back("check", "recovery");
    out.push_back(std::move(rec));
  }
  return out;
}

Json word_json(const std::vector<std::size_t>& word) {
  Json w = Json::array();
  for (auto a : word) w.push_back(a + 1);
  return w;
}

std::string word_text(const std::vector<std::size_t>& word) {
  std::string s = "(";
  for (std::size_t t = 0; t < word.size(); ++t) s += (t ? "," : "") + std::to_string(word[t] + 1);
  return s + ")";
}

Json config_json(const RunConfig& cfg) {
  Json j;
  j["command"] = command_name(cfg.command);
  j["n"] = cfg.n;
  j["k"] = cfg.k;
  j["n_max"] = cfg.max_order;
  j["D"] = cfg.effective_order();
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["sc_path"] = cfg.sc_path ? Json(*cfg.sc_path) : Json(nullptr);
  j["sparsity"] = cfg.sparsity.get_str();
  return j;
}

Json parse_json_file(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("structure constants: ") + e.what());
  }
}

long json_int(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw InputError(std::string("structure constants: field '") + field +
                     "' missing or not an integer");
  return j[field].get<long>();
}

Integer json_bigint(const Json& j, const char* field, long fallback) {
  if (!j.contains(field)) return fallback;
  if (j[field].is_number_integer()) return Integer(j[field].get<long>());
  if (j[field].is_string()) {
    try {
      return Integer(j[field].get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw InputError(std::string("structure constants: field '") + field + "' is not an integer");
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::verify_theorem: return "verify-theorem";
    case Command::verify_iota: return "verify-iota";
    case Command::cancellation: return "cancellation";
    case Command::span_dim: return "span-dim";
    case Command::bernoulli: return "bernoulli";
  }
  return "?";
}

void RunConfig::validate() const {
  if (n < 1) throw InputError("--n must be at least 1");
  if (k < 1) throw InputError("--k must be at least 1");
  if (max_order < 1) throw InputError("--n-max must be at least 1");
  if (trials < 1) throw InputError("--trials must be at least 1");
  if (sparsity < 0 || sparsity > 1) throw InputError("--sparsity must lie in [0, 1]");
  if (command == Command::verify_iota && !sc_path)
    throw InputError("verify-iota requires --sc <file>");
  if (command == Command::span_dim && order && *order + 1 < k)
    throw InputError("span-dim needs --D >= k - 1");
}

unsigned RunConfig::effective_order() const {
  if (order) return *order;
  switch (command) {
    case Command::verify_theorem:
    case Command::cancellation: return static_cast<unsigned>(k - 1);
    case Command::span_dim: return static_cast<unsigned>(2 * k);
    case Command::verify_iota: return 4;
    case Command::bernoulli: return 0;
  }
  return 0;
}

StructureConstants parse_structure_constants(const std::string& text) {
  const Json doc = parse_json_file(text);
  if (!doc.is_object()) throw InputError("structure constants: top level must be an object");
  const long n = json_int(doc, "n");
  if (n < 1) throw InputError("structure constants: n must be positive");
  const bool complete = doc.value("complete", true);
  if (doc.contains("entries") && !doc["entries"].is_array())
    throw InputError("structure constants: 'entries' must be a list");

  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::map<Key, Rational> given;
  for (const auto& e : doc.value("entries", Json::array())) {
    if (!e.is_object()) throw InputError("structure constants: entry must be an object");
    const long k = json_int(e, "k"), i = json_int(e, "i"), j = json_int(e, "j");
    for (long idx : {k, i, j})
      if (idx < 1 || idx > n) throw InputError("structure constants: index out of range 1..n");
    const Integer num = json_bigint(e, "num", 0);
    const Integer den = json_bigint(e, "den", 1);
    if (den <= 0) throw InputError("structure constants: den must be positive");
    Key key{static_cast<std::size_t>(k - 1), static_cast<std::size_t>(i - 1),
            static_cast<std::size_t>(j - 1)};
    if (given.contains(key)) throw InputError("structure constants: duplicate entry");
    given.emplace(key, make_rational(num, den));
  }

  StructureConstants sc(static_cast<std::size_t>(n));
  for (const auto& [key, value] : given) {
    const auto [k, i, j] = key;
    sc.set(k, i, j, value);
    if (complete && i != j && !given.contains(Key{k, j, i})) sc.set(k, j, i, -value);
  }

  const auto violations = validate(sc);
  if (!violations.empty()) {
    std::string msg = "structure constants rejected:";
    for (const auto& v : violations) msg += "\n  " + v.describe();
    throw InputError(msg);
  }
  return sc;
}

StructureConstants load_structure_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open structure constants file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_structure_constants(buf.str());
}

VerificationReport run(const RunConfig& config) {
  config.validate();
  VerificationReport report;
  report.config = config;

  std::function<TrialRecord(const RunConfig&, std::size_t)> trial;
  switch (config.command) {
    case Command::verify_theorem: trial = theorem_trial; break;
    case Command::cancellation: trial = cancellation_trial; break;
    case Command::span_dim: trial = span_trial; break;
    case Command::verify_iota: report.trials = iota_records(config); break;
    case Command::bernoulli:
      for (unsigned N = 0; N <= config.max_order; ++N)
        report.bernoulli_table.emplace_back(N, bernoulli(N));
      break;
  }
  if (trial) {
    report.trials.resize(config.trials);
    run_parallel(config.trials, config.jobs,
                 [&](std::size_t t) { report.trials[t] = trial(config, t); });
  }
  for (const auto& rec : report.trials)
    if (!rec.passed) ++report.failures;
  return report;
}

std::string render_text(const VerificationReport& report) {
  const auto& cfg = report.config;
  std::ostringstream os;
  os << "command: " << command_name(cfg.command) << '\n';
  if (cfg.command == Command::bernoulli) {
    for (const auto& [N, value] : report.bernoulli_table) os << "B_" << N << " = " << value.get_str() << '\n';
    return os.str();
  }
  os << "config: n=" << cfg.n << " k=" << cfg.k << " n_max=" << cfg.max_order
     << " D=" << cfg.effective_order() << " trials=" << cfg.trials << " seed=" << cfg.seed
     << " sparsity=" << cfg.sparsity.get_str();
  if (cfg.sc_path) os << " sc=" << *cfg.sc_path;
  os << '\n';
  for (const auto& rec : report.trials) {
    os << "trial " << rec.index << " seed=" << rec.seed << " word=" << word_text(rec.word) << ' '
       << (rec.passed ? "PASS" : "FAIL");
    for (const auto& [key, value] : rec.details) os << ' ' << key << '=' << value;
    if (!rec.passed) {
      os << " residual_terms=" << rec.residual_terms;
      if (rec.first_offending) os << " first=" << *rec.first_offending;
    }
    os << '\n';
  }
  os << "summary: " << report.trials.size() << " trials, " << report.failures << " failures\n";
  return os.str();
}

std::string render_json(const VerificationReport& report) {
  Json doc;
  doc["command"] = command_name(report.config.command);
  doc["config"] = config_json(report.config);
  if (report.config.command == Command::bernoulli) {
    Json table = Json::array();
    for (const auto& [N, value] : report.bernoulli_table)
      table.push_back(Json{{"N", N}, {"value", value.get_str()}});
    doc["bernoulli"] = table;
  }
  Json trials = Json::array();
  for (const auto& rec : report.trials) {
    Json t;
    t["index"] = rec.index;
    t["seed"] = rec.seed;
    t["word"] = word_json(rec.word);
    t["passed"] = rec.passed;
    t["residual_terms"] = rec.residual_terms;
    t["first_offending_monomial"] = rec.first_offending ? Json(*rec.first_offending) : Json(nullptr);
    Json details = Json::object();
    for (const auto& [key, value] : rec.details) details[key] = value;
    t["details"] = details;
    trials.push_back(t);
  }
  doc["trials"] = trials;
  doc["aggregate"] = Json{{"trials", report.trials.size()}, {"failures", report.failures}};
  return doc.dump(2) + "\n";
}

std::string render(const VerificationReport& report) {
  return report.config.output == OutputFormat::json ? render_json(report) : render_text(report);
}

int exit_status(const VerificationReport& report) { return report.failures == 0 ? 0 : 1; }

}  // namespace weylsym

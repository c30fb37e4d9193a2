#include "gfm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfm/builtin_models.hpp"
#include "gfm/errors.hpp"
#include "gfm/functional_model.hpp"
#include "gfm/model_io.hpp"
#include "gfm/oracle.hpp"

namespace gfm {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

using Table = std::vector<std::vector<std::string>>;

void print_table(std::ostream& out, const Table& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

FunctionalModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read model file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::pair<std::string, std::string> key_value(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + text + "'");
  return {text.substr(0, eq), text.substr(eq + 1)};
}

Rational parse_argument_rational(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ValidationError& ex) {
    throw UsageError(ex.what());
  }
}

// "L=R,L=R"; labels left out get probability zero.
Distribution parse_prior(const Frame& theta, const std::string& text) {
  std::vector<Rational> p(theta.size());
  std::vector<bool> given(theta.size(), false);
  for (const auto& item : split(text, ',')) {
    const auto [label, value] = key_value(item);
    const auto index = theta.find(label);
    if (!index) throw UsageError("prior names unknown parameter value '" + label + "'");
    if (given[*index]) throw UsageError("prior gives '" + label + "' twice");
    given[*index] = true;
    p[*index] = parse_argument_rational(value);
  }
  try {
    return Distribution(theta, std::move(p));
  } catch (const ValidationError& ex) {
    throw UsageError(std::string("invalid prior: ") + ex.what());
  }
}

// "a+b" or "~a+b" (complement).
Subset parse_hypothesis(const Frame& theta, std::string text) {
  bool complement = false;
  if (!text.empty() && text.front() == '~') {
    complement = true;
    text.erase(0, 1);
  }
  if (text.empty()) throw UsageError("empty hypothesis");
  Mask bits = 0;
  for (const auto& label : split(text, '+')) {
    const auto index = theta.find(label);
    if (!index) throw UsageError("hypothesis names unknown parameter value '" + label + "'");
    bits |= Mask{1} << *index;
  }
  const Subset s = theta.subset(bits);
  return complement ? s.complement() : s;
}

std::vector<Observation> parse_observations(const FunctionalModel& model,
                                            const std::vector<std::string>& labels) {
  for (const auto& l : labels) {
    if (!model.observations().find(l)) throw UsageError("unknown observation '" + l + "'");
  }
  return make_observations(labels);
}

bool hypothesis_order(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.indices() < b.indices();
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

nlohmann::ordered_json number_json(const Rational& r) {
  return {{"exact", r.str()}, {"decimal", r.decimal()}};
}

nlohmann::ordered_json set_json(const Subset& s) {
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i : s.indices()) arr.push_back(s.frame().label(i));
  return arr;
}

struct EvalOptions {
  std::string model_path;
  std::vector<std::string> observations;
  std::vector<std::string> hypotheses;
  std::string prior;
  std::string format = "table";
};

int run_eval(const EvalOptions& opt, std::ostream& out) {
  const FunctionalModel model = load_model(opt.model_path);
  const Frame& theta = model.theta();
  const auto xs = parse_observations(model, opt.observations);
  std::optional<Distribution> prior;
  if (!opt.prior.empty()) prior = parse_prior(theta, opt.prior);

  std::vector<Subset> hypotheses;
  for (std::size_t t = 0; t < theta.size(); ++t) hypotheses.push_back(theta.singleton(t));
  for (const auto& h : opt.hypotheses) hypotheses.push_back(parse_hypothesis(theta, h));
  std::sort(hypotheses.begin(), hypotheses.end(), hypothesis_order);
  hypotheses.erase(std::unique(hypotheses.begin(), hypotheses.end()), hypotheses.end());

  const Combination result = infer_detailed(model, xs, prior);
  const MassFunction& m = result.mass;
  const Rational& conflict = result.report.conflict;

  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["observations"] = opt.observations;
    if (prior) {
      nlohmann::ordered_json p = nlohmann::ordered_json::object();
      for (std::size_t t = 0; t < theta.size(); ++t) p[theta.label(t)] = (*prior)[t].str();
      doc["prior"] = p;
    } else {
      doc["prior"] = nullptr;
    }
    doc["precise"] = is_precise(m);
    doc["conflict"] = number_json(conflict);
    auto focal = nlohmann::ordered_json::array();
    for (const auto& [s, w] : m.focal_sets()) focal.push_back({{"set", set_json(s)}, {"mass", number_json(w)}});
    doc["focal_sets"] = focal;
    auto hyps = nlohmann::ordered_json::array();
    for (const auto& h : hypotheses) {
      hyps.push_back({{"set", set_json(h)},
                      {"support", number_json(support(m, h))},
                      {"plausibility", number_json(plausibility(m, h))}});
    }
    doc["hypotheses"] = hyps;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  out << "observations: " << (opt.observations.empty() ? "(none)" : join(opt.observations, " ")) << '\n';
  if (prior) {
    std::vector<std::string> parts;
    for (std::size_t t = 0; t < theta.size(); ++t) parts.push_back(theta.label(t) + "=" + (*prior)[t].str());
    out << "prior: " << join(parts, ",") << '\n';
  }
  out << "conflict: " << conflict.str() << " (" << conflict.decimal() << ")\n";
  out << "precise: " << (is_precise(m) ? "yes" : "no") << "\n\n";

  Table focal{{"focal set", "mass", "decimal"}};
  for (const auto& [s, w] : m.focal_sets()) focal.push_back({s.str(), w.str(), w.decimal()});
  print_table(out, focal);
  out << '\n';

  Table rows{{"hypothesis", "sp", "sp decimal", "pl", "pl decimal"}};
  for (const auto& h : hypotheses) {
    const Rational sp = support(m, h);
    const Rational pl = plausibility(m, h);
    rows.push_back({h.str(), sp.str(), sp.decimal(), pl.str(), pl.decimal()});
  }
  print_table(out, rows);
  return kExitOk;
}

int run_table(const std::string& path, std::ostream& out) {
  const FunctionalModel model = load_model(path);
  const DistributionModel dm = distribution_model(model);
  Table rows;
  std::vector<std::string> header{"Pr(x|t)"};
  for (const auto& x : dm.observations().labels()) header.push_back(x);
  rows.push_back(header);
  for (std::size_t t = 0; t < dm.theta().size(); ++t) {
    std::vector<std::string> row{dm.theta().label(t)};
    for (std::size_t x = 0; x < dm.observations().size(); ++x) row.push_back(dm.probability(t, x).str());
    rows.push_back(row);
  }
  print_table(out, rows);
  return kExitOk;
}

int run_posterior(const std::string& path, const std::string& prior_text,
                  const std::vector<std::string>& observations, std::ostream& out) {
  const FunctionalModel model = load_model(path);
  const auto xs = parse_observations(model, observations);
  const Distribution prior = parse_prior(model.theta(), prior_text);
  const BayesConsistencyReport report = check_bayes_consistency(model, prior, xs);

  Table rows{{"value", "hint", "hint decimal", "bayes", "bayes decimal"}};
  const Frame& theta = model.theta();
  for (std::size_t t = 0; t < theta.size(); ++t) {
    const Rational sp = support(report.hint_result, theta.singleton(t));
    const Rational& post = report.posterior[t];
    rows.push_back({theta.label(t), sp.str(), sp.decimal(), post.str(), post.decimal()});
  }
  print_table(out, rows);
  out << "verdict: " << (report.agree ? "AGREE" : "DISAGREE") << '\n';
  if (report.uniform_agree) {
    out << "without prior the hint is precise; uniform-prior posterior: "
        << (*report.uniform_agree ? "AGREE" : "DISAGREE") << '\n';
  }
  return report.passed() ? kExitOk : kExitMismatch;
}

int run_check(const std::string& path, const std::vector<std::string>& observations,
              std::ostream& out) {
  const FunctionalModel model = load_model(path);
  const auto xs = parse_observations(model, observations);
  const OracleReport report = oracle_check(model, xs);
  out << (report.pass ? "PASS" : "FAIL") << ": " << report.detail << '\n';
  return report.pass ? kExitOk : kExitMismatch;
}

int run_builtin(const std::string& name, const std::vector<std::string>& params, std::ostream& out) {
  const auto which = parse_builtin_name(name);
  if (!which) throw UsageError("unknown built-in '" + name + "'; expected one of " + join(builtin_names(), ", "));
  BuiltinSpec spec{*which, {}};
  for (const auto& p : params) {
    const auto [key, value] = key_value(p);
    spec.parameters[key] = parse_argument_rational(value);
  }
  out << serialize_model(build(spec));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Support and plausibility in generalized functional models", "gfm"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Support and plausibility after observations");
  eval_cmd->add_option("model", eval.model_path, "Model file")->required();
  eval_cmd->add_option("--observe", eval.observations, "Observed value (repeatable)")->allow_extra_args(false);
  eval_cmd->add_option("--hypothesis", eval.hypotheses, "Hypothesis a+b or ~a (repeatable)")->allow_extra_args(false);
  eval_cmd->add_option("--prior", eval.prior, "Prior as label=p,...");
  eval_cmd->add_option("--format", eval.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  std::string table_path;
  auto* table_cmd = app.add_subcommand("table", "Induced conditional table Pr(x | t)");
  table_cmd->add_option("model", table_path, "Model file")->required();

  std::string posterior_path;
  std::string posterior_prior;
  std::vector<std::string> posterior_obs;
  auto* posterior_cmd = app.add_subcommand("posterior", "Prior-combined hint against the Bayes posterior");
  posterior_cmd->add_option("model", posterior_path, "Model file")->required();
  posterior_cmd->add_option("--prior", posterior_prior, "Prior as label=p,...")->required();
  posterior_cmd->add_option("--observe", posterior_obs, "Observed value (repeatable)")->allow_extra_args(false);

  std::string check_path;
  std::vector<std::string> check_obs;
  auto* check_cmd = app.add_subcommand("check", "Joint-enumeration oracle against incremental combination");
  check_cmd->add_option("model", check_path, "Model file")->required();
  check_cmd->add_option("--observe", check_obs, "Observed value (repeatable)")->allow_extra_args(false);

  std::string builtin_name;
  std::vector<std::string> builtin_params;
  auto* builtin_cmd = app.add_subcommand("builtin", "Print a built-in model file");
  builtin_cmd->add_option("name", builtin_name, join(builtin_names(), ", "))->required();
  builtin_cmd->add_option("--param", builtin_params, "Parameter k=v (repeatable)")->allow_extra_args(false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval, out);
    if (table_cmd->parsed()) return run_table(table_path, out);
    if (posterior_cmd->parsed()) return run_posterior(posterior_path, posterior_prior, posterior_obs, out);
    if (check_cmd->parsed()) return run_check(check_path, check_obs, out);
    if (builtin_cmd->parsed()) return run_builtin(builtin_name, builtin_params, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const EnumerationLimit& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& ex) {
    err << "invalid model: " << ex.what() << '\n';
    return kExitInvalidModel;
  } catch (const TotalConflict& ex) {
    err << "total conflict: " << ex.what() << '\n';
    return kExitNoAdmissibleOutcome;
  } catch (const ImpossibleObservation& ex) {
    err << "impossible observation: " << ex.what() << '\n';
    return kExitNoAdmissibleOutcome;
  } catch (const ZeroEvidence& ex) {
    err << "zero evidence: " << ex.what() << '\n';
    return kExitNoAdmissibleOutcome;
  }
  return kExitUsage;
}

}  // namespace gfm

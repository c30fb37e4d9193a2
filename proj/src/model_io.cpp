#include "gfm/model_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include <yaml-cpp/yaml.h>

namespace gfm {

std::string_view to_string(ModelErrorCode code) {
  switch (code) {
    case ModelErrorCode::syntax: return "Syntax";
    case ModelErrorCode::missing_field: return "MissingField";
    case ModelErrorCode::unexpected_field: return "UnexpectedField";
    case ModelErrorCode::invalid_label: return "InvalidLabel";
    case ModelErrorCode::duplicate_label: return "DuplicateLabel";
    case ModelErrorCode::frame_too_large: return "FrameTooLarge";
    case ModelErrorCode::bad_probability: return "BadProbability";
    case ModelErrorCode::sum_violation: return "SumViolation";
    case ModelErrorCode::unknown_label: return "UnknownLabel";
    case ModelErrorCode::incomplete_function: return "IncompleteFunction";
    case ModelErrorCode::duplicate_function_entry: return "DuplicateFunctionEntry";
  }
  return "Unknown";
}

namespace {

std::string located(const std::string& message, int line, int column) {
  if (line <= 0) return message;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

[[noreturn]] void fail(ModelErrorCode code, const std::string& message, const YAML::Node& at) {
  const auto mark = at.Mark();
  const bool known = mark.line >= 0;
  throw ModelError(code, message, known ? mark.line + 1 : 0, known ? mark.column + 1 : 0);
}

YAML::Node field(const YAML::Node& map, const char* key) {
  const YAML::Node n = map[key];
  if (!n) fail(ModelErrorCode::missing_field, std::string("missing field '") + key + "'", map);
  return n;
}

void only_fields(const YAML::Node& map, std::initializer_list<std::string_view> allowed) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(ModelErrorCode::unexpected_field, "unexpected field '" + key + "'", kv.first);
    }
  }
}

std::string scalar(const YAML::Node& n, const char* what) {
  if (!n.IsScalar()) fail(ModelErrorCode::syntax, std::string(what) + " must be a scalar", n);
  return n.Scalar();
}

std::string label_of(const YAML::Node& n) {
  std::string s = scalar(n, "label");
  if (s.empty()) fail(ModelErrorCode::invalid_label, "labels must be non-empty", n);
  return s;
}

Rational probability_of(const YAML::Node& n) {
  const std::string text = scalar(n, "probability");
  Rational p;
  try {
    p = Rational::parse(text);
  } catch (const ValidationError&) {
    fail(ModelErrorCode::bad_probability, "'" + text + "' is not a rational number", n);
  }
  if (p.sign() < 0) fail(ModelErrorCode::bad_probability, "negative probability " + text, n);
  return p;
}

std::vector<std::string> label_list(const YAML::Node& n, const char* what) {
  if (!n.IsSequence()) fail(ModelErrorCode::syntax, std::string(what) + " must be a list", n);
  if (n.size() == 0) fail(ModelErrorCode::missing_field, std::string(what) + " must not be empty", n);
  if (n.size() > Frame::kMaxSize) {
    fail(ModelErrorCode::frame_too_large,
         std::string(what) + " has more than " + std::to_string(Frame::kMaxSize) + " labels", n);
  }
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& item : n) {
    std::string l = label_of(item);
    if (!seen.insert(l).second) fail(ModelErrorCode::duplicate_label, "duplicate label '" + l + "'", item);
    out.push_back(std::move(l));
  }
  return out;
}

void require_unit_sum(const Rational& total, const YAML::Node& at) {
  if (total != Rational(1)) {
    fail(ModelErrorCode::sum_violation, "probabilities sum to " + total.str() + ", not 1", at);
  }
}

Distribution parse_flat_omega(const YAML::Node& omega) {
  std::vector<std::string> labels;
  std::vector<Rational> probabilities;
  std::unordered_set<std::string> seen;
  Rational total;
  if (omega.size() == 0) fail(ModelErrorCode::missing_field, "omega must not be empty", omega);
  if (omega.size() > Frame::kMaxSize) {
    fail(ModelErrorCode::frame_too_large, "omega has more than " + std::to_string(Frame::kMaxSize) + " elements", omega);
  }
  for (const auto& entry : omega) {
    if (!entry.IsMap()) fail(ModelErrorCode::syntax, "omega entries must be {label, p} maps", entry);
    only_fields(entry, {"label", "p"});
    std::string l = label_of(field(entry, "label"));
    if (!seen.insert(l).second) fail(ModelErrorCode::duplicate_label, "duplicate label '" + l + "'", entry);
    Rational p = probability_of(field(entry, "p"));
    total += p;
    labels.push_back(std::move(l));
    probabilities.push_back(std::move(p));
  }
  require_unit_sum(total, omega);
  return Distribution(Frame(std::move(labels), FrameRole::source), std::move(probabilities));
}

Distribution parse_product_omega(const YAML::Node& omega) {
  only_fields(omega, {"factors"});
  const YAML::Node factors = field(omega, "factors");
  if (!factors.IsSequence() || factors.size() == 0) {
    fail(ModelErrorCode::syntax, "factors must be a non-empty list", factors);
  }
  std::vector<std::string> labels{""};
  std::vector<Rational> probabilities{Rational(1)};
  for (const auto& factor : factors) {
    if (!factor.IsMap()) fail(ModelErrorCode::syntax, "factor must be a {labels, probabilities} map", factor);
    only_fields(factor, {"labels", "probabilities"});
    const auto names = label_list(field(factor, "labels"), "factor labels");
    const YAML::Node probs = field(factor, "probabilities");
    if (!probs.IsSequence() || probs.size() != names.size()) {
      fail(ModelErrorCode::syntax, "factor needs one probability per label", probs);
    }
    std::vector<Rational> ps;
    Rational total;
    for (const auto& p : probs) {
      ps.push_back(probability_of(p));
      total += ps.back();
    }
    require_unit_sum(total, probs);
    if (labels.size() * names.size() > Frame::kMaxSize) {
      fail(ModelErrorCode::frame_too_large,
           "product source space has more than " + std::to_string(Frame::kMaxSize) + " elements", factor);
    }
    std::vector<std::string> next_labels;
    std::vector<Rational> next_probabilities;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = 0; j < names.size(); ++j) {
        next_labels.push_back(labels[i] + names[j]);
        next_probabilities.push_back(probabilities[i] * ps[j]);
      }
    }
    labels = std::move(next_labels);
    probabilities = std::move(next_probabilities);
  }
  std::set<std::string> unique(labels.begin(), labels.end());
  if (unique.size() != labels.size()) {
    fail(ModelErrorCode::duplicate_label, "product labels collide after concatenation", omega);
  }
  return Distribution(Frame(std::move(labels), FrameRole::source), std::move(probabilities));
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ModelError::ModelError(ModelErrorCode code, const std::string& message, int line, int column)
    : ValidationError(std::string(to_string(code)) + ": " + located(message, line, column)),
      code_(code),
      line_(line),
      column_(column) {}

namespace {

FunctionalModel parse_document(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& ex) {
    throw ModelError(ModelErrorCode::syntax, ex.msg, ex.mark.line + 1, ex.mark.column + 1);
  }
  if (!root.IsMap()) fail(ModelErrorCode::syntax, "model document must be a map", root);
  only_fields(root, {"theta", "x", "omega", "f"});

  const Frame theta(label_list(field(root, "theta"), "theta"), FrameRole::parameter);
  const Frame x(label_list(field(root, "x"), "x"), FrameRole::observation);
  const YAML::Node omega_node = field(root, "omega");
  if (!omega_node.IsSequence() && !omega_node.IsMap()) {
    fail(ModelErrorCode::syntax, "omega must be a list or a factors map", omega_node);
  }
  Distribution source =
      omega_node.IsSequence() ? parse_flat_omega(omega_node) : parse_product_omega(omega_node);
  const Frame& omega = source.frame();

  const YAML::Node f = field(root, "f");
  if (!f.IsSequence()) fail(ModelErrorCode::syntax, "f must be a list of {t, o, x} entries", f);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(theta.size() * omega.size(), kUnset);
  for (const auto& entry : f) {
    if (!entry.IsMap()) fail(ModelErrorCode::syntax, "f entries must be {t, o, x} maps", entry);
    only_fields(entry, {"t", "o", "x"});
    auto resolve = [&](const Frame& frame, const char* key) {
      const YAML::Node n = field(entry, key);
      const std::string l = scalar(n, key);
      const auto i = frame.find(l);
      if (!i) fail(ModelErrorCode::unknown_label, std::string("unknown ") + key + " label '" + l + "'", n);
      return *i;
    };
    const std::size_t t = resolve(theta, "t");
    const std::size_t o = resolve(omega, "o");
    const std::size_t xi = resolve(x, "x");
    auto& slot = table[t * omega.size() + o];
    if (slot != kUnset) {
      fail(ModelErrorCode::duplicate_function_entry,
           "f(" + theta.label(t) + ", " + omega.label(o) + ") is defined twice", entry);
    }
    slot = xi;
  }
  for (std::size_t t = 0; t < theta.size(); ++t) {
    for (std::size_t o = 0; o < omega.size(); ++o) {
      if (table[t * omega.size() + o] == kUnset) {
        fail(ModelErrorCode::incomplete_function,
             "f(" + theta.label(t) + ", " + omega.label(o) + ") is not defined", f);
      }
    }
  }
  return FunctionalModel(theta, std::move(source), x, std::move(table));
}

}  // namespace

FunctionalModel parse_model(std::string_view text) {
  try {
    return parse_document(text);
  } catch (const YAML::Exception& ex) {
    throw ModelError(ModelErrorCode::syntax, ex.msg, ex.mark.line >= 0 ? ex.mark.line + 1 : 0,
                     ex.mark.line >= 0 ? ex.mark.column + 1 : 0);
  }
}

std::string serialize_model(const FunctionalModel& model) {
  std::ostringstream os;
  auto list = [&](const Frame& frame) {
    os << "[";
    for (std::size_t i = 0; i < frame.size(); ++i) os << (i ? ", " : "") << quoted(frame.label(i));
    os << "]\n";
  };
  os << "theta: ";
  list(model.theta());
  os << "x: ";
  list(model.observations());
  os << "omega:\n";
  for (std::size_t o = 0; o < model.omega().size(); ++o) {
    os << "  - {label: " << quoted(model.omega().label(o)) << ", p: \"" << model.source()[o].str()
       << "\"}\n";
  }
  os << "f:\n";
  for (std::size_t t = 0; t < model.theta().size(); ++t) {
    for (std::size_t o = 0; o < model.omega().size(); ++o) {
      os << "  - {t: " << quoted(model.theta().label(t)) << ", o: " << quoted(model.omega().label(o))
         << ", x: " << quoted(model.observations().label(model.outcome(t, o))) << "}\n";
    }
  }
  return os.str();
}

}  // namespace gfm

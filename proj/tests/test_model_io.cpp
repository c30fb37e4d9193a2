#include <gtest/gtest.h>

#include "gfm/builtin_models.hpp"
#include "gfm/model_io.hpp"

using namespace gfm;

namespace {

const char* kPolicyOne = R"(theta: [t1, t2]
x: [H, T]
omega:
  - {label: o1, p: 0.5}
  - {label: o2, p: 1/2}
f:
  - {t: t1, o: o1, x: H}
  - {t: t1, o: o2, x: T}
  - {t: t2, o: o1, x: H}
  - {t: t2, o: o2, x: H}
)";

ModelErrorCode code_of(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ModelError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ModelErrorCode::syntax;
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST(ParseModel, HandWrittenPolicyOne) {
  EXPECT_EQ(parse_model(kPolicyOne), build({BuiltinName::policy1, {}}));
}

TEST(ParseModel, ProductSource) {
  const std::string text = R"(theta: [t1, t2]
x: [H, T]
omega:
  factors:
    - {labels: [o1, o2], probabilities: ["3/10", 0.7]}
    - {labels: ["o1'", "o2'"], probabilities: [0.7, 0.3]}
f:
  - {t: t1, o: "o1o1'", x: H}
  - {t: t1, o: "o1o2'", x: H}
  - {t: t1, o: "o2o1'", x: T}
  - {t: t1, o: "o2o2'", x: T}
  - {t: t2, o: "o1o1'", x: H}
  - {t: t2, o: "o1o2'", x: T}
  - {t: t2, o: "o2o1'", x: H}
  - {t: t2, o: "o2o2'", x: T}
)";
  EXPECT_EQ(parse_model(text), build({BuiltinName::policy2, {{"p1", Rational(3, 10)}, {"p2", Rational(7, 10)}}}));
}

TEST(ParseModel, ValidationCodes) {
  EXPECT_EQ(code_of("theta: [t1, t2\n"), ModelErrorCode::syntax);
  EXPECT_EQ(code_of("- just a list\n"), ModelErrorCode::syntax);
  EXPECT_EQ(code_of(replace(kPolicyOne, "x: [H, T]\n", "")), ModelErrorCode::missing_field);
  EXPECT_EQ(code_of(std::string(kPolicyOne) + "extra: 1\n"), ModelErrorCode::unexpected_field);
  EXPECT_EQ(code_of(replace(kPolicyOne, "[t1, t2]", "[t1, t1]")), ModelErrorCode::duplicate_label);
  EXPECT_EQ(code_of(replace(kPolicyOne, "[t1, t2]", "[t1, \"\"]")), ModelErrorCode::invalid_label);
  EXPECT_EQ(code_of(replace(kPolicyOne, "p: 0.5", "p: 0.6")), ModelErrorCode::sum_violation);
  EXPECT_EQ(code_of(replace(replace(kPolicyOne, "p: 0.5", "p: 0.6"), "p: 1/2", "p: 0.3")),
            ModelErrorCode::sum_violation);
  EXPECT_EQ(code_of(replace(kPolicyOne, "p: 0.5", "p: half")), ModelErrorCode::bad_probability);
  EXPECT_EQ(code_of(replace(kPolicyOne, "p: 0.5", "p: -0.5")), ModelErrorCode::bad_probability);
  EXPECT_EQ(code_of(replace(kPolicyOne, "  - {t: t2, o: o2, x: H}\n", "")), ModelErrorCode::incomplete_function);
  EXPECT_EQ(code_of(replace(kPolicyOne, "{t: t2, o: o2, x: H}", "{t: t2, o: o1, x: T}")),
            ModelErrorCode::duplicate_function_entry);
  EXPECT_EQ(code_of(replace(kPolicyOne, "{t: t2, o: o2, x: H}", "{t: t3, o: o2, x: H}")),
            ModelErrorCode::unknown_label);
  EXPECT_EQ(code_of(replace(kPolicyOne, "{t: t2, o: o2, x: H}", "{t: t2, o: o2, x: Z}")),
            ModelErrorCode::unknown_label);
  std::string big = "[";
  for (int i = 0; i < 21; ++i) big += (i ? ", e" : "e") + std::to_string(i);
  EXPECT_EQ(code_of(replace(kPolicyOne, "[t1, t2]", big + "]")), ModelErrorCode::frame_too_large);
}

TEST(ParseModel, ReportsPositions) {
  try {
    parse_model(replace(kPolicyOne, "{t: t2, o: o2, x: H}", "{t: t2, o: o9, x: H}"));
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.line(), 10);
    EXPECT_GT(e.column(), 0);
    EXPECT_NE(std::string(e.what()).find("line 10"), std::string::npos) << e.what();
  }
}

TEST(SerializeModel, CanonicalText) {
  const std::string text = serialize_model(build({BuiltinName::pregnancy, {{"p", Rational(9, 10)}}}));
  EXPECT_NE(text.find("{label: \"+1\", p: \"9/10\"}"), std::string::npos) << text;
  EXPECT_NE(text.find("{label: \"-1\", p: \"1/10\"}"), std::string::npos) << text;

  const std::string product = serialize_model(build({BuiltinName::policy2, {{"p1", Rational(3, 10)}, {"p2", Rational(7, 10)}}}));
  EXPECT_NE(product.find("{label: \"o2o1'\", p: \"49/100\"}"), std::string::npos) << product;
}

TEST(SerializeModel, RoundTripsEveryBuiltin) {
  for (const auto& name : builtin_names()) {
    const BuiltinName which = *parse_builtin_name(name);
    BuiltinSpec spec{which, {}};
    for (const auto& key : required_parameters(which)) spec.parameters[key] = Rational(3, 10);
    const FunctionalModel model = build(spec);
    const std::string text = serialize_model(model);
    EXPECT_EQ(parse_model(text), model) << name;
    EXPECT_EQ(serialize_model(parse_model(text)), text) << name;
  }
}

TEST(SerializeModel, RoundTripsAwkwardLabels) {
  const Frame theta({"a \"quoted\" value", "back\\slash"}, FrameRole::parameter);
  const Frame x({"#hash", "- dash"}, FrameRole::observation);
  const Distribution source(Frame({"[o]", "{p}", ":q"}, FrameRole::source), {Rational(1, 7), Rational(2, 7), Rational(4, 7)});
  const FunctionalModel model(theta, source, x, {0, 1, 0, 1, 1, 0});
  EXPECT_EQ(parse_model(serialize_model(model)), model);
}

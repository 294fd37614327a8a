#include "gline/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace gline {

Json trace_to_json(const DerivationTrace& trace) {
  Json steps = Json::array();
  for (const TraceStep& s : trace.steps) {
    steps.push_back(Json{{"rule", s.rule},
                         {"premises", s.premises},
                         {"conclusion", s.conclusion}});
  }
  return Json{{"schema", 1},
              {"steps", steps},
              {"closed", trace.closed},
              {"lemma_applications", trace.lemma_applications},
              {"final_fact", trace.final_fact.str()}};
}

DerivationTrace trace_from_json(const Json& j) {
  DerivationTrace tr;
  for (const Json& s : j.at("steps")) {
    TraceStep step;
    step.rule = s.at("rule").get<std::string>();
    for (const Json& p : s.at("premises"))
      step.premises.push_back(p.get<std::string>());
    step.conclusion = s.at("conclusion").get<std::string>();
    tr.steps.push_back(std::move(step));
  }
  tr.closed = j.value("closed", false);
  tr.lemma_applications = j.value("lemma_applications", 0);
  if (j.contains("final_fact"))
    tr.final_fact = LLChainFact::parse(j["final_fact"].get<std::string>());
  return tr;
}

namespace {

Json parse_json_text(const std::string& text) {
  return Json::parse(text);  // throws nlohmann parse_error on bad input
}

}  // namespace

IntMat2 parse_int_mat2(const std::string& text) {
  Json j = parse_json_text(text);
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      j[1].size() != 2)
    throw std::invalid_argument("matrix must look like [[a,c],[b,d]]");
  auto cell = [&](int r, int c) -> BigInt {
    const Json& v = j[r][c];
    if (v.is_number_integer()) return BigInt(v.get<long long>());
    if (v.is_string()) return BigInt(v.get<std::string>());
    throw std::invalid_argument("matrix entries must be integers");
  };
  return IntMat2{cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1)};
}

PInvMat2 parse_pinv_mat2(const std::string& text, int p) {
  Json j = parse_json_text(text);
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      j[1].size() != 2)
    throw std::invalid_argument("matrix must look like [[a,c],[b,d]]");
  auto cell = [&](int r, int c) -> PInvScalar {
    const Json& v = j[r][c];
    if (v.is_number_integer()) return PInvScalar(p, v.get<long long>());
    if (v.is_string()) return PInvScalar::parse(p, v.get<std::string>());
    throw std::invalid_argument("matrix entries must be integers or \"n/p^k\"");
  };
  return PInvMat2(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1));
}

Json int_mat2_to_json(const IntMat2& m) {
  auto cell = [](const BigInt& v) -> Json {
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max())
      return static_cast<long long>(v);
    return v.str();
  };
  return Json::array({Json::array({cell(m.a), cell(m.c)}),
                      Json::array({cell(m.b), cell(m.d)})});
}

Json pinv_mat2_to_json(const PInvMat2& m) {
  return Json::array({Json::array({m.a.str(), m.c.str()}),
                      Json::array({m.b.str(), m.d.str()})});
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    return Rational(boost::multiprecision::cpp_int(text));
  return Rational(boost::multiprecision::cpp_int(text.substr(0, slash)),
                  boost::multiprecision::cpp_int(text.substr(slash + 1)));
}

std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

PLCircleLift pl_from_json(const Json& j) {
  if (j.contains("rot"))
    return PLCircleLift::rotation(parse_rational(j["rot"].get<std::string>()));
  std::vector<Rational> bs, vs;
  for (const Json& b : j.at("breakpoints"))
    bs.push_back(parse_rational(b.get<std::string>()));
  for (const Json& v : j.at("values"))
    vs.push_back(parse_rational(v.get<std::string>()));
  return PLCircleLift(std::move(bs), std::move(vs));
}

Json pl_to_json(const PLCircleLift& f) {
  Json bs = Json::array(), vs = Json::array();
  for (const Rational& b : f.breakpoints()) bs.push_back(rational_str(b));
  for (const Rational& v : f.values()) vs.push_back(rational_str(v));
  return Json{{"breakpoints", bs}, {"values", vs}};
}

Json euclid_to_json(const EuclidReduction& red) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < red.ops.size(); ++i) {
    steps.push_back(Json{{"step", i + 1},
                         {"op",
                          {{"kind", "add_row_multiple"},
                           {"src", red.ops[i].src + 1},
                           {"dst", red.ops[i].dst + 1},
                           {"coeff", red.ops[i].coeff.str()}}},
                         {"intermediate", int_mat2_to_json(red.intermediates[i])}});
  }
  return steps;
}

Json bounded_to_json(const BoundedReduction& red) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < red.ops.size(); ++i) {
    steps.push_back(Json{{"step", i + 1},
                         {"op",
                          {{"kind", "add_row_multiple"},
                           {"src", red.ops[i].src + 1},
                           {"dst", red.ops[i].dst + 1},
                           {"coeff", red.ops[i].coeff.str()}}},
                         {"intermediate", pinv_mat2_to_json(red.intermediates[i])}});
  }
  Json out{{"found", red.found},
           {"degenerate", red.degenerate},
           {"ops", steps}};
  if (red.found && !red.degenerate && !red.ops.empty()) {
    out["artin_prime"] = red.artin_prime.str();
    out["discrete_log"] = red.discrete_log;
  }
  return out;
}

Json cone_result_to_json(const GroupBackend& backend, const ConeSearchResult& res) {
  Json out{{"schema", 1}};
  switch (res.verdict) {
    case ConeSearchResult::Verdict::OrderableUpToR:
      out["verdict"] = "orderable_up_to_radius";
      break;
    case ConeSearchResult::Verdict::NotLeftOrderable:
      out["verdict"] = "not_left_orderable";
      break;
    case ConeSearchResult::Verdict::Inconclusive:
      out["verdict"] = "inconclusive";
      break;
  }
  out["ball_size"] = res.ball_size;
  out["branches_explored"] = res.branches_explored;
  if (res.verdict == ConeSearchResult::Verdict::OrderableUpToR) {
    Json cone = Json::array();
    for (const GroupElement& g : res.cone) cone.push_back(backend.describe(g));
    out["cone"] = cone;
  }
  if (res.verdict == ConeSearchResult::Verdict::NotLeftOrderable) {
    Json refs = Json::array();
    for (const RefutedBranch& rb : res.refutations) {
      Json assignment = Json::array();
      for (const auto& [k, s] : rb.assignment)
        assignment.push_back(Json{{"element", k}, {"sign", s}});
      Json deriv = Json::array();
      for (const ConeDerivationStep& st : rb.derivation)
        deriv.push_back(Json{{"x", st.x},
                             {"y", st.y},
                             {"product", st.product.empty() ? "e" : st.product}});
      refs.push_back(Json{{"assignment", assignment},
                          {"derivation", deriv},
                          {"clash", rb.clash}});
    }
    out["refutations"] = refs;
  }
  return out;
}

}  // namespace gline

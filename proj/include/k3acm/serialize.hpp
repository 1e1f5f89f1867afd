#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "k3acm/classifier.hpp"

// JSON schema for every value the CLI emits. Integers that fit in 64 bits are
// JSON numbers, larger ones are decimal strings; readers accept both.

namespace k3acm {

// Insertion-ordered, so table columns follow the schema order.
using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

inline json integer_to_json(const Integer& v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return v.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw UsageError("expected an integer, got " + j.dump());
}

inline json integers_to_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

inline std::vector<Integer> integers_from_json(const json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

// --- lattice values --------------------------------------------------------

inline void to_json(json& j, const DivisorClass& d) {
  j = json{{"x", integer_to_json(d.x)}, {"y", integer_to_json(d.y)}, {"label", to_string(d)}};
}

inline void from_json(const json& j, DivisorClass& d) {
  if (j.is_string()) {
    d = parse_divisor(j.get<std::string>());
    return;
  }
  d = DivisorClass{integer_from_json(j.at("x")), integer_from_json(j.at("y"))};
}

inline void to_json(json& j, const Rank2Invariants& inv) { j = json{{"c1", inv.c1}, {"c2", integer_to_json(inv.c2)}}; }

inline void from_json(const json& j, Rank2Invariants& inv) {
  inv = Rank2Invariants{j.at("c1").get<DivisorClass>(), integer_from_json(j.at("c2"))};
}

inline void to_json(json& j, const CohomologyTriple& t) {
  j = json{{"h0", integer_to_json(t.h0)}, {"h1", integer_to_json(t.h1)}, {"h2", integer_to_json(t.h2)}};
}

inline void from_json(const json& j, CohomologyTriple& t) {
  t = CohomologyTriple{integer_from_json(j.at("h0")), integer_from_json(j.at("h1")), integer_from_json(j.at("h2"))};
}

inline json lattice_to_json(const GramLattice& l) {
  return json{{"g11", integer_to_json(l.g11())},
              {"g12", integer_to_json(l.g12())},
              {"g22", integer_to_json(l.g22())},
              {"profile", l.is_default() ? "general-determinantal-quartic" : "custom"}};
}

inline GramLattice lattice_from_json(const json& j) {
  return GramLattice(integer_from_json(j.at("g11")), integer_from_json(j.at("g12")), integer_from_json(j.at("g22")));
}

// --- facts and traces ------------------------------------------------------

namespace detail {

struct FactWriter {
  json operator()(const LineCohomologyFact& f) const {
    return {{"kind", "line-cohomology"}, {"divisor", f.divisor}, {"value", f.value}};
  }
  json operator()(const ChiLineFact& f) const {
    return {{"kind", "chi-line"}, {"divisor", f.divisor}, {"value", integer_to_json(f.value)}};
  }
  json operator()(const ChiRank2Fact& f) const {
    return {{"kind", "chi-rank2"}, {"invariants", f.invariants}, {"value", integer_to_json(f.value)}};
  }
  json operator()(const IntersectionFact& f) const {
    return {{"kind", "intersection"}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"value", integer_to_json(f.value)}};
  }
  json operator()(const EffectivityFact& f) const {
    return {{"kind", "effectivity"}, {"divisor", f.divisor}, {"value", to_string(f.value)}};
  }
  json operator()(const TwistFact& f) const {
    return {{"kind", "twist"},
            {"input", f.input},
            {"twist", f.twist},
            {"dualize", f.dualize == Dualize::yes},
            {"value", f.value}};
  }
  json operator()(const MacaulayFact& f) const {
    return {{"kind", "macaulay"}, {"value", integer_to_json(f.value)}, {"degree", f.degree}, {"bound", integer_to_json(f.bound)}};
  }
  json operator()(const PlaneCountFact& f) const {
    return {{"kind", "plane-count"},
            {"scheme_degree", integer_to_json(f.scheme_degree)},
            {"max_planes", integer_to_json(f.max_planes)}};
  }
};

}  // namespace detail

inline json fact_to_json(const Fact& f) { return std::visit(detail::FactWriter{}, f); }

inline Fact fact_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "line-cohomology")
    return LineCohomologyFact{j.at("divisor").get<DivisorClass>(), j.at("value").get<CohomologyTriple>()};
  if (kind == "chi-line") return ChiLineFact{j.at("divisor").get<DivisorClass>(), integer_from_json(j.at("value"))};
  if (kind == "chi-rank2")
    return ChiRank2Fact{j.at("invariants").get<Rank2Invariants>(), integer_from_json(j.at("value"))};
  if (kind == "intersection")
    return IntersectionFact{j.at("lhs").get<DivisorClass>(), j.at("rhs").get<DivisorClass>(),
                            integer_from_json(j.at("value"))};
  if (kind == "effectivity")
    return EffectivityFact{j.at("divisor").get<DivisorClass>(), effectivity_from_string(j.at("value").get<std::string>())};
  if (kind == "twist")
    return TwistFact{j.at("input").get<Rank2Invariants>(), j.at("twist").get<DivisorClass>(),
                     j.at("dualize").get<bool>() ? Dualize::yes : Dualize::no, j.at("value").get<Rank2Invariants>()};
  if (kind == "macaulay")
    return MacaulayFact{integer_from_json(j.at("value")), j.at("degree").get<unsigned>(), integer_from_json(j.at("bound"))};
  if (kind == "plane-count")
    return PlaneCountFact{integer_from_json(j.at("scheme_degree")), integer_from_json(j.at("max_planes"))};
  throw UsageError("unknown fact kind '" + kind + "'");
}

inline void to_json(json& j, const DeductionStep& s) {
  json facts = json::array();
  for (const auto& f : s.facts) facts.push_back(fact_to_json(f));
  j = json{{"rule", s.rule}, {"statement", s.statement}, {"facts", facts}, {"citation", s.citation}};
}

inline void from_json(const json& j, DeductionStep& s) {
  s.rule = j.at("rule").get<std::string>();
  s.statement = j.value("statement", "");
  s.citation = j.value("citation", "");
  s.facts.clear();
  for (const auto& f : j.at("facts")) s.facts.push_back(fact_from_json(f));
}

// --- tables and verdicts ---------------------------------------------------

inline void to_json(json& j, const CandidateList& l) {
  j = json{{"branch", to_string(l.branch)}, {"box", l.box}, {"classes", l.classes}};
}

inline void to_json(json& j, const TableARow& r) {
  j = json{{"c1", r.c1},
           {"D", r.divisor},
           {"residual", r.residual},
           {"residual_effective", r.residual_effective},
           {"published_residual", r.published_residual ? json(*r.published_residual) : json(nullptr)}};
}

inline void from_json(const json& j, TableARow& r) {
  r.c1 = j.at("c1").get<DivisorClass>();
  r.divisor = j.at("D").get<DivisorClass>();
  r.residual = j.at("residual").get<DivisorClass>();
  r.residual_effective = j.at("residual_effective").get<bool>();
  r.published_residual.reset();
  if (j.contains("published_residual") && !j.at("published_residual").is_null())
    r.published_residual = j.at("published_residual").get<DivisorClass>();
}

inline void to_json(json& j, const SectionSplit& s) {
  j = json{{"c1", s.c1},
           {"D", s.divisorial},
           {"e_degree", integer_to_json(s.e_degree)},
           {"divisorial_only", s.divisorial_only}};
}

inline void from_json(const json& j, SectionSplit& s) {
  s = SectionSplit{j.at("c1").get<DivisorClass>(), j.at("D").get<DivisorClass>(), integer_from_json(j.at("e_degree")),
                   j.at("divisorial_only").get<bool>()};
}

inline CandidateBranch branch_from_string(const std::string& s) {
  for (auto b : {CandidateBranch::effective, CandidateBranch::noneffective, CandidateBranch::initialized_acm})
    if (s == to_string(b)) return b;
  throw UsageError("unknown branch '" + s + "'");
}

inline void to_json(json& j, const CandidateVerdict& v) {
  j = json{{"c1", v.c1}, {"branch", to_string(v.branch)}};
  if (v.realized()) {
    const auto& r = v.as_realized();
    j["outcome"] = "realized";
    j["c2_set"] = integers_to_json(r.c2_set);
    j["h0_values"] = integers_to_json(r.h0_values);
    j["zero_locus"] = r.zero_locus;
    j["zero_locus_cases"] = r.zero_locus_cases;
    j["ulrich"] = r.ulrich;
    j["existence_citations"] = r.existence_citations;
    j["tags"] = r.tags;
    j["splits"] = r.splits;
    j["trace"] = r.trace;
  } else {
    const auto& e = v.as_eliminated();
    j["outcome"] = "eliminated";
    j["rule"] = e.rule;
    j["trace"] = e.trace;
  }
}

inline void from_json(const json& j, CandidateVerdict& v) {
  v.c1 = j.at("c1").get<DivisorClass>();
  v.branch = branch_from_string(j.at("branch").get<std::string>());
  const auto outcome = j.at("outcome").get<std::string>();
  if (outcome == "realized") {
    Realized r;
    r.c2_set = integers_from_json(j.at("c2_set"));
    r.h0_values = integers_from_json(j.at("h0_values"));
    r.zero_locus = j.at("zero_locus").get<std::string>();
    r.zero_locus_cases = j.at("zero_locus_cases").get<std::vector<std::string>>();
    r.ulrich = j.at("ulrich").get<bool>();
    r.existence_citations = j.at("existence_citations").get<std::vector<std::string>>();
    r.tags = j.at("tags").get<std::vector<std::string>>();
    r.splits = j.at("splits").get<std::vector<SectionSplit>>();
    r.trace = j.at("trace").get<Trace>();
    v.outcome = std::move(r);
  } else if (outcome == "eliminated") {
    v.outcome = Eliminated{j.at("rule").get<std::string>(), j.at("trace").get<Trace>()};
  } else {
    throw UsageError("unknown outcome '" + outcome + "'");
  }
}

inline void to_json(json& j, const Elimination& e) {
  j = json{{"eliminated", e.eliminated}, {"rule", e.rule}, {"trace", e.trace}};
}

// --- envelope --------------------------------------------------------------

struct ErrorInfo {
  std::string name;
  std::string message;
  bool operator==(const ErrorInfo&) const = default;
};

struct OutputEnvelope {
  int schema_version = kSchemaVersion;
  std::string command;
  GramLattice lattice;
  json payload;
  std::string tool_version = kToolVersion;
  std::vector<std::string> warnings;
  std::optional<ErrorInfo> error;

  bool operator==(const OutputEnvelope& o) const {
    return schema_version == o.schema_version && command == o.command && lattice == o.lattice &&
           payload == o.payload && tool_version == o.tool_version && warnings == o.warnings && error == o.error;
  }
};

inline void to_json(json& j, const OutputEnvelope& e) {
  j = json{{"schema_version", e.schema_version},
           {"command", e.command},
           {"lattice", lattice_to_json(e.lattice)},
           {"payload", e.payload},
           {"tool_version", e.tool_version},
           {"warnings", e.warnings}};
  if (e.error) j["error"] = json{{"name", e.error->name}, {"message", e.error->message}};
}

inline void from_json(const json& j, OutputEnvelope& e) {
  e.schema_version = j.at("schema_version").get<int>();
  e.command = j.at("command").get<std::string>();
  e.lattice = lattice_from_json(j.at("lattice"));
  e.payload = j.at("payload");
  e.tool_version = j.at("tool_version").get<std::string>();
  e.warnings = j.at("warnings").get<std::vector<std::string>>();
  e.error.reset();
  if (j.contains("error"))
    e.error = ErrorInfo{j.at("error").at("name").get<std::string>(), j.at("error").at("message").get<std::string>()};
}

}  // namespace k3acm

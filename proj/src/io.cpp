#include "ptm/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "ptm/error.hpp"

namespace ptm {

using nlohmann::json;

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse, std::string("malformed JSON: ") + e.what());
  }
}

Label label_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw Error(ErrorCode::parse, "expected a label [thread, op], got " + j.dump());
  return {j[0].get<std::string>(), j[1].get<std::string>()};
}

json label_to_json(const Label& l) { return json::array({l.thread, l.op}); }

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw Error(ErrorCode::parse, std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

std::size_t state_from_json(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw Error(ErrorCode::parse, "state ids must be non-negative integers, got " + j.dump());
  return j.get<std::size_t>();
}

}  // namespace

Trace parse_trace(std::istream& in, ConcurrentAlphabet alphabet) {
  std::vector<LabelId> labels;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && is_space(line[i])) ++i;
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      if (j > i) tokens.emplace_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw Error(ErrorCode::parse, "line " + std::to_string(lineno) + ": expected '<thread> <op>', got " +
                                        std::to_string(tokens.size()) + " token(s)");
    try {
      labels.push_back(alphabet.intern({tokens[0], tokens[1]}));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return Trace(std::make_shared<const ConcurrentAlphabet>(std::move(alphabet)), std::move(labels));
}

Trace parse_trace_text(std::string_view text, ConcurrentAlphabet alphabet) {
  std::istringstream in{std::string(text)};
  return parse_trace(in, std::move(alphabet));
}

Trace parse_trace_file(const std::string& path, ConcurrentAlphabet alphabet) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse, "cannot open trace file '" + path + "'");
  try {
    return parse_trace(in, std::move(alphabet));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void write_trace(std::ostream& out, const Trace& trace) {
  for (EventId e = 0; e < trace.size(); ++e) {
    const auto& l = trace.label(e);
    for (const auto* tok : {&l.thread, &l.op})
      if (tok->empty() || tok->find_first_of(" \t\r\n#") != std::string::npos)
        throw Error(ErrorCode::validation, "label token '" + *tok + "' cannot be written to a trace file");
    out << l.thread << ' ' << l.op << '\n';
  }
}

ConcurrentAlphabet parse_alphabet_text(std::string_view text) {
  const json j = parse_json(text);
  const auto mode = member(j, "mode");
  if (!mode.is_string()) throw Error(ErrorCode::parse, "\"mode\" must be a string");
  const auto m = mode.get<std::string>();
  if (m == "thread-partition") {
    std::vector<OpPair> conflicts;
    if (j.contains("conflicts"))
      for (const auto& c : j.at("conflicts")) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
          throw Error(ErrorCode::parse, "a conflict must be [op, op], got " + c.dump());
        conflicts.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
      }
    return ConcurrentAlphabet::thread_partition(conflicts);
  }
  if (m == "explicit-independent" || m == "explicit-dependent") {
    std::vector<LabelPair> pairs;
    for (const auto& p : member(j, "pairs")) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::parse, "a pair must be [label, label], got " + p.dump());
      pairs.emplace_back(label_from_json(p[0]), label_from_json(p[1]));
    }
    auto a = m == "explicit-independent" ? ConcurrentAlphabet::explicit_independent(pairs)
                                         : ConcurrentAlphabet::explicit_dependent(pairs);
    a.validate();
    return a;
  }
  throw Error(ErrorCode::parse, "unknown alphabet mode '" + m + "'");
}

ConcurrentAlphabet parse_alphabet_file(const std::optional<std::string>& path) {
  if (!path || !std::filesystem::exists(*path)) return ConcurrentAlphabet::thread_partition();
  try {
    return parse_alphabet_text(read_file(*path));
  } catch (const Error& e) {
    throw Error(e.code(), *path + ": " + e.what());
  }
}

std::string alphabet_to_json(const ConcurrentAlphabet& a) {
  json j;
  switch (a.mode()) {
    case AlphabetMode::thread_partition: {
      j["mode"] = "thread-partition";
      j["conflicts"] = json::array();
      for (const auto& [x, y] : a.conflicts()) j["conflicts"].push_back({x, y});
      break;
    }
    case AlphabetMode::explicit_independent:
    case AlphabetMode::explicit_dependent: {
      j["mode"] = a.mode() == AlphabetMode::explicit_independent ? "explicit-independent" : "explicit-dependent";
      j["pairs"] = json::array();
      for (const auto& [x, y] : a.pairs()) j["pairs"].push_back(json::array({label_to_json(x), label_to_json(y)}));
      break;
    }
  }
  return j.dump(2) + "\n";
}

namespace {

Disjunct disjunct_from_json(const json& d) {
  if (!d.is_object()) throw Error(ErrorCode::parse, "a disjunct must be an object, got " + d.dump());
  if (d.contains("epsilon")) return EpsilonLang{};
  if (d.contains("empty")) return EmptyLang{};
  Pattern p;
  for (const auto& pos : member(d, "pattern")) {
    PositionSpec spec;
    if (pos.is_array() && !pos.empty() && pos[0].is_string()) {
      spec.push_back(label_from_json(pos));
    } else if (pos.is_array() && !pos.empty()) {
      for (const auto& l : pos) spec.push_back(label_from_json(l));
      std::sort(spec.begin(), spec.end());
      spec.erase(std::unique(spec.begin(), spec.end()), spec.end());
    } else {
      throw Error(ErrorCode::parse, "a pattern position must be a label or a nonempty list of labels");
    }
    p.positions.push_back(std::move(spec));
  }
  return p;
}

Guard guard_from_json(const json& on) {
  if (!on.is_object()) throw Error(ErrorCode::parse, "transition guard must be an object, got " + on.dump());
  if (on.contains("label")) return label_from_json(on.at("label"));
  if (on.contains("any")) return AnyLabel{};
  if (on.contains("oneof")) {
    OneOf g;
    for (const auto& l : on.at("oneof")) g.labels.push_back(label_from_json(l));
    return g;
  }
  throw Error(ErrorCode::parse, "unknown transition guard " + on.dump());
}

Nfa nfa_from_json(const json& j) {
  Nfa nfa;
  nfa.state_count = state_from_json(member(j, "states"));
  for (const auto& s : member(j, "initial")) nfa.initial.push_back(state_from_json(s));
  for (const auto& s : member(j, "accepting")) nfa.accepting.push_back(state_from_json(s));
  for (const auto& t : member(j, "transitions"))
    nfa.transitions.push_back({state_from_json(member(t, "from")), guard_from_json(member(t, "on")),
                               state_from_json(member(t, "to"))});
  nfa.validate();
  return nfa;
}

}  // namespace

Spec parse_spec_text(std::string_view text) {
  const json j = parse_json(text);
  try {
    if (j.is_object() && j.contains("states")) return nfa_from_json(j);
    GeneralizedPattern g;
    if (j.is_object() && j.contains("union")) {
      for (const auto& d : j.at("union")) g.disjuncts.push_back(disjunct_from_json(d));
      if (g.disjuncts.empty()) g.disjuncts.push_back(EmptyLang{});
    } else {
      g.disjuncts.push_back(disjunct_from_json(j));
    }
    return g;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("malformed spec: ") + e.what());
  }
}

Spec parse_spec_file(const std::string& path) {
  try {
    return parse_spec_text(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string pattern_to_json(const GeneralizedPattern& g) {
  json u = json::array();
  for (const auto& d : g.disjuncts) {
    if (std::holds_alternative<EmptyLang>(d)) {
      u.push_back({{"empty", true}});
    } else if (std::holds_alternative<EpsilonLang>(d)) {
      u.push_back({{"epsilon", true}});
    } else {
      json positions = json::array();
      for (const auto& spec : std::get<Pattern>(d).positions) {
        if (spec.size() == 1) {
          positions.push_back(label_to_json(spec.front()));
        } else {
          json alts = json::array();
          for (const auto& l : spec) alts.push_back(label_to_json(l));
          positions.push_back(std::move(alts));
        }
      }
      u.push_back({{"pattern", std::move(positions)}});
    }
  }
  return json{{"union", std::move(u)}}.dump(2) + "\n";
}

std::string nfa_to_json(const Nfa& nfa) {
  json t = json::array();
  for (const auto& tr : nfa.transitions) {
    json on;
    if (const auto* l = std::get_if<Label>(&tr.guard)) {
      on["label"] = label_to_json(*l);
    } else if (const auto* o = std::get_if<OneOf>(&tr.guard)) {
      on["oneof"] = json::array();
      for (const auto& l : o->labels) on["oneof"].push_back(label_to_json(l));
    } else {
      on["any"] = true;
    }
    t.push_back({{"from", tr.from}, {"on", std::move(on)}, {"to", tr.to}});
  }
  json j{{"states", nfa.state_count}, {"initial", nfa.initial}, {"accepting", nfa.accepting}, {"transitions", t}};
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::validation, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace ptm

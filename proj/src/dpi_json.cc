/// @file dpi_json.cc
#include "mbd/dpi_json.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "mbd/error.h"

namespace mbd {

using nlohmann::json;

namespace {

class Reader {
 public:
  explicit Reader(const json& doc) : doc_(doc) {}

  Dpi Read() {
    if (!doc_.is_object()) Fail("", "top level must be an object");
    for (const auto& [key, value] : doc_.items()) {
      static const char* kKeys[] = {"variables", "components", "background",
                                    "positive", "negative",
                                    "explicit_conflicts", "probabilities"};
      if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys))
        Fail(key, "unknown field");
    }
    ReadVariables();
    const json& components = Field("components");
    if (!components.is_array() || components.empty())
      Fail("components", "must be a non-empty array");

    std::vector<std::string> names;
    std::vector<CnfSentence> sentences;
    bool any_cnf = false;
    for (std::size_t i = 0; i < components.size(); ++i) {
      const std::string where = "components[" + std::to_string(i) + "]";
      const json& c = components[i];
      if (!c.is_object() || !c.contains("name") || !c["name"].is_string())
        Fail(where, "needs a string 'name'");
      names.push_back(c["name"].get<std::string>());
      CnfSentence sentence;
      if (c.contains("cnf")) {
        any_cnf = true;
        sentence.clauses = ReadClauses(c["cnf"], where + ".cnf");
      }
      sentences.push_back(std::move(sentence));
    }

    std::optional<std::vector<double>> pr;
    if (doc_.contains("probabilities")) pr = ReadProbabilities(names);

    if (doc_.contains("explicit_conflicts")) {
      if (any_cnf) {
        Fail("explicit_conflicts",
             "cannot be combined with component CNF sentences");
      }
      for (const char* key : {"background", "positive", "negative"}) {
        if (doc_.contains(key) && !doc_[key].empty())
          Fail(key, "not allowed with explicit_conflicts");
      }
      ExplicitConflicts ec;
      const json& list = doc_["explicit_conflicts"];
      if (!list.is_array()) Fail("explicit_conflicts", "must be an array");
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "explicit_conflicts[" + std::to_string(i) + "]";
        if (!list[i].is_array()) Fail(where, "must be an array of names");
        std::vector<ComponentId> ids;
        for (const auto& n : list[i]) {
          if (!n.is_string()) Fail(where, "must be an array of names");
          auto it = std::find(names.begin(), names.end(), n.get<std::string>());
          if (it == names.end())
            Fail(where, "unknown component '" + n.get<std::string>() + "'");
          ids.push_back(static_cast<ComponentId>(it - names.begin()));
        }
        ec.conflicts.emplace_back(std::move(ids));
      }
      return Dpi(std::move(names), std::move(ec), std::move(pr));
    }

    CnfTheory theory;
    theory.variables = variables_;
    theory.component_sentences = std::move(sentences);
    if (doc_.contains("background"))
      theory.background = ReadClauses(doc_["background"], "background");
    if (doc_.contains("positive"))
      theory.positive = ReadClauses(doc_["positive"], "positive");
    if (doc_.contains("negative")) {
      const json& neg = doc_["negative"];
      if (!neg.is_array()) Fail("negative", "must be an array of sentences");
      for (std::size_t i = 0; i < neg.size(); ++i) {
        theory.negative.push_back(
            {ReadClauses(neg[i], "negative[" + std::to_string(i) + "]")});
      }
    }
    return Dpi(std::move(names), std::move(theory), std::move(pr));
  }

 private:
  [[noreturn]] static void Fail(const std::string& where,
                                const std::string& what) {
    throw ParseError(where.empty() ? what : where + ": " + what);
  }

  const json& Field(const char* key) {
    if (!doc_.contains(key)) Fail(key, "missing");
    return doc_[key];
  }

  void ReadVariables() {
    if (!doc_.contains("variables")) return;
    const json& vars = doc_["variables"];
    if (!vars.is_array()) Fail("variables", "must be an array of names");
    for (const auto& v : vars) {
      if (!v.is_string() || v.get<std::string>().empty() ||
          v.get<std::string>()[0] == '-') {
        Fail("variables", "names must be non-empty strings without '-'");
      }
      variables_.push_back(v.get<std::string>());
    }
  }

  Literal ReadLiteral(const json& lit, const std::string& where) {
    if (!lit.is_string()) Fail(where, "literals must be strings");
    std::string text = lit.get<std::string>();
    bool negated = !text.empty() && text[0] == '-';
    if (negated) text.erase(0, 1);
    auto it = std::find(variables_.begin(), variables_.end(), text);
    if (it == variables_.end()) Fail(where, "unknown variable '" + text + "'");
    Literal v = static_cast<Literal>(it - variables_.begin()) + 1;
    return negated ? -v : v;
  }

  std::vector<Clause> ReadClauses(const json& clauses,
                                  const std::string& where) {
    if (!clauses.is_array()) Fail(where, "must be an array of clauses");
    std::vector<Clause> out;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      const std::string at = where + "[" + std::to_string(i) + "]";
      if (!clauses[i].is_array()) Fail(at, "a clause must be an array of literals");
      Clause clause;
      for (const auto& lit : clauses[i]) clause.push_back(ReadLiteral(lit, at));
      out.push_back(std::move(clause));
    }
    return out;
  }

  std::vector<double> ReadProbabilities(const std::vector<std::string>& names) {
    const json& obj = doc_["probabilities"];
    if (!obj.is_object()) Fail("probabilities", "must be an object");
    std::vector<double> pr;
    for (const auto& n : names) {
      if (!obj.contains(n)) Fail("probabilities", "missing component '" + n + "'");
      if (!obj[n].is_number()) Fail("probabilities", "'" + n + "' must be a number");
      pr.push_back(obj[n].get<double>());
    }
    if (obj.size() != names.size())
      Fail("probabilities", "names a component that does not exist");
    for (std::size_t i = 0; i < pr.size(); ++i) {
      if (!(pr[i] > 0 && pr[i] < 1))
        Fail("probabilities", "'" + names[i] + "' must lie in (0,1)");
    }
    return pr;
  }

  const json& doc_;
  std::vector<std::string> variables_;
};

json ClausesToJson(const std::vector<Clause>& clauses,
                   const std::vector<std::string>& variables) {
  json out = json::array();
  for (const auto& clause : clauses) {
    json c = json::array();
    for (Literal lit : clause) {
      const std::string& name = variables.at(std::abs(lit) - 1);
      c.push_back(lit < 0 ? "-" + name : name);
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Byte offset -> 1-based line and column.
std::string Position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

Dpi ParseDpi(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    throw ParseError("syntax error at " +
                     Position(text, e.byte > 0 ? e.byte - 1 : 0) + ": " +
                     e.what());
  }
  return Reader(doc).Read();
}

Dpi LoadDpi(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseDpi(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string SerializeDpi(const Dpi& dpi) {
  json doc;
  json components = json::array();
  if (const auto* theory = std::get_if<CnfTheory>(&dpi.backend())) {
    for (std::size_t i = 0; i < dpi.size(); ++i) {
      components.push_back(
          {{"name", dpi.name(static_cast<ComponentId>(i))},
           {"cnf", ClausesToJson(theory->component_sentences[i].clauses,
                                 theory->variables)}});
    }
    doc["variables"] = theory->variables;
    doc["background"] = ClausesToJson(theory->background, theory->variables);
    doc["positive"] = ClausesToJson(theory->positive, theory->variables);
    json negative = json::array();
    for (const auto& s : theory->negative)
      negative.push_back(ClausesToJson(s.clauses, theory->variables));
    doc["negative"] = std::move(negative);
  } else {
    for (const auto& n : dpi.names()) components.push_back({{"name", n}});
    json conflicts = json::array();
    for (const auto& c : std::get<ExplicitConflicts>(dpi.backend()).conflicts)
      conflicts.push_back(dpi.names_of(c));
    doc["explicit_conflicts"] = std::move(conflicts);
  }
  doc["components"] = std::move(components);
  if (dpi.probabilities()) {
    json pr = json::object();
    for (std::size_t i = 0; i < dpi.size(); ++i)
      pr[dpi.name(static_cast<ComponentId>(i))] = (*dpi.probabilities())[i];
    doc["probabilities"] = std::move(pr);
  }
  return doc.dump(2) + "\n";
}

void SaveDpi(const Dpi& dpi, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << SerializeDpi(dpi);
}

}  // namespace mbd

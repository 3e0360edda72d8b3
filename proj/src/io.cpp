#include "jmult/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace jmult {

namespace {

using nlohmann::json;

std::vector<std::string> splitWhitespace(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string stripComment(const std::string& line) {
  size_t pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

Monomial parseGeneratorTokens(const std::vector<std::string>& tokens,
                              const std::vector<std::string>& vars, int lineNo) {
  std::vector<Exponent> e(vars.size(), 0);
  for (const std::string& tok : tokens) {
    if (tok == "1") continue;
    std::string name = tok;
    Exponent power = 1;
    size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      const std::string num = tok.substr(caret + 1);
      try {
        size_t used = 0;
        power = std::stoll(num, &used);
        if (used != num.size()) throw std::invalid_argument(num);
      } catch (const std::exception&) {
        throw Error(Errc::ParseError,
                    "line " + std::to_string(lineNo) + ": bad exponent '" + num + "'");
      }
      if (power < 0) {
        throw Error(Errc::ParseError,
                    "line " + std::to_string(lineNo) + ": negative exponent in '" + tok + "'");
      }
    }
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(lineNo) + ": unknown variable '" + name + "'");
    }
    e[static_cast<size_t>(it - vars.begin())] += power;
  }
  return Monomial(std::move(e));
}

void collectMinimalizationWarnings(const std::vector<Monomial>& raw, const MonomialIdeal& ideal,
                                   const std::vector<std::string>& vars,
                                   std::vector<std::string>& warnings) {
  const auto& kept = ideal.gens();
  for (const Monomial& g : raw) {
    if (std::find(kept.begin(), kept.end(), g) == kept.end()) {
      warnings.push_back("generator " + g.str(vars) + " is redundant and was dropped");
    }
  }
}

}  // namespace

ParsedIdeal parseIdealText(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  std::vector<std::string> vars;
  bool haveVars = false;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    ++lineNo;
    std::vector<std::string> tokens = splitWhitespace(stripComment(line));
    if (tokens.empty()) continue;
    if (!haveVars) {
      if (tokens.front() != "vars:") {
        throw Error(Errc::ParseError,
                    "line " + std::to_string(lineNo) + ": expected 'vars: ...' header");
      }
      vars.assign(tokens.begin() + 1, tokens.end());
      if (vars.empty()) {
        throw Error(Errc::ParseError, "line " + std::to_string(lineNo) + ": no variables");
      }
      for (size_t a = 0; a < vars.size(); ++a) {
        for (size_t b = a + 1; b < vars.size(); ++b) {
          if (vars[a] == vars[b]) {
            throw Error(Errc::ParseError, "line " + std::to_string(lineNo) +
                                              ": duplicate variable '" + vars[a] + "'");
          }
        }
      }
      haveVars = true;
      continue;
    }
    gens.push_back(parseGeneratorTokens(tokens, vars, lineNo));
  }
  if (!haveVars) throw Error(Errc::ParseError, "missing 'vars:' header");
  ParsedIdeal out;
  out.ideal = MonomialIdeal(vars, gens);
  collectMinimalizationWarnings(gens, out.ideal, vars, out.warnings);
  return out;
}

ParsedIdeal parseIdealJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens")) {
    throw Error(Errc::ParseError, "ideal JSON needs 'vars' and 'gens'");
  }
  std::vector<std::string> vars;
  for (const auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
  if (vars.empty()) throw Error(Errc::ParseError, "no variables");
  std::vector<Monomial> gens;
  int entry = 0;
  for (const auto& g : j.at("gens")) {
    ++entry;
    if (g.is_array()) {
      std::vector<Exponent> e;
      for (const auto& x : g) e.push_back(x.get<Exponent>());
      if (e.size() != vars.size()) {
        throw Error(Errc::ParseError,
                    "gens[" + std::to_string(entry - 1) + "]: exponent vector length mismatch");
      }
      gens.emplace_back(std::move(e));
    } else if (g.is_string()) {
      gens.push_back(parseGeneratorTokens(splitWhitespace(g.get<std::string>()), vars, entry));
    } else {
      throw Error(Errc::ParseError, "generators must be exponent arrays or strings");
    }
  }
  ParsedIdeal out;
  out.ideal = MonomialIdeal(vars, gens);
  collectMinimalizationWarnings(gens, out.ideal, vars, out.warnings);
  return out;
}

ParsedIdeal parseIdealFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const bool isJson = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  return isJson ? parseIdealJson(buf.str()) : parseIdealText(buf.str());
}

std::string formatIdealText(const MonomialIdeal& I) {
  std::ostringstream out;
  out << "vars:";
  for (const std::string& v : I.vars()) out << ' ' << v;
  out << '\n';
  for (const Monomial& g : I.gens()) out << g.str(I.vars()) << '\n';
  return out.str();
}

nlohmann::json bigIntToJson(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

BigInt bigIntFromJson(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error(Errc::ParseError, "expected an exact integer");
}

nlohmann::json tableToJson(const BigradedTable& t) {
  json values = json::array();
  for (int i = 0; i <= t.iMax; ++i) {
    for (int j = 0; j <= t.jMax; ++j) values.push_back(bigIntToJson(t.at(i, j)));
  }
  return json{{"kind", tableKindName(t.kind)},
              {"iMax", t.iMax},
              {"jMax", t.jMax},
              {"values", values}};
}

BigradedTable tableFromJson(const nlohmann::json& j) {
  BigradedTable t;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "H10") {
    t.kind = TableKind::H10;
  } else if (kind == "H11") {
    t.kind = TableKind::H11;
  } else {
    throw Error(Errc::ParseError, "unknown table kind '" + kind + "'");
  }
  t.iMax = j.at("iMax").get<int>();
  t.jMax = j.at("jMax").get<int>();
  const auto& values = j.at("values");
  if (static_cast<long>(values.size()) != static_cast<long>(t.iMax + 1) * (t.jMax + 1)) {
    throw Error(Errc::ParseError, "table value count mismatch");
  }
  t.values.assign(static_cast<size_t>(t.iMax) + 1,
                  std::vector<BigInt>(static_cast<size_t>(t.jMax) + 1));
  size_t k = 0;
  for (int i = 0; i <= t.iMax; ++i) {
    for (int jj = 0; jj <= t.jMax; ++jj) {
      t.values[static_cast<size_t>(i)][static_cast<size_t>(jj)] = bigIntFromJson(values[k++]);
    }
  }
  return t;
}

std::string tableToCsv(const BigradedTable& t) {
  std::ostringstream out;
  out << "i\\j";
  for (int j = 0; j <= t.jMax; ++j) out << ',' << j;
  out << '\n';
  for (int i = 0; i <= t.iMax; ++i) {
    out << i;
    for (int j = 0; j <= t.jMax; ++j) out << ',' << t.at(i, j);
    out << '\n';
  }
  return out.str();
}

nlohmann::json coefficientReportToJson(const CoefficientReport& report) {
  json jVecs = json::array();
  for (const auto& jk : report.j) {
    json vec = json::array();
    for (const BigInt& x : jk) vec.push_back(bigIntToJson(x));
    jVecs.push_back(vec);
  }
  json c = json::array();
  for (const BigInt& x : report.c) c.push_back(bigIntToJson(x));
  return json{{"d", report.d},
              {"j", jVecs},
              {"c", c},
              {"jmult", bigIntToJson(report.jMult)},
              {"ell", report.analyticSpread},
              {"fit",
               {{"origin", {report.fit.originUsed.first, report.fit.originUsed.second}},
                {"margin", report.fit.marginVerified}}}};
}

nlohmann::json classicalToJson(const ClassicalCoeffs& c) {
  json e = json::array();
  for (const BigInt& x : c.e) e.push_back(bigIntToJson(x));
  return json{{"e", e},
              {"fit", {{"origin", c.fit.originUsed}, {"margin", c.fit.marginVerified}}}};
}

nlohmann::json fciResultToJson(const FciResult& result, const std::vector<std::string>& vars) {
  json accepted = json::array();
  for (const Monomial& u : result.accepted) accepted.push_back(u.str(vars));
  json gens = json::array();
  for (const Monomial& g : result.fci.gens()) gens.push_back(g.str(vars));
  return json{{"fci", gens},
              {"accepted", accepted},
              {"candidates_tested", result.candidatesTested},
              {"degree_bound", result.degreeBound},
              {"complete", result.complete},
              {"assumption", "monomial-fci"}};
}

nlohmann::json comparisonToJson(const ComparisonReport& report,
                                const std::vector<std::string>& vars) {
  json perPrime = json::array();
  for (const PrimeComparison& pc : report.perPrime) {
    json prime = json::array();
    for (int t : pc.support) prime.push_back(vars[static_cast<size_t>(t)]);
    json entry{{"prime", prime},
               {"full_ring", pc.support.size() == vars.size()},
               {"equal", pc.equal},
               {"trivial", pc.trivial}};
    if (!pc.note.empty()) entry["note"] = pc.note;
    if (!pc.trivial && pc.note.empty()) {
      entry["j0"] = json::array({bigIntToJson(pc.j0I), bigIntToJson(pc.j0J)});
      json j1I = json::array();
      for (const BigInt& x : pc.j1I) j1I.push_back(bigIntToJson(x));
      json j1J = json::array();
      for (const BigInt& x : pc.j1J) j1J.push_back(bigIntToJson(x));
      entry["j1"] = json::array({j1I, j1J});
    }
    perPrime.push_back(std::move(entry));
  }
  return json{{"verdict", report.verdict},
              {"per_prime", perPrime},
              {"scope", "monomial primes (diagnostic)"}};
}

nlohmann::json reductionToJson(const ReductionResult& r) {
  json out{{"reduction", r.reduction}, {"nmax", r.nMaxTried}};
  if (r.reduction) {
    out["witness"] = r.witness;
  } else {
    out["status"] = "inconclusive-negative";
  }
  return out;
}

}  // namespace jmult

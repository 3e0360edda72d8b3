#ifndef JMULT_IO_HPP
#define JMULT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "jmult/analysis.hpp"

#include <nlohmann/json_fwd.hpp>

namespace jmult {

/// Text ideal format:
///   line 1:  vars: x y z
///   then one generator per non-empty line (`x^5`, `x y z^2`; whitespace is
///   multiplication, `^` is power, `1` is the unit monomial); `#` comments.
/// JSON alternative: {"vars":[...], "gens":[[exponents]...  or "x^5" strings]}.
/// Non-minimal input is accepted and minimalized; dropped generators are
/// reported as warnings.
struct ParsedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> warnings;

  ParsedIdeal() : ideal(MonomialIdeal::zeroIdeal({})) {}
};

ParsedIdeal parseIdealText(const std::string& text);
ParsedIdeal parseIdealJson(const std::string& text);
/// Dispatches on extension (.json → JSON, otherwise text).
ParsedIdeal parseIdealFile(const std::string& path);

std::string formatIdealText(const MonomialIdeal& I);

/// Exact integers in JSON: a number when it fits in 64 bits, otherwise a
/// decimal string. parse accepts both.
nlohmann::json bigIntToJson(const BigInt& v);
BigInt bigIntFromJson(const nlohmann::json& j);

nlohmann::json tableToJson(const BigradedTable& t);
BigradedTable tableFromJson(const nlohmann::json& j);
std::string tableToCsv(const BigradedTable& t);

nlohmann::json coefficientReportToJson(const CoefficientReport& report);
nlohmann::json classicalToJson(const ClassicalCoeffs& c);
nlohmann::json fciResultToJson(const FciResult& result, const std::vector<std::string>& vars);
nlohmann::json comparisonToJson(const ComparisonReport& report,
                                const std::vector<std::string>& vars);
nlohmann::json reductionToJson(const ReductionResult& r);

}  // namespace jmult

#endif

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "jmult/analysis.hpp"
#include "jmult/io.hpp"
#include "jmult/parallel.hpp"

namespace {

using jmult::Errc;
using jmult::Error;
using jmult::FitConfig;
using jmult::MonomialIdeal;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitFalse = 3;

struct GlobalOptions {
  int margin = 2;
  int maxOrigin = 12;
  int jobs = 0;  // 0 = all cores
  std::string format = "json";
  std::uint64_t seed = 0;  // reserved for the property-test harness
  bool cacheStats = false;

  FitConfig fitConfig() const {
    FitConfig cfg;
    cfg.margin = margin;
    cfg.maxOrigin = maxOrigin;
    cfg.jobs = jobs;
    return cfg;
  }
};

MonomialIdeal loadIdeal(const std::string& path) {
  jmult::ParsedIdeal parsed = jmult::parseIdealFile(path);
  for (const std::string& w : parsed.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
  return parsed.ideal;
}

void requireJsonFormat(const GlobalOptions& g, const char* what) {
  if (g.format != "json") {
    throw Error(Errc::InvalidArgument, std::string(what) + " reports are JSON only");
  }
}

void printJson(const json& j) { std::cout << j.dump(2) << "\n"; }

int exitCodeFor(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::InvalidArgument:
    case Errc::VariableMismatch:
    case Errc::NotASubideal:
    case Errc::NotMPrimary:
      return kExitInput;
    case Errc::NoStabilization:
    case Errc::VerificationFailed:
    case Errc::NonFiniteLength:
      return kExitInconclusive;
    default:
      return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized Hilbert coefficients, j-multiplicity and first coefficient "
               "ideals of monomial ideals"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--margin", global.margin, "Extra verified rows/columns beyond the fit window")
      ->capture_default_str();
  app.add_option("--max-origin", global.maxOrigin, "Give up if no stable window starts by here")
      ->capture_default_str();
  app.add_option("--jobs", global.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--format", global.format, "Output format: json (reports) or csv (tables)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", global.seed, "Seed reserved for the property-test harness")
      ->capture_default_str();
  app.add_flag("--cache-stats", global.cacheStats,
               "Print power-cache entry count and memory use to stderr on exit");
  app.set_version_flag("--version", "jmult 0.1.0");

  std::string fileA, fileB, kind = "h11", primeSpec;
  int iMax = 8, jMax = 8, nMax = 8;
  long long dBound = -1;
  bool localizeAll = false;

  CLI::App* cCoeffs = app.add_subcommand("coeffs", "Generalized Hilbert coefficients report");
  cCoeffs->add_option("file", fileA, "ideal file")->required();

  CLI::App* cTable = app.add_subcommand("table", "Dump a bigraded Hilbert table");
  cTable->add_option("file", fileA, "ideal file")->required();
  cTable->add_option("--imax", iMax, "largest i")->capture_default_str();
  cTable->add_option("--jmax", jMax, "largest j")->capture_default_str();
  cTable->add_option("--kind", kind, "h10 or h11")
      ->check(CLI::IsMember({"h10", "h11"}))
      ->capture_default_str();
  std::string tableFormat = "csv";
  cTable->add_option("--format", tableFormat, "csv or json")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  CLI::App* cFci = app.add_subcommand("fci", "First coefficient ideal");
  cFci->add_option("file", fileA, "ideal file")->required();
  cFci->add_option("--dbound", dBound, "candidate degree bound (default maxGenDegree + nvars)");

  CLI::App* cContains = app.add_subcommand("contains", "Test J ⊆ I_{1}");
  cContains->add_option("fileI", fileA, "ideal file for I")->required();
  cContains->add_option("fileJ", fileB, "ideal file for J")->required();

  CLI::App* cCompare = app.add_subcommand("compare", "Compare localized j0/j1 of I and J");
  cCompare->add_option("fileI", fileA, "ideal file for I")->required();
  cCompare->add_option("fileJ", fileB, "ideal file for J")->required();
  cCompare->add_flag("--localize", localizeAll,
                     "also compare at every monomial prime containing I");

  CLI::App* cIsRed = app.add_subcommand("isreduction", "Test that J is a reduction of I");
  cIsRed->add_option("fileJ", fileA, "ideal file for J")->required();
  cIsRed->add_option("fileI", fileB, "ideal file for I")->required();
  cIsRed->add_option("--nmax", nMax, "largest witness exponent tried")->capture_default_str();

  CLI::App* cLocalize = app.add_subcommand("localize", "Localize at a monomial prime");
  cLocalize->add_option("file", fileA, "ideal file")->required();
  cLocalize->add_option("--prime", primeSpec, "comma- or space-separated variable names")
      ->required();

  CLI11_PARSE(app, argc, argv);

  auto cache = std::make_shared<jmult::PowerCache>();
  auto finish = [&](int rc) {
    if (global.cacheStats) {
      std::cerr << "cache: " << cache->entries() << " ideals, " << cache->memoryBytes()
                << " bytes\n";
    }
    return rc;
  };
  try {
    const FitConfig cfg = global.fitConfig();

    if (cCoeffs->parsed()) {
      requireJsonFormat(global, "coeffs");
      MonomialIdeal I = loadIdeal(fileA);
      jmult::CoefficientReport report = jmult::generalizedCoefficients(I, cfg, cache);
      printJson(jmult::coefficientReportToJson(report));
      return finish(kExitOk);
    }

    if (cTable->parsed()) {
      MonomialIdeal I = loadIdeal(fileA);
      if (I.isZero()) throw Error(Errc::InvalidArgument, "table needs a nonzero ideal");
      jmult::TSource src(I, cache);
      jmult::BigradedTable t = jmult::tableFromSource(
          src, kind == "h10" ? jmult::TableKind::H10 : jmult::TableKind::H11, iMax, jMax,
          /*parallel=*/true, global.jobs);
      t.source = I.str();
      // table defaults to CSV; a global --format applies unless the
      // subcommand-level one overrides it
      if (cTable->count("--format") == 0 && app.count("--format") > 0) {
        tableFormat = global.format;
      }
      if (tableFormat == "csv") {
        std::cout << jmult::tableToCsv(t);
      } else {
        printJson(jmult::tableToJson(t));
      }
      return finish(kExitOk);
    }

    if (cFci->parsed()) {
      requireJsonFormat(global, "fci");
      MonomialIdeal I = loadIdeal(fileA);
      jmult::FciResult result =
          jmult::firstCoefficientIdeal(I, static_cast<jmult::Exponent>(dBound), cfg, cache);
      printJson(jmult::fciResultToJson(result, I.vars()));
      return finish(result.complete ? kExitOk : kExitInconclusive);
    }

    if (cContains->parsed()) {
      requireJsonFormat(global, "contains");
      MonomialIdeal I = loadIdeal(fileA);
      MonomialIdeal J = loadIdeal(fileB);
      bool verdict = jmult::fciContains(I, J, cfg, cache);
      printJson(json{{"verdict", verdict}});
      return finish(verdict ? kExitOk : kExitFalse);
    }

    if (cCompare->parsed()) {
      requireJsonFormat(global, "compare");
      MonomialIdeal I = loadIdeal(fileA);
      MonomialIdeal J = loadIdeal(fileB);
      jmult::ComparisonReport report =
          jmult::compareLocalized(I, J, cfg, cache, /*allPrimes=*/localizeAll);
      printJson(jmult::comparisonToJson(report, I.vars()));
      return finish(report.verdict ? kExitOk : kExitFalse);
    }

    if (cIsRed->parsed()) {
      requireJsonFormat(global, "isreduction");
      MonomialIdeal J = loadIdeal(fileA);
      MonomialIdeal I = loadIdeal(fileB);
      jmult::ReductionResult r = jmult::isReduction(J, I, nMax, cache);
      printJson(jmult::reductionToJson(r));
      if (!r.reduction) {
        std::cerr << "inconclusive-negative, nmax=" << nMax << "\n";
        return finish(kExitFalse);
      }
      return finish(kExitOk);
    }

    if (cLocalize->parsed()) {
      MonomialIdeal I = loadIdeal(fileA);
      std::string primeNames = primeSpec;
      for (char& ch : primeNames) {
        if (ch == ',') ch = ' ';
      }
      std::vector<int> support;
      {
        std::istringstream in(primeNames);
        std::string name;
        while (in >> name) {
          auto it = std::find(I.vars().begin(), I.vars().end(), name);
          if (it == I.vars().end()) {
            throw Error(Errc::InvalidArgument, "unknown variable '" + name + "' in --prime");
          }
          support.push_back(static_cast<int>(it - I.vars().begin()));
        }
      }
      std::sort(support.begin(), support.end());
      support.erase(std::unique(support.begin(), support.end()), support.end());
      MonomialIdeal local = jmult::localize(I, jmult::MonomialPrime{support});
      if (global.format == "json") {
        json gens = json::array();
        for (const auto& g : local.gens()) gens.push_back(g.str(local.vars()));
        printJson(json{{"vars", local.vars()}, {"gens", gens}, {"unit", local.isUnit()}});
      } else {
        std::cout << jmult::formatIdealText(local);
      }
      return finish(kExitOk);
    }
  } catch (const Error& e) {
    std::cerr << "error (" << jmult::errcName(e.code()) << "): " << e.what() << "\n";
    return finish(exitCodeFor(e));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

#pragma once

// JSON interchange: rationals as "p/q", Gaussian rationals, series,
// elements tagged with their algebra id, functionals, modules, cover
// models, transitions and Cech class data. Malformed input throws
// cli.ParseError.

#include <json.hpp>

#include "starrep/cover.hpp"
#include "starrep/positivity.hpp"
#include "starrep/prehilbert.hpp"

namespace starrep::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

[[noreturn]] void parse_error(const std::string& detail);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const Gauss& g);
Gauss gauss_from_json(const Json& j);
/// Coefficients up to the last nonzero one; longer input is truncated to
/// the current order.
Json to_json(const Series& s);
Series series_from_json(const Json& j);

/// Rebuilds an algebra from its id: scalar, wick, moyal(n), their
/// "classical " forms, discrete(n), Mk(base), and twisted(Mk(scalar)) for
/// the standard twist.
AlgebraPtr algebra_from_id(const std::string& id, int degree_cap = kDefaultDegreeCap);

Json to_json(const Algebra& a, const Element& e);
/// Checks the algebra tag against `a` when given.
Element element_from_json(const Json& j, const Algebra* a = nullptr);
Json to_json(const Algebra& a, const std::vector<Element>& list);
std::vector<Element> elements_from_json(const Json& j, const Algebra* a = nullptr);

/// Row-major arrays of series.
Json to_json(const SeriesMatrix& m);
SeriesMatrix matrix_from_json(const Json& j);

/// {"basis", "values"} with the listed monomials as basis.
Json to_json(const LinearFunctional& omega);
LinearFunctional functional_from_json(const Json& j, const AlgebraPtr& a);

Json to_json(const PreHilbertModule& m);
ModulePtr module_from_json(const Json& j);

/// Discrete models only: {"points", "charts", "overlaps", "triples", "partition"}.
Json to_json(const CoverModel& m);
CoverModel cover_from_json(const Json& j);
Json to_json(const CoverModel& m, const TransitionData& t);
TransitionData transitions_from_json(const Json& j, const CoverModel& m);

std::string pair_key(const ChartPair& p);
std::string triple_key(const ChartTriple& t);
Json to_json(const Algebra& a, const LogElement& l);
LogElement log_from_json(const Json& j, const Algebra& a);
/// {"t": {"a,b": log}, "n": {"a,b,c": int}}, with "integral".
Json to_json(const CoverModel& m, const CechClassData& c);
std::map<ChartPair, LogElement> logs_from_json(const Json& j, const CoverModel& m);
Json to_json(const std::map<ChartTriple, int>& cycle);
std::map<ChartTriple, int> cycle_from_json(const Json& j);

Json read_file(const std::string& path);

}  // namespace starrep::io

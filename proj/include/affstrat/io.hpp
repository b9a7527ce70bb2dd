#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "affstrat/critical.hpp"
#include "affstrat/oracle.hpp"
#include "json.hpp"

namespace affstrat {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// Overrides carried by a problem file.
struct ProblemOptions {
  std::optional<std::uint64_t> seed;
  std::optional<long> coeff_bound;
  std::optional<int> max_attempts;
  std::optional<SliceStrategy> slices;
  std::optional<std::size_t> spair_budget;
  std::optional<std::size_t> branch_cap;
  std::optional<FiltrationMode> mode;
};

/// { "variables": [...], "ideal": [...], "map": [...], "declared_codim": r,
///   "options": {...} }
struct Problem {
  RingPtr ring;
  Ideal ideal;
  std::vector<Polynomial> map;
  std::size_t codim = 0;
  ProblemOptions options;
};

/// Throws LoadError on malformed JSON, unknown keys' types or bad polynomials.
Problem parse_problem(const Json& j);
Problem load_problem(const std::string& path);
/// The validated variety; a codimension mismatch becomes a LoadError.
VarietySpec problem_variety(const Problem& p);

Json read_json_file(const std::string& path);

FiltrationMode parse_mode(const std::string& s);
std::string mode_name(FiltrationMode m);
SliceStrategy parse_slices(const std::string& s);
std::string slices_name(SliceStrategy s);

/// Reduced grevlex generators (["1"] for the unit ideal).
Json ideal_json(const Ideal& I);
/// Parses generator strings in `ring`.
Ideal ideal_from_json(const Json& j, const RingPtr& ring);

Json to_json(const Stratification& s);
Json to_json(const KfResult& r);
Json to_json(const WitnessReport& w);
Json complex_json(std::complex<double> z);

}  // namespace affstrat

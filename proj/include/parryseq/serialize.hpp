#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "parryseq/algebraic.hpp"
#include "parryseq/automata.hpp"
#include "parryseq/numsys.hpp"
#include "parryseq/sequences.hpp"

namespace parryseq {

constexpr int kAutomatonSchemaVersion = 1;

/// Big integers serialize as JSON numbers when they fit in 64 bits, as
/// decimal strings otherwise; both forms are accepted on input.
nlohmann::json to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DigitWord& w);
DigitWord word_from_json(const nlohmann::json& j);

/// {"coefficients", "affine_constant", "initial_terms", "digit_bound"}. An
/// explicit system has empty coefficients and its terms in initial_terms.
nlohmann::json to_json(const NumerationSystem& system);
/// digit_bound, when present, must match the computed bound (InvalidSystem).
NumerationSystem system_from_json(const nlohmann::json& j);

/// Constant term first.
nlohmann::json polynomial_to_json(const IntPoly& p);
/// ["lo", "hi"] rendered "p/q" in lowest terms.
nlohmann::json interval_to_json(const RationalInterval& iv);

/// Round-trip format with "schema_version"; missing transitions are null.
nlohmann::json to_json(const Dfa& dfa);
nlohmann::json to_json(const Dfao& machine);
Dfa dfa_from_json(const nlohmann::json& j);
Dfao dfao_from_json(const nlohmann::json& j);

/// Graphviz: final states double circles, outputs in state labels.
std::string to_dot(const Dfa& dfa, const std::string& graph_name = "A");
std::string to_dot(const Dfao& machine, const std::string& graph_name = "M");

/// Keyed by suffix ("eps", "0.1"-style for pairs: "s|t").
nlohmann::json to_json(const KernelTable& table);

/// Columns n, p(n), p(n)/n.
std::string complexity_csv(const ComplexityTable& table);
/// Columns n, x(n).
std::string prefix_csv(const std::vector<Output>& values);
/// One row per m.
std::string grid_csv(const Grid2D& grid);
/// Compact text rows: concatenated letters per row.
std::string grid_text(const Grid2D& grid);

}  // namespace parryseq

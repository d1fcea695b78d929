#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qec/closed_forms.hpp"
#include "qec/engine.hpp"
#include "qec/graph.hpp"

namespace qec::report {

enum class MethodChoice { automatic, compression, stationary, diam2 };

MethodChoice parse_method(std::string_view name);

struct EvalOptions {
    MethodChoice method = MethodChoice::automatic;
    std::size_t max_vertices = 2000;
    std::filesystem::path base_dir;
};

struct EvalReport {
    std::string expr;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t diameter = 0;
    QecResult qec;
    std::optional<FormulaValue> formula;
    double delta1 = 0.0;
    double delta2 = 0.0;
    double lambda_min = 0.0;
    std::optional<SrgParams> srg;
};

// Parses and evaluates `text`, then fills every report field. Throws ParseError or
// InvalidArgument for bad input, DomainError for disconnected or oversize graphs.
EvalReport evaluate(const std::string& text, const EvalOptions& opts = {});
EvalReport evaluate_graph(std::string label, const Graph& g, std::optional<FormulaValue> formula,
                          const EvalOptions& opts = {});

// Fixed field order and 12 significant digits, so equal input gives equal bytes.
std::string to_json(const EvalReport& r, bool with_witness);
std::string to_text(const EvalReport& r, bool with_witness);

struct SpectrumReport {
    std::string expr;
    std::vector<std::pair<double, std::size_t>> adjacency;
    std::optional<std::vector<std::pair<double, std::size_t>>> distance;  // connected graphs only
};

SpectrumReport spectrum(const std::string& text, const EvalOptions& opts = {});
std::string to_json(const SpectrumReport& r);
std::string to_text(const SpectrumReport& r);

// Formula-versus-numeric sweeps.
struct VerifyOptions {
    std::string family;
    std::int64_t max = 8;
    std::size_t samples = 25;
    std::uint64_t seed = 42;
};

struct VerifyCase {
    std::string label;
    double formula = 0.0;
    double numeric = 0.0;
};

struct VerifySummary {
    std::string family;
    std::vector<VerifyCase> cases;
    double max_deviation = 0.0;
    std::size_t failures = 0;
};

std::vector<std::string> verify_families();
// Throws InvalidArgument for an unknown family.
VerifySummary verify(const VerifyOptions& opts);
std::string to_text(const VerifySummary& s);

// Published example values recomputed by formula and, where the graph can be
// built, numerically.
// Columns are rendered values; "-" marks a column that does not apply.
struct TableRow {
    std::string label;
    std::string published;
    std::string formula;
    std::string numeric;
    bool pass = false;
};

std::vector<TableRow> published_examples();
std::string to_text(const std::vector<TableRow>& rows);
std::string to_json(const std::vector<TableRow>& rows);

// Shared number formatting: 12 significant digits, no negative zero.
std::string format_number(double x);

}  // namespace qec::report

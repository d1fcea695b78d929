#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qec/closed_forms.hpp"
#include "qec/graph.hpp"

namespace qec::expr {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Named family, e.g. C(5) or petersen. `name` is the canonical spelling from the atom table.
struct Atom {
    std::string name;
    std::vector<std::int64_t> params;
    bool operator==(const Atom&) const = default;
};

enum class BinaryOp { join, disjoint_union, cartesian };
enum class UnaryOp { double_graph, lex2, complement, line };

struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Unary {
    UnaryOp op;
    ExprPtr arg;
};

struct Copies {
    std::int64_t k;
    ExprPtr arg;
};

struct FromFile {
    std::string path;
    bool operator==(const FromFile&) const = default;
};

struct Expr {
    std::variant<Atom, Binary, Unary, Copies, FromFile> node;
};

bool operator==(const Expr& a, const Expr& b);

ExprPtr atom(std::string name, std::vector<std::int64_t> params = {});
ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr unary(UnaryOp op, ExprPtr arg);
ExprPtr copies(std::int64_t k, ExprPtr arg);
ExprPtr from_file(std::string path);

// Canonical atom spellings accepted by the parser (case-insensitively).
std::span<const std::string_view> atom_names();

// Recursive-descent parser; throws ParseError carrying a 1-based character offset.
ExprPtr parse(std::string_view text);

// Canonical text form; parse(render(e)) == e for every expression.
std::string render(const Expr& e);

// Builds the graph. Relative file() paths are resolved against base_dir.
Graph eval_expr(const Expr& e, const std::filesystem::path& base_dir = {});

// Closed-form QEC when the expression is a recognized family, nullopt otherwise.
std::optional<FormulaValue> match_formula(const Expr& e);

}  // namespace qec::expr

#include "qec/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "qec/errors.hpp"

namespace qec::expr {

namespace {

constexpr std::array<std::string_view, 16> kAtoms{
    "K",     "Kbar", "C",    "P",         "Kb",         "star",    "wheel", "friendship",
    "T",     "grid", "petersen", "shrikhande", "clebsch", "schlafli", "chang", "hoffman_singleton"};

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::optional<std::string_view> canonical_atom(std::string_view name) {
    const auto key = lower(name);
    for (auto a : kAtoms)
        if (lower(a) == key) return a;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { ident, integer, string, lparen, rparen, comma, plus, star, end };

std::string_view describe(Tok t) {
    switch (t) {
        case Tok::ident: return "name";
        case Tok::integer: return "integer";
        case Tok::string: return "quoted path";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::plus: return "'+'";
        case Tok::star: return "'*'";
        case Tok::end: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    std::int64_t value = 0;
    std::size_t offset = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        const std::size_t at = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::ident, std::string(s.substr(i, j - i)), 0, at});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            std::int64_t v = 0;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                if (v > (INT64_MAX - 9) / 10) throw ParseError("integer literal too large at offset " + std::to_string(at), at);
                v = v * 10 + (s[j] - '0');
                ++j;
            }
            out.push_back({Tok::integer, std::string(s.substr(i, j - i)), v, at});
            i = j;
        } else if (c == '"') {
            std::string text;
            std::size_t j = i + 1;
            bool closed = false;
            while (j < s.size()) {
                if (s[j] == '\\' && j + 1 < s.size()) {
                    text.push_back(s[j + 1]);
                    j += 2;
                } else if (s[j] == '"') {
                    closed = true;
                    ++j;
                    break;
                } else {
                    text.push_back(s[j++]);
                }
            }
            if (!closed) throw ParseError("unterminated string starting at offset " + std::to_string(at), at);
            out.push_back({Tok::string, std::move(text), 0, at});
            i = j;
        } else {
            Tok kind;
            switch (c) {
                case '(': kind = Tok::lparen; break;
                case ')': kind = Tok::rparen; break;
                case ',': kind = Tok::comma; break;
                case '+': kind = Tok::plus; break;
                case '*': kind = Tok::star; break;
                default:
                    throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(at),
                                     at);
            }
            out.push_back({kind, std::string(1, c), 0, at});
            ++i;
        }
    }
    out.push_back({Tok::end, "", 0, s.size() + 1});
    return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    ExprPtr parse_all() {
        auto e = parse_expr();
        if (peek().kind != Tok::end) fail({Tok::plus, Tok::end});
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(std::initializer_list<Tok> expected) const {
        const auto& t = peek();
        std::string msg = "syntax error at offset " + std::to_string(t.offset) + ": expected ";
        bool first = true;
        for (auto k : expected) {
            if (!first) msg += " or ";
            msg += describe(k);
            first = false;
        }
        msg += ", found " + (t.kind == Tok::end ? std::string("end of input") : "'" + t.text + "'");
        throw ParseError(msg, t.offset);
    }

    const Token& expect(Tok kind) {
        if (peek().kind != kind) fail({kind});
        return next();
    }

    ExprPtr parse_expr() {
        auto lhs = parse_term();
        while (peek().kind == Tok::plus) {
            next();
            lhs = binary(BinaryOp::join, lhs, parse_term());
        }
        return lhs;
    }

    ExprPtr parse_term() {
        if (peek().kind == Tok::integer) {
            const auto k = next().value;
            expect(Tok::star);
            return copies(k, parse_factor());
        }
        return parse_factor();
    }

    ExprPtr parse_factor() {
        const auto& t = peek();
        if (t.kind == Tok::lparen) {
            next();
            auto e = parse_expr();
            if (peek().kind != Tok::rparen) fail({Tok::plus, Tok::rparen});
            next();
            return e;
        }
        if (t.kind != Tok::ident) fail({Tok::ident, Tok::integer, Tok::lparen});

        const auto name = lower(t.text);
        if (name == "join" || name == "union" || name == "cart") {
            next();
            expect(Tok::lparen);
            auto a = parse_expr();
            if (peek().kind != Tok::comma) fail({Tok::plus, Tok::comma});
            next();
            auto b = parse_expr();
            if (peek().kind != Tok::rparen) fail({Tok::plus, Tok::rparen});
            next();
            const auto op = name == "join" ? BinaryOp::join : name == "union" ? BinaryOp::disjoint_union : BinaryOp::cartesian;
            return binary(op, a, b);
        }
        if (name == "double" || name == "lex2" || name == "complement" || name == "line") {
            next();
            expect(Tok::lparen);
            auto a = parse_expr();
            if (peek().kind != Tok::rparen) fail({Tok::plus, Tok::rparen});
            next();
            const auto op = name == "double" ? UnaryOp::double_graph
                            : name == "lex2" ? UnaryOp::lex2
                            : name == "complement" ? UnaryOp::complement
                                                   : UnaryOp::line;
            return unary(op, a);
        }
        if (name == "file") {
            next();
            expect(Tok::lparen);
            auto path = expect(Tok::string).text;
            expect(Tok::rparen);
            return from_file(std::move(path));
        }

        auto canon = canonical_atom(t.text);
        if (!canon) {
            std::string msg = "unknown graph name '" + t.text + "' at offset " + std::to_string(t.offset) + "; known names:";
            for (auto a : kAtoms) msg += " " + std::string(a);
            throw ParseError(msg, t.offset);
        }
        next();
        std::vector<std::int64_t> params;
        if (peek().kind == Tok::lparen) {
            next();
            params.push_back(expect(Tok::integer).value);
            while (peek().kind == Tok::comma) {
                next();
                params.push_back(expect(Tok::integer).value);
            }
            if (peek().kind != Tok::rparen) fail({Tok::comma, Tok::rparen});
            next();
        }
        return atom(std::string(*canon), std::move(params));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Rendering

std::string_view binary_keyword(BinaryOp op) {
    switch (op) {
        case BinaryOp::join: return "join";
        case BinaryOp::disjoint_union: return "union";
        case BinaryOp::cartesian: return "cart";
    }
    return "?";
}

std::string_view unary_keyword(UnaryOp op) {
    switch (op) {
        case UnaryOp::double_graph: return "double";
        case UnaryOp::lex2: return "lex2";
        case UnaryOp::complement: return "complement";
        case UnaryOp::line: return "line";
    }
    return "?";
}

bool is_join(const Expr& e) {
    auto* b = std::get_if<Binary>(&e.node);
    return b && b->op == BinaryOp::join;
}

std::string render_factor(const Expr& e) {
    if (is_join(e) || std::holds_alternative<Copies>(e.node)) return "(" + render(e) + ")";
    return render(e);
}

}  // namespace

// ---------------------------------------------------------------------------
// AST helpers

bool operator==(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Atom> || std::is_same_v<T, FromFile>) {
                return x == y;
            } else if constexpr (std::is_same_v<T, Binary>) {
                return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
            } else if constexpr (std::is_same_v<T, Unary>) {
                return x.op == y.op && *x.arg == *y.arg;
            } else {
                return x.k == y.k && *x.arg == *y.arg;
            }
        },
        a.node);
}

ExprPtr atom(std::string name, std::vector<std::int64_t> params) {
    return std::make_shared<const Expr>(Expr{Atom{std::move(name), std::move(params)}});
}
ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    return std::make_shared<const Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}});
}
ExprPtr unary(UnaryOp op, ExprPtr arg) { return std::make_shared<const Expr>(Expr{Unary{op, std::move(arg)}}); }
ExprPtr copies(std::int64_t k, ExprPtr arg) { return std::make_shared<const Expr>(Expr{Copies{k, std::move(arg)}}); }
ExprPtr from_file(std::string path) { return std::make_shared<const Expr>(Expr{FromFile{std::move(path)}}); }

std::span<const std::string_view> atom_names() { return kAtoms; }

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Expr& e) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Atom>) {
                std::string out = x.name;
                if (!x.params.empty()) {
                    out += "(";
                    for (std::size_t i = 0; i < x.params.size(); ++i) {
                        if (i) out += ", ";
                        out += std::to_string(x.params[i]);
                    }
                    out += ")";
                }
                return out;
            } else if constexpr (std::is_same_v<T, Binary>) {
                if (x.op == BinaryOp::join) {
                    const std::string rhs = is_join(*x.rhs) ? "(" + render(*x.rhs) + ")" : render(*x.rhs);
                    return render(*x.lhs) + " + " + rhs;
                }
                return std::string(binary_keyword(x.op)) + "(" + render(*x.lhs) + ", " + render(*x.rhs) + ")";
            } else if constexpr (std::is_same_v<T, Unary>) {
                return std::string(unary_keyword(x.op)) + "(" + render(*x.arg) + ")";
            } else if constexpr (std::is_same_v<T, Copies>) {
                return std::to_string(x.k) + "*" + render_factor(*x.arg);
            } else {
                std::string quoted = "file(\"";
                for (char c : x.path) {
                    if (c == '"' || c == '\\') quoted.push_back('\\');
                    quoted.push_back(c);
                }
                return quoted + "\")";
            }
        },
        e.node);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

std::size_t as_size(std::int64_t v, const std::string& what) {
    if (v < 0 || static_cast<std::uint64_t>(v) > Graph::kMaxVertices)
        throw InvalidArgument(what + " parameter " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
}

Graph eval_atom(const Atom& a) {
    auto arity = [&](std::size_t n) {
        if (a.params.size() != n)
            throw InvalidArgument(a.name + " takes " + std::to_string(n) + " parameter(s), got " +
                                  std::to_string(a.params.size()));
    };
    auto p = [&](std::size_t i) { return as_size(a.params[i], a.name); };
    const auto& n = a.name;
    if (n == "K") return arity(1), complete(p(0));
    if (n == "Kbar") return arity(1), empty(p(0));
    if (n == "C") return arity(1), cycle(p(0));
    if (n == "P") return arity(1), path(p(0));
    if (n == "Kb") return arity(2), complete_bipartite(p(0), p(1));
    if (n == "star") return arity(1), complete_bipartite(1, p(0));
    if (n == "wheel") {
        arity(1);
        if (p(0) < 3) throw InvalidArgument("wheel requires n >= 3");
        return join(cycle(p(0)), complete(1));
    }
    if (n == "friendship") return arity(1), join(copies(p(0), complete(2)), complete(1));
    if (n == "T") return arity(1), triangular(p(0));
    if (n == "grid") return arity(1), grid(p(0));
    if (n == "petersen") return arity(0), petersen();
    if (n == "shrikhande") return arity(0), shrikhande();
    if (n == "clebsch") return arity(0), clebsch();
    if (n == "schlafli") return arity(0), schlafli();
    if (n == "chang") return arity(1), chang(static_cast<int>(std::clamp<std::int64_t>(a.params[0], -1, 4)));
    if (n == "hoffman_singleton") return arity(0), hoffman_singleton();
    throw InvalidArgument("unknown atom " + n);
}

template <class E>
[[noreturn]] void rethrow_with_context(const E& err, const Expr& e) {
    throw E("in '" + render(e) + "': " + err.what());
}

Graph eval_node(const Expr& e, const std::filesystem::path& base_dir);

template <class F>
Graph guarded(const Expr& e, F&& build) {
    try {
        return build();
    } catch (const DomainError& err) {
        rethrow_with_context(err, e);
    } catch (const InvalidArgument& err) {
        rethrow_with_context(err, e);
    }
}

Graph eval_node(const Expr& e, const std::filesystem::path& base_dir) {
    if (auto* a = std::get_if<Atom>(&e.node)) return guarded(e, [&] { return eval_atom(*a); });
    if (auto* b = std::get_if<Binary>(&e.node)) {
        const Graph l = eval_node(*b->lhs, base_dir);
        const Graph r = eval_node(*b->rhs, base_dir);
        return guarded(e, [&] {
            switch (b->op) {
                case BinaryOp::join: return join(l, r);
                case BinaryOp::disjoint_union: return disjoint_union(l, r);
                case BinaryOp::cartesian: return cartesian(l, r);
            }
            throw InvalidArgument("unknown binary operation");
        });
    }
    if (auto* u = std::get_if<Unary>(&e.node)) {
        const Graph g = eval_node(*u->arg, base_dir);
        return guarded(e, [&] {
            switch (u->op) {
                case UnaryOp::double_graph: return double_graph(g);
                case UnaryOp::lex2: return lex_k2(g);
                case UnaryOp::complement: return complement(g);
                case UnaryOp::line: return line_graph(g);
            }
            throw InvalidArgument("unknown unary operation");
        });
    }
    if (auto* c = std::get_if<Copies>(&e.node)) {
        const Graph g = eval_node(*c->arg, base_dir);
        return guarded(e, [&] { return qec::copies(as_size(c->k, "copies"), g); });
    }
    const auto& f = std::get<FromFile>(e.node);
    std::filesystem::path p(f.path);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    std::ifstream in(p, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open edge-list file '" + p.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return from_edge_list(buf.str());
    } catch (const ParseError& err) {
        throw ParseError(p.string() + ": " + err.what(), err.offset());
    }
}

}  // namespace

Graph eval_expr(const Expr& e, const std::filesystem::path& base_dir) { return eval_node(e, base_dir); }

// ---------------------------------------------------------------------------
// Formula matching

namespace {

const Atom* as_atom(const Expr& e, std::string_view name, std::size_t arity) {
    auto* a = std::get_if<Atom>(&e.node);
    if (a && a->name == name && a->params.size() == arity) return a;
    return nullptr;
}

bool params_ok(const Atom& a) {
    return std::all_of(a.params.begin(), a.params.end(),
                       [](std::int64_t v) { return v >= 0 && v <= static_cast<std::int64_t>(Graph::kMaxVertices); });
}

std::optional<SrgParams> named_srg(const Atom& a) {
    if (a.name == "petersen" && a.params.empty()) return srg_family_params(SrgFamily::petersen);
    if (a.name == "shrikhande" && a.params.empty()) return srg_family_params(SrgFamily::shrikhande);
    if (a.name == "clebsch" && a.params.empty()) return srg_family_params(SrgFamily::clebsch);
    if (a.name == "schlafli" && a.params.empty()) return srg_family_params(SrgFamily::schlafli);
    if (a.name == "hoffman_singleton" && a.params.empty()) return srg_family_params(SrgFamily::hoffman_singleton);
    if (a.name == "chang" && a.params.size() == 1 && a.params[0] >= 1 && a.params[0] <= 3)
        return srg_family_params(SrgFamily::chang);
    if (a.name == "T" && a.params.size() == 1 && a.params[0] >= 4)
        return srg_family_params(SrgFamily::triangular, a.params[0]);
    if (a.name == "grid" && a.params.size() == 1 && a.params[0] >= 2)
        return srg_family_params(SrgFamily::grid, a.params[0]);
    return std::nullopt;
}

// Line(K(n)) and cart(K(n), K(n)) denote T(n) and the n x n grid.
std::optional<Atom> normalize_srg_form(const Expr& e) {
    if (auto* u = std::get_if<Unary>(&e.node); u && u->op == UnaryOp::line)
        if (auto* k = as_atom(*u->arg, "K", 1)) return Atom{"T", k->params};
    if (auto* b = std::get_if<Binary>(&e.node); b && b->op == BinaryOp::cartesian) {
        auto* k1 = as_atom(*b->lhs, "K", 1);
        auto* k2 = as_atom(*b->rhs, "K", 1);
        if (k1 && k2 && k1->params == k2->params) return Atom{"grid", k1->params};
    }
    if (auto* a = std::get_if<Atom>(&e.node)) return *a;
    return std::nullopt;
}

std::optional<RegularPart> regular_part(const Expr& e) {
    if (auto* c = std::get_if<Copies>(&e.node)) {
        if (c->k < 1) return std::nullopt;
        if (auto p = regular_part(*c->arg)) return copies_part(c->k, *p);
        return std::nullopt;
    }
    if (auto* b = std::get_if<Binary>(&e.node); b && b->op == BinaryOp::join) {
        auto l = regular_part(*b->lhs);
        auto r = regular_part(*b->rhs);
        if (l && r && l->r == l->n - 1 && r->r == r->n - 1) return complete_part(l->n + r->n);
        return std::nullopt;
    }
    auto a = normalize_srg_form(e);
    if (!a || !params_ok(*a)) return std::nullopt;
    const auto& ps = a->params;
    if (a->name == "K" && ps.size() == 1 && ps[0] >= 1) return complete_part(ps[0]);
    if (a->name == "Kbar" && ps.size() == 1 && ps[0] >= 1) return empty_part(ps[0]);
    if (a->name == "C" && ps.size() == 1 && ps[0] >= 3) return cycle_part(ps[0]);
    if (a->name == "P" && ps.size() == 1 && (ps[0] == 1 || ps[0] == 2)) return complete_part(ps[0]);
    if (a->name == "T" && ps.size() == 1 && (ps[0] == 2 || ps[0] == 3)) return complete_part(ps[0] * (ps[0] - 1) / 2);
    if (a->name == "Kb" && ps.size() == 2 && ps[0] == ps[1] && ps[0] >= 1)
        return RegularPart{2 * ps[0], ps[0], -static_cast<double>(ps[0]), Rational(-ps[0])};
    if (a->name == "star" && ps.size() == 1 && ps[0] == 1) return complete_part(2);
    if (auto p = named_srg(*a)) return srg_part(*p);
    return std::nullopt;
}

std::optional<FormulaValue> match_atom(const Atom& a) {
    if (!params_ok(a)) return std::nullopt;
    const auto& ps = a.params;
    if (a.name == "K" && ps.size() == 1 && ps[0] >= 2) return qec_complete(ps[0]);
    if (a.name == "C" && ps.size() == 1 && ps[0] >= 3) return qec_cycle(ps[0]);
    if (a.name == "P" && ps.size() == 1 && ps[0] == 2) return qec_complete(2);
    if (a.name == "P" && ps.size() == 1 && ps[0] == 3) return qec_complete_bipartite(1, 2);
    if (a.name == "Kb" && ps.size() == 2 && ps[0] >= 1 && ps[1] >= 1) return qec_complete_bipartite(ps[0], ps[1]);
    if (a.name == "star" && ps.size() == 1 && ps[0] >= 1) return qec_complete_bipartite(1, ps[0]);
    if (a.name == "wheel" && ps.size() == 1 && ps[0] >= 3) return qec_wheel(ps[0]);
    if (a.name == "friendship" && ps.size() == 1 && ps[0] >= 1) return qec_friendship(ps[0]);
    if (a.name == "T" && ps.size() == 1 && ps[0] == 3) return qec_complete(3);
    if (auto p = named_srg(a)) return qec_srg(*p);
    return std::nullopt;
}

std::optional<FormulaValue> match_join(const Expr& l, const Expr& r) {
    auto one_param = [](const Expr& e, std::string_view name) -> std::optional<std::int64_t> {
        if (auto* a = as_atom(e, name, 1); a && params_ok(*a)) return a->params[0];
        return std::nullopt;
    };
    // Patterns with a dedicated closed form, tried in both operand orders.
    for (int swap = 0; swap < 2; ++swap) {
        const Expr& x = swap ? r : l;
        const Expr& y = swap ? l : r;
        if (auto a = one_param(x, "Kbar"), b = one_param(y, "Kbar"); a && b && *a >= 1 && *b >= 1)
            return qec_complete_bipartite(*a, *b);
        if (auto n = one_param(x, "K"), m = one_param(y, "Kbar"); n && m && *m >= 1) {
            if (*n >= 2) return qec_complete_split(*m, *n);
            if (*n == 1) return qec_complete_bipartite(1, *m);
        }
        if (auto* c = std::get_if<Copies>(&x.node); c && c->k >= 1 && as_atom(*c->arg, "K", 1) &&
                                                    one_param(*c->arg, "K") == 2 && one_param(y, "K") == 1)
            return qec_friendship(c->k);
        if (auto n = one_param(x, "C"); n && *n >= 3) {
            if (auto m = one_param(y, "K"); m && *m == 1) return qec_wheel(*n);
            if (auto m = one_param(y, "K"); m && *m >= 2) return qec_cycle_join_complete(*n, *m);
            if (auto m = one_param(y, "Kbar"); m && *m >= 2) return qec_cycle_join_empty(*n, *m);
        }
    }
    auto a = regular_part(l);
    auto b = regular_part(r);
    if (a && b) return qec_join_regular(*a, *b);
    return std::nullopt;
}

}  // namespace

std::optional<FormulaValue> match_formula(const Expr& e) {
    try {
        if (auto* b = std::get_if<Binary>(&e.node); b && b->op == BinaryOp::join) return match_join(*b->lhs, *b->rhs);
        if (auto* u = std::get_if<Unary>(&e.node)) {
            if (u->op == UnaryOp::double_graph || u->op == UnaryOp::lex2) {
                auto inner = match_formula(*u->arg);
                if (!inner) return std::nullopt;
                return u->op == UnaryOp::double_graph ? qec_double_formula(*inner) : qec_lex2_formula(*inner);
            }
        }
        if (auto* c = std::get_if<Copies>(&e.node); c && c->k == 1) return match_formula(*c->arg);
        if (auto a = normalize_srg_form(e)) return match_atom(*a);
    } catch (const InvalidArgument&) {
        // Parameters outside a formula's range: no closed form.
    }
    return std::nullopt;
}

}  // namespace qec::expr

#include "qec/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qec/errors.hpp"
#include "qec/expr.hpp"
#include "qec/metric.hpp"
#include "qec/random.hpp"
#include "qec/spectral.hpp"

namespace qec::report {

using Json = nlohmann::ordered_json;

std::string format_number(double x) {
    if (std::abs(x) < 5e-13) x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

double rounded(double x) { return std::stod(format_number(x)); }

Json number(double x) { return Json(rounded(x)); }

Json formula_value_json(const FormulaValue& f) {
    if (f.exact && !f.exact->is_integer()) return f.exact->str();
    return number(f.value);
}

std::string formula_value_text(const FormulaValue& f) {
    if (f.exact && !f.exact->is_integer()) return f.exact->str() + " (" + format_number(f.value) + ")";
    return format_number(f.value);
}

Json grouped_json(const std::vector<std::pair<double, std::size_t>>& groups) {
    Json out = Json::array();
    for (auto [v, m] : groups) out.push_back(Json{{"value", rounded(v)}, {"multiplicity", m}});
    return out;
}

std::string grouped_text(const std::vector<std::pair<double, std::size_t>>& groups) {
    std::string out = "{";
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) out += ", ";
        out += format_number(groups[i].first) + " (" + std::to_string(groups[i].second) + ")";
    }
    return out + "}";
}

Graph build(const std::string& text, const EvalOptions& opts) {
    auto e = expr::parse(text);
    Graph g = expr::eval_expr(*e, opts.base_dir);
    if (g.order() > opts.max_vertices)
        throw DomainError("graph has " + std::to_string(g.order()) + " vertices, above the cap of " +
                          std::to_string(opts.max_vertices));
    return g;
}

}  // namespace

MethodChoice parse_method(std::string_view name) {
    if (name == "auto") return MethodChoice::automatic;
    if (name == "compression") return MethodChoice::compression;
    if (name == "stationary") return MethodChoice::stationary;
    if (name == "diam2") return MethodChoice::diam2;
    throw InvalidArgument("unknown method '" + std::string(name) + "' (expected auto, compression, stationary or diam2)");
}

// ---------------------------------------------------------------------------
// eval

EvalReport evaluate_graph(std::string label, const Graph& g, std::optional<FormulaValue> formula,
                          const EvalOptions& opts) {
    if (g.order() > opts.max_vertices)
        throw DomainError("graph has " + std::to_string(g.order()) + " vertices, above the cap of " +
                          std::to_string(opts.max_vertices));
    const auto d = distance_matrix(g);

    EvalReport r;
    r.expr = std::move(label);
    r.n = g.order();
    r.m = g.size();
    r.diameter = d.max();
    switch (opts.method) {
        case MethodChoice::automatic: r.qec = qec(g); break;
        case MethodChoice::compression: r.qec = qec_compression(d); break;
        case MethodChoice::stationary: r.qec = qec_stationary(g); break;
        case MethodChoice::diam2: r.qec = qec_diam2(g); break;
    }
    r.formula = std::move(formula);
    const auto ds = sym_eigenvalues(to_matrix(d));
    r.delta1 = ds.largest();
    r.delta2 = ds.second();
    r.lambda_min = lambda_min(g);
    r.srg = srg_parameters(g);

    if (r.qec.value < r.delta2 - 1e-8 || r.qec.value >= r.delta1)
        throw Error("QEC " + format_number(r.qec.value) + " outside [delta2, delta1) = [" + format_number(r.delta2) +
                    ", " + format_number(r.delta1) + ")");
    return r;
}

EvalReport evaluate(const std::string& text, const EvalOptions& opts) {
    auto e = expr::parse(text);
    Graph g = expr::eval_expr(*e, opts.base_dir);
    return evaluate_graph(text, g, expr::match_formula(*e), opts);
}

std::string to_json(const EvalReport& r, bool with_witness) {
    Json j;
    j["expr"] = r.expr;
    j["n"] = r.n;
    j["m"] = r.m;
    j["diameter"] = r.diameter;
    Json q;
    q["value"] = number(r.qec.value);
    q["method"] = std::string(to_string(r.qec.method));
    if (with_witness && r.qec.witness) {
        Json w = Json::array();
        for (double x : *r.qec.witness) w.push_back(number(x));
        q["witness"] = std::move(w);
    } else {
        q["witness"] = nullptr;
    }
    j["qec"] = std::move(q);
    if (r.formula)
        j["formula"] = Json{{"value", formula_value_json(*r.formula)}, {"source", r.formula->source}};
    else
        j["formula"] = Json{{"value", nullptr}, {"source", nullptr}};
    j["delta1"] = number(r.delta1);
    j["delta2"] = number(r.delta2);
    j["lambda_min"] = number(r.lambda_min);
    if (r.srg)
        j["srg"] = Json::array({r.srg->n, r.srg->r, r.srg->e, r.srg->f});
    else
        j["srg"] = nullptr;
    return j.dump() + "\n";
}

std::string to_text(const EvalReport& r, bool with_witness) {
    std::ostringstream out;
    out << "expr:       " << r.expr << '\n'
        << "vertices:   " << r.n << '\n'
        << "edges:      " << r.m << '\n'
        << "diameter:   " << r.diameter << '\n'
        << "qec:        " << format_number(r.qec.value) << "  [" << to_string(r.qec.method) << "]\n"
        << "formula:    "
        << (r.formula ? formula_value_text(*r.formula) + "  [" + r.formula->source + "]" : std::string("none")) << '\n'
        << "delta1:     " << format_number(r.delta1) << '\n'
        << "delta2:     " << format_number(r.delta2) << '\n'
        << "lambda_min: " << format_number(r.lambda_min) << '\n'
        << "srg:        ";
    if (r.srg)
        out << "(" << r.srg->n << ", " << r.srg->r << ", " << r.srg->e << ", " << r.srg->f << ")\n";
    else
        out << "none\n";
    if (with_witness && r.qec.witness) {
        out << "witness:   ";
        for (double x : *r.qec.witness) out << ' ' << format_number(x);
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// spectrum

SpectrumReport spectrum(const std::string& text, const EvalOptions& opts) {
    const Graph g = build(text, opts);
    SpectrumReport r;
    r.expr = text;
    r.adjacency = adjacency_spectrum(g).grouped();
    if (is_connected(g)) r.distance = distance_spectrum(g).grouped();
    return r;
}

std::string to_json(const SpectrumReport& r) {
    Json j;
    j["expr"] = r.expr;
    j["adjacency"] = grouped_json(r.adjacency);
    j["distance"] = r.distance ? grouped_json(*r.distance) : Json(nullptr);
    return j.dump() + "\n";
}

std::string to_text(const SpectrumReport& r) {
    std::ostringstream out;
    out << "expr:      " << r.expr << '\n'
        << "adjacency: " << grouped_text(r.adjacency) << '\n'
        << "distance:  " << (r.distance ? grouped_text(*r.distance) : std::string("n/a (disconnected)")) << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// verify

namespace {

struct Sweep {
    VerifySummary summary;

    void add(std::string label, double formula, double numeric) {
        const double dev = std::abs(formula - numeric);
        summary.max_deviation = std::max(summary.max_deviation, dev);
        if (!(dev <= kMethodAgreement)) ++summary.failures;
        summary.cases.push_back({std::move(label), formula, numeric});
    }

    void add_expr(const std::string& text) {
        auto e = expr::parse(text);
        auto f = expr::match_formula(*e);
        if (!f) throw Error("no closed form for '" + text + "'");
        add(text, f->value, qec(expr::eval_expr(*e)).value);
    }
};

std::vector<std::pair<std::string, Graph>> named_small_graphs(std::size_t max_order) {
    std::vector<std::pair<std::string, Graph>> out;
    auto push = [&](std::string name, Graph g) {
        if (g.order() <= max_order) out.emplace_back(std::move(name), std::move(g));
    };
    for (std::size_t n = 2; n <= 6; ++n) push("K(" + std::to_string(n) + ")", complete(n));
    for (std::size_t n = 3; n <= 8; ++n) push("C(" + std::to_string(n) + ")", cycle(n));
    for (std::size_t n = 3; n <= 7; ++n) push("P(" + std::to_string(n) + ")", path(n));
    push("Kb(2,3)", complete_bipartite(2, 3));
    push("wheel(5)", join(cycle(5), complete(1)));
    push("friendship(3)", join(copies(3, complete(2)), complete(1)));
    push("petersen", petersen());
    push("shrikhande", shrikhande());
    push("clebsch", clebsch());
    for (std::size_t n = 4; n <= 6; ++n) push("T(" + std::to_string(n) + ")", triangular(n));
    for (std::size_t n = 2; n <= 4; ++n) push("grid(" + std::to_string(n) + ")", grid(n));
    return out;
}

void verify_product(Sweep& s, const VerifyOptions& o, bool doubled) {
    Rng rng(o.seed);
    const std::size_t max_n = static_cast<std::size_t>(std::max<std::int64_t>(3, o.max));
    auto check = [&](const std::string& label, const Graph& g) {
        const double q = qec(g).value;
        if (doubled)
            s.add("double(" + label + ")", qec_double_formula(q).value, qec(double_graph(g)).value);
        else
            s.add("lex2(" + label + ")", qec_lex2_formula(q).value, qec(lex_k2(g)).value);
    };
    for (std::size_t i = 0; i < o.samples; ++i) {
        const std::size_t n = rng.between(3, max_n);
        const double p = 0.1 + 0.6 * rng.unit();
        check("random#" + std::to_string(i) + "[n=" + std::to_string(n) + "]", random_connected_graph(rng, n, p));
    }
    for (const auto& [name, g] : named_small_graphs(25)) check(name, g);
}

struct SrgEntry {
    std::string name;
    Graph graph;
    SrgFamily family;
    std::int64_t param;
};

std::vector<SrgEntry> constructed_srgs() {
    std::vector<SrgEntry> out;
    out.push_back({"C(5)", cycle(5), SrgFamily::cycle5, 0});
    for (std::int64_t n = 4; n <= 8; ++n)
        out.push_back({"T(" + std::to_string(n) + ")", triangular(static_cast<std::size_t>(n)), SrgFamily::triangular, n});
    for (std::int64_t n = 2; n <= 5; ++n)
        out.push_back({"grid(" + std::to_string(n) + ")", grid(static_cast<std::size_t>(n)), SrgFamily::grid, n});
    out.push_back({"petersen", petersen(), SrgFamily::petersen, 0});
    out.push_back({"shrikhande", shrikhande(), SrgFamily::shrikhande, 0});
    out.push_back({"clebsch", clebsch(), SrgFamily::clebsch, 0});
    out.push_back({"schlafli", schlafli(), SrgFamily::schlafli, 0});
    for (int i = 1; i <= 3; ++i) out.push_back({"chang(" + std::to_string(i) + ")", chang(i), SrgFamily::chang, 0});
    out.push_back({"hoffman_singleton", hoffman_singleton(), SrgFamily::hoffman_singleton, 0});
    return out;
}

}  // namespace

std::vector<std::string> verify_families() {
    return {"complete", "bipartite", "cycle", "split", "friendship", "wheel", "cycle-join-complete",
            "cycle-join-empty", "regular-join", "double", "lex2", "srg", "srg-join", "methods"};
}

VerifySummary verify(const VerifyOptions& o) {
    Sweep s;
    s.summary.family = o.family;
    const std::int64_t max = o.max;
    auto str = [](std::int64_t x) { return std::to_string(x); };

    if (o.family == "complete") {
        for (std::int64_t n = 2; n <= max; ++n) s.add_expr("K(" + str(n) + ")");
    } else if (o.family == "bipartite") {
        for (std::int64_t m = 1; m <= max; ++m)
            for (std::int64_t n = 1; n <= max; ++n) s.add_expr("Kb(" + str(m) + "," + str(n) + ")");
    } else if (o.family == "cycle") {
        for (std::int64_t n = 3; n <= max; ++n) s.add_expr("C(" + str(n) + ")");
    } else if (o.family == "split") {
        for (std::int64_t n = 2; n <= max; ++n)
            for (std::int64_t m = 1; m <= max; ++m) s.add_expr("K(" + str(n) + ") + Kbar(" + str(m) + ")");
    } else if (o.family == "friendship") {
        for (std::int64_t n = 1; n <= max; ++n) s.add_expr(str(n) + "*K(2) + K(1)");
    } else if (o.family == "wheel") {
        for (std::int64_t n = 3; n <= max; ++n) s.add_expr("wheel(" + str(n) + ")");
    } else if (o.family == "cycle-join-complete") {
        for (std::int64_t n = 3; n <= max; ++n)
            for (std::int64_t m = 1; m <= max; ++m) s.add_expr("C(" + str(n) + ") + K(" + str(m) + ")");
    } else if (o.family == "cycle-join-empty") {
        for (std::int64_t n = 3; n <= max; ++n)
            for (std::int64_t m = 2; m <= max; ++m) s.add_expr("C(" + str(n) + ") + Kbar(" + str(m) + ")");
    } else if (o.family == "regular-join") {
        std::vector<std::pair<std::string, RegularPart>> parts;
        for (std::int64_t n = 1; n <= 4; ++n) {
            parts.emplace_back("K(" + str(n) + ")", complete_part(n));
            parts.emplace_back("Kbar(" + str(n) + ")", empty_part(n));
        }
        for (std::int64_t n = 3; n <= 7; ++n) parts.emplace_back("C(" + str(n) + ")", cycle_part(n));
        for (std::int64_t k = 2; k <= 4; ++k) parts.emplace_back(str(k) + "*K(2)", copies_part(k, complete_part(2)));
        parts.emplace_back("petersen", srg_part(srg_family_params(SrgFamily::petersen)));
        parts.emplace_back("shrikhande", srg_part(srg_family_params(SrgFamily::shrikhande)));
        parts.emplace_back("clebsch", srg_part(srg_family_params(SrgFamily::clebsch)));
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i; j < parts.size(); ++j) {
                if (parts[i].second.n + parts[j].second.n > 60) continue;
                const std::string text = parts[i].first + " + " + parts[j].first;
                s.add(text, qec_join_regular(parts[i].second, parts[j].second).value,
                      qec(expr::eval_expr(*expr::parse(text))).value);
            }
    } else if (o.family == "double" || o.family == "lex2") {
        verify_product(s, o, o.family == "double");
    } else if (o.family == "srg") {
        for (const auto& e : constructed_srgs()) {
            auto p = srg_parameters(e.graph);
            if (!p) throw Error(e.name + " is not strongly regular");
            s.add(e.name, qec_srg(*p).value, qec(e.graph).value);
        }
    } else if (o.family == "srg-join") {
        for (const auto& e : constructed_srgs())
            for (auto partner : {JoinPartner::complete, JoinPartner::empty})
                for (std::int64_t m = 1; m <= max; ++m) {
                    if (e.graph.order() + static_cast<std::size_t>(m) > 60) continue;
                    if (partner == JoinPartner::empty && m < 2 && e.family != SrgFamily::triangular) continue;
                    const Graph other = partner == JoinPartner::complete ? complete(static_cast<std::size_t>(m))
                                                                         : empty(static_cast<std::size_t>(m));
                    const std::string label = e.name + (partner == JoinPartner::complete ? " + K(" : " + Kbar(") + str(m) + ")";
                    s.add(label, qec_srg_join_tables(e.family, e.param, partner, m).value, qec(join(e.graph, other)).value);
                }
    } else if (o.family == "methods") {
        Rng rng(o.seed);
        const std::size_t max_n = static_cast<std::size_t>(std::max<std::int64_t>(3, max));
        for (std::size_t i = 0; i < o.samples; ++i) {
            const std::size_t n = rng.between(3, max_n);
            const Graph g = random_connected_graph(rng, n, 0.1 + 0.6 * rng.unit());
            const std::string label = "random#" + std::to_string(i) + "[n=" + std::to_string(n) + "]";
            const double c = qec_compression(g).value;
            s.add(label + " stationary", c, qec_stationary(g).value);
            if (diameter(g) <= 2) s.add(label + " diam2", c, qec_diam2(g).value);
        }
    } else {
        std::string known;
        for (const auto& f : verify_families()) known += " " + f;
        throw InvalidArgument("unknown family '" + o.family + "'; known:" + known);
    }
    return s.summary;
}

std::string to_text(const VerifySummary& s) {
    std::ostringstream out;
    for (const auto& c : s.cases) {
        const double dev = std::abs(c.formula - c.numeric);
        out << (dev <= kMethodAgreement ? "ok   " : "FAIL ") << c.label << "  formula=" << format_number(c.formula)
            << "  numeric=" << format_number(c.numeric) << "  dev=" << format_number(dev) << '\n';
    }
    char dev[32];
    std::snprintf(dev, sizeof dev, "%.3g", s.max_deviation);
    out << "family " << s.family << ": " << s.cases.size() << " cases, max deviation " << dev << ", "
        << s.failures << " failure(s)\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// published examples

namespace {

constexpr double kFormulaTol = 1e-9;
constexpr double kNumericTol = 1e-7;

// Brute-force isomorphism test for graphs of at most nine vertices.
bool isomorphic_small(const Graph& a, const Graph& b) {
    const std::size_t n = a.order();
    if (n != b.order() || a.size() != b.size()) return false;
    if (n > 9) throw InvalidArgument("isomorphism check is limited to 9 vertices");
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (std::size_t u = 0; ok && u < n; ++u) {
            if (a.degree(u) != b.degree(perm[u])) ok = false;
            for (std::size_t v = u + 1; ok && v < n; ++v) ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

class TableBuilder {
public:
    // A QEC value: `expected` as printed, recomputed through the closed-form layer
    // (match_formula unless `formula` is given) and numerically when the graph is
    // small enough to build.
    void qec_row(const std::string& label, const std::string& text, double expected, const std::string& published,
                 std::optional<FormulaValue> formula = std::nullopt) {
        TableRow row{label, published, "-", "-", true};
        auto e = expr::parse(text);
        if (!formula) formula = expr::match_formula(*e);
        if (formula) {
            row.formula = format_number(formula->value);
            row.pass = row.pass && std::abs(formula->value - expected) <= kFormulaTol;
        } else {
            row.pass = false;
        }
        const Graph g = expr::eval_expr(*e);
        if (g.order() <= 60) {
            const double q = qec(g).value;
            row.numeric = format_number(q);
            row.pass = row.pass && std::abs(q - expected) <= kNumericTol;
        }
        rows_.push_back(std::move(row));
    }

    // Formula-only value (graph not constructed).
    void formula_row(const std::string& label, const FormulaValue& formula, double expected, const std::string& published) {
        rows_.push_back({label, published, format_number(formula.value), "-",
                         std::abs(formula.value - expected) <= kFormulaTol});
    }

    // Adjacency spectrum of a constructed graph against a printed multiplicity list.
    void spectrum_row(const std::string& label, const std::string& text,
                      const std::vector<std::pair<double, std::size_t>>& expected) {
        const auto got = adjacency_spectrum(expr::eval_expr(*expr::parse(text))).grouped();
        bool ok = got.size() == expected.size();
        for (std::size_t i = 0; ok && i < got.size(); ++i)
            ok = std::abs(got[i].first - expected[i].first) <= 1e-8 && got[i].second == expected[i].second;
        rows_.push_back({label, grouped_text(expected), "-", grouped_text(got), ok});
    }

    void srg_row(const std::string& label, const std::string& text, SrgParams expected) {
        const auto got = srg_parameters(expr::eval_expr(*expr::parse(text)));
        auto show = [](const SrgParams& p) {
            return "(" + std::to_string(p.n) + "," + std::to_string(p.r) + "," + std::to_string(p.e) + "," +
                   std::to_string(p.f) + ")";
        };
        rows_.push_back({label, show(expected), "-", got ? show(*got) : "none", got && *got == expected});
    }

    void scalar_row(const std::string& label, double formula, std::optional<double> numeric, double expected,
                    const std::string& published) {
        TableRow row{label, published, format_number(formula), "-", std::abs(formula - expected) <= kFormulaTol};
        if (numeric) {
            row.numeric = format_number(*numeric);
            row.pass = row.pass && std::abs(*numeric - expected) <= kNumericTol;
        }
        rows_.push_back(std::move(row));
    }

    // Structural identity between two small expressions, checked up to isomorphism.
    void iso_row(const std::string& label, const std::string& lhs, const std::string& rhs, const std::string& published) {
        const Graph a = expr::eval_expr(*expr::parse(lhs)), b = expr::eval_expr(*expr::parse(rhs));
        const bool same = isomorphic_small(a, b);
        rows_.push_back({label, published, "-", same ? "isomorphic" : "not isomorphic", same});
    }

    void fact_row(const std::string& label, const std::string& published, std::string computed, bool pass) {
        rows_.push_back({label, published, "-", std::move(computed), pass});
    }

    std::vector<TableRow> take() { return std::move(rows_); }

private:
    std::vector<TableRow> rows_;
};

std::string s(std::int64_t x) { return std::to_string(x); }

std::string frac(std::int64_t num, std::int64_t den) { return Rational(num, den).str(); }

double ratio(std::int64_t num, std::int64_t den) { return static_cast<double>(num) / static_cast<double>(den); }

// Printed piecewise forms for SRG joins: value `flat` for m below the threshold,
// (a m - b)/(m + c) from it on.
struct PiecewiseJoin {
    std::int64_t flat_until;  // last m with the flat value, 0 if none
    double flat;
    std::string flat_text;
    std::int64_t a, b, c;
};

}  // namespace

std::vector<TableRow> published_examples() {
    TableBuilder t;
    const double sqrt5 = std::sqrt(5.0);
    const double pi = std::acos(-1.0);

    // Baseline values.
    t.qec_row("QEC(K_2)", "K(2)", -1, "-1");
    t.qec_row("QEC(P_3)", "P(3)", -2.0 / 3, "-2/3");
    for (std::int64_t n = 2; n <= 8; ++n) t.qec_row("QEC(K_" + s(n) + ")", "K(" + s(n) + ")", -1, "-1");
    for (std::int64_t m = 1; m <= 8; ++m)
        for (std::int64_t n = m; n <= 8; ++n)
            t.qec_row("QEC(K_{" + s(m) + "," + s(n) + "})", "Kbar(" + s(m) + ") + Kbar(" + s(n) + ")",
                      ratio(2 * (m * n - m - n), m + n), "2(mn-m-n)/(m+n) = " + frac(2 * (m * n - m - n), m + n));

    // Cycles.
    for (std::int64_t n = 3; n <= 15; ++n) {
        if (n % 2 == 0) {
            t.qec_row("QEC(C_" + s(n) + ")", "C(" + s(n) + ")", 0.0, "0");
        } else {
            const double c = std::cos(pi / static_cast<double>(n));
            const double v = -1.0 / (4.0 * c * c);
            t.qec_row("QEC(C_" + s(n) + ")", "C(" + s(n) + ")", v, "-1/(4cos^2(pi/n)) = " + format_number(v));
        }
    }
    for (std::int64_t n = 3; n <= 9; ++n) {
        const double x = std::sin(pi / (2.0 * static_cast<double>(n)));
        const double v = n % 2 == 0 ? -2.0 : -2.0 + 4.0 * x * x;
        t.scalar_row("lambda_min(C_" + s(n) + ")", lambda_min_cycle(n), lambda_min(cycle(static_cast<std::size_t>(n))), v,
                     n % 2 == 0 ? "-2" : "-2+4sin^2(pi/2n) = " + format_number(v));
    }
    t.scalar_row("lambda_min(C_5) closed form", lambda_min_cycle(5), lambda_min(cycle(5)), -(1 + sqrt5) / 2, "-(1+sqrt5)/2");

    // Complete split graphs, friendship graphs, wheels, cycle joins.
    for (std::int64_t m = 1; m <= 10; ++m)
        t.qec_row("QEC(K_{1,1," + s(m) + "})", "K(2) + Kbar(" + s(m) + ")", ratio(m - 4, m + 2),
                  "(m-4)/(m+2) = " + frac(m - 4, m + 2));
    for (std::int64_t n = 2; n <= 4; ++n)
        for (std::int64_t m = 1; m <= 4; ++m)
            t.qec_row("QEC(K_" + s(n) + "+Kbar_" + s(m) + ")", "K(" + s(n) + ") + Kbar(" + s(m) + ")",
                      ratio(m * n - m - 2 * n, m + n), "(mn-m-2n)/(m+n) = " + frac(m * n - m - 2 * n, m + n));
    for (std::int64_t n = 1; n <= 6; ++n)
        t.qec_row("QEC(F_" + s(n) + ")", s(n) + "*K(2) + K(1)", ratio(-3, 2 * n + 1), "-3/(2n+1) = " + frac(-3, 2 * n + 1));
    for (std::int64_t n = 3; n <= 12; ++n) {
        const double x = std::sin(pi / (2.0 * static_cast<double>(n)));
        const double v = n % 2 == 0 ? 0.0 : -4.0 * x * x;
        t.qec_row("QEC(W_" + s(n) + ")", "C(" + s(n) + ") + K(1)", v,
                  n % 2 == 0 ? "0" : "-4sin^2(pi/2n) = " + format_number(v));
    }
    // C_{2k} + K_m and C_{2k-1} + K_m in the printed parametrisation.
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::int64_t m = 1; m <= 5; ++m) {
            const std::int64_t num = 2 * m * k - 4 * m - 2 * k;
            const bool flat = m * k - 2 * m - k <= 0;
            t.qec_row("QEC(C_" + s(2 * k) + "+K_" + s(m) + ")", "C(" + s(2 * k) + ") + K(" + s(m) + ")",
                      flat ? 0.0 : ratio(num, m + 2 * k), flat ? "0" : "(2mn-4m-2n)/(m+2n) = " + frac(num, m + 2 * k));
        }
    for (std::int64_t k = 2; k <= 4; ++k)
        for (std::int64_t m = 1; m <= 5; ++m) {
            const double x = std::sin(pi / (2.0 * static_cast<double>(2 * k - 1)));
            const double v = std::max(-4.0 * x * x, ratio(2 * m * k - 5 * m - 2 * k + 1, m + 2 * k - 1));
            t.qec_row("QEC(C_" + s(2 * k - 1) + "+K_" + s(m) + ")", "C(" + s(2 * k - 1) + ") + K(" + s(m) + ")", v,
                      "max{-4sin^2(pi/(2(2n-1))), (2mn-5m-2n+1)/(m+2n-1)} = " + format_number(v));
        }
    for (std::int64_t n = 3; n <= 6; ++n)
        for (std::int64_t m = 2; m <= 4; ++m)
            t.qec_row("QEC(C_" + s(n) + "+Kbar_" + s(m) + ")", "C(" + s(n) + ") + Kbar(" + s(m) + ")",
                      ratio(2 * m * n - 4 * m - 2 * n, m + n),
                      "(2mn-4m-2n)/(m+n) = " + frac(2 * m * n - 4 * m - 2 * n, m + n));
    t.qec_row("QEC(C_3+Kbar_2)", "C(3) + Kbar(2)", -0.4, "-2/5");
    t.qec_row("QEC(C_3+Kbar_3)", "C(3) + Kbar(3)", 0.0, "0");
    t.qec_row("QEC(C_4+Kbar_2)", "C(4) + Kbar(2)", 0.0, "0");

    // Double graphs and lexicographic products with K_2.
    t.qec_row("QEC(Double(K_2)) = QEC(C_4)", "double(K(2))", 0.0, "0");
    t.qec_row("QEC(Double(P_3)) = QEC(K_{2,4})", "double(P(3))", 2.0 / 3, "2/3");
    for (std::int64_t n = 3; n <= 6; ++n)
        t.qec_row("QEC(Double(K_" + s(n) + "))", "double(K(" + s(n) + "))", 0.0, "2QEC(K_n)+2 = 0");
    t.qec_row("QEC(K_2 > K_2) = QEC(K_4)", "lex2(K(2))", -1.0, "-1");
    t.qec_row("QEC(K_3 > K_2) = QEC(K_6)", "lex2(K(3))", -1.0, "-1");
    t.qec_row("QEC(P_3 > K_2)", "lex2(P(3))", -1.0 / 3, "2QEC(P_3)+1 = -1/3");
    t.qec_row("QEC(Double(Petersen))", "double(petersen)", 2.0, "2QEC+2 = 2");

    // Structural identities behind the examples.
    t.iso_row("Double(K_2) = C_4", "double(K(2))", "C(4)", "C_4");
    t.iso_row("Double(P_3) = K_{2,4}", "double(P(3))", "Kb(2, 4)", "K_{2,4}");
    t.iso_row("Double(K_3) = K_6 minus 3K_2", "double(K(3))", "complement(3*K(2))", "K_6\\3K_2");
    t.iso_row("K_2 > K_2 = K_4", "lex2(K(2))", "K(4)", "K_4");
    for (std::int64_t n = 3; n <= 4; ++n)
        t.iso_row("K_" + s(n) + " > K_2 = K_" + s(2 * n), "lex2(K(" + s(n) + "))", "K(" + s(2 * n) + ")", "K_" + s(2 * n));
    t.iso_row("P_3 > K_2 = K_6 minus C_4", "lex2(P(3))", "complement(union(C(4), Kbar(2)))", "K_6\\C_4");
    t.iso_row("T(4) = K_{2,2,2}", "T(4)", "Kbar(2) + Kbar(2) + Kbar(2)", "K_{2,2,2}");
    t.iso_row("L(K_4) = T(4)", "line(K(4))", "T(4)", "T(4)");
    t.iso_row("K_2 x K_2 = C_4", "cart(K(2), K(2))", "C(4)", "C_4");
    t.iso_row("W_5 = C_5 + K_1", "wheel(5)", "C(5) + K(1)", "C_5+K_1");
    t.iso_row("F_3 = 3K_2 + K_1", "friendship(3)", "3*K(2) + K(1)", "3K_2+K_1");
    for (std::int64_t n = 1; n <= 4; ++n) {
        const std::size_t order = expr::eval_expr(*expr::parse("friendship(" + s(n) + ")")).order();
        t.fact_row("|V(F_" + s(n) + ")|", s(2 * n + 1), std::to_string(order), order == static_cast<std::size_t>(2 * n + 1));
    }
    for (std::int64_t n = 2; n <= 6; ++n) {
        const std::size_t d = diameter(complete(static_cast<std::size_t>(n)));
        t.fact_row("diam(K_" + s(n) + ")", "1", std::to_string(d), d == 1);
    }
    t.fact_row("diam(Petersen)", "2", std::to_string(diameter(petersen())), diameter(petersen()) == 2);
    for (std::int64_t n = 3; n <= 6; ++n) {
        const bool srg = srg_parameters(complete(static_cast<std::size_t>(n))).has_value();
        t.fact_row("K_" + s(n) + " strongly regular?", "no", srg ? "yes" : "no", !srg);
    }
    for (const char* text : {"P(4)", "P(7)", "P(10)"}) {
        const bool none = !expr::match_formula(*expr::parse(text)).has_value();
        t.fact_row(std::string("closed form for QEC(") + text + ")", "not known", none ? "none" : "claimed", none);
    }
    t.srg_row("params(complement of folded 5-cube)", "clebsch", {16, 10, 6, 6});
    t.srg_row("params(Seidel switch of T(8))", "chang(1)", {28, 12, 6, 4});
    t.scalar_row("lambda_min(Clebsch)", srg_lambda_min({16, 10, 6, 6}), lambda_min(clebsch()), -2.0, "-2");

    // Strongly regular graphs: parameters, spectra, QE constants.
    t.srg_row("params(C_5)", "C(5)", {5, 2, 0, 1});
    for (std::int64_t n = 4; n <= 8; ++n)
        t.srg_row("params(T(" + s(n) + "))", "T(" + s(n) + ")", {n * (n - 1) / 2, 2 * (n - 2), n - 2, 4});
    for (std::int64_t n = 3; n <= 5; ++n)
        t.srg_row("params(K_" + s(n) + "xK_" + s(n) + ")", "grid(" + s(n) + ")", {n * n, 2 * (n - 1), n - 2, 2});
    t.srg_row("params(Petersen)", "petersen", {10, 3, 0, 1});
    t.srg_row("params(Shrikhande)", "shrikhande", {16, 6, 2, 2});
    t.srg_row("params(Clebsch)", "clebsch", {16, 10, 6, 6});
    t.srg_row("params(Schlafli)", "schlafli", {27, 16, 10, 8});
    for (int i = 1; i <= 3; ++i) t.srg_row("params(Chang " + s(i) + ")", "chang(" + s(i) + ")", {28, 12, 6, 4});
    t.srg_row("params(Hoffman-Singleton)", "hoffman_singleton", {50, 7, 0, 1});

    for (std::int64_t n = 5; n <= 8; ++n)
        t.spectrum_row("ev(T(" + s(n) + "))", "T(" + s(n) + ")",
                       {{2.0 * (n - 2), 1}, {n - 4.0, static_cast<std::size_t>(n - 1)}, {-2.0, static_cast<std::size_t>(n * (n - 3) / 2)}});
    for (std::int64_t n = 3; n <= 5; ++n)
        t.spectrum_row("ev(K_" + s(n) + "xK_" + s(n) + ")", "grid(" + s(n) + ")",
                       {{2.0 * (n - 1), 1}, {n - 2.0, static_cast<std::size_t>(2 * n - 2)}, {-2.0, static_cast<std::size_t>((n - 1) * (n - 1))}});
    t.spectrum_row("ev(Petersen)", "petersen", {{3, 1}, {1, 5}, {-2, 4}});
    t.spectrum_row("ev(Shrikhande)", "shrikhande", {{6, 1}, {2, 6}, {-2, 9}});
    t.spectrum_row("ev(Clebsch)", "clebsch", {{10, 1}, {2, 5}, {-2, 10}});
    t.spectrum_row("ev(Schlafli)", "schlafli", {{16, 1}, {4, 6}, {-2, 20}});
    for (int i = 1; i <= 3; ++i) t.spectrum_row("ev(Chang " + s(i) + ")", "chang(" + s(i) + ")", {{12, 1}, {4, 7}, {-2, 20}});
    t.spectrum_row("ev(Hoffman-Singleton)", "hoffman_singleton", {{7, 1}, {2, 28}, {-3, 21}});
    t.scalar_row("lambda_min(Higman-Sims) from (100,22,0,6)", srg_lambda_min({100, 22, 0, 6}), std::nullopt, -8, "-8");
    t.scalar_row("lambda_min(Suzuki) from (1782,416,100,96)", srg_lambda_min({1782, 416, 100, 96}), std::nullopt, -16, "-16");

    t.qec_row("QEC(C_5)", "C(5)", -(3 - sqrt5) / 2, "-(3-sqrt5)/2");
    for (std::int64_t n = 4; n <= 8; ++n) t.qec_row("QEC(T(" + s(n) + "))", "T(" + s(n) + ")", 0.0, "0");
    for (std::int64_t n = 2; n <= 5; ++n) t.qec_row("QEC(K_" + s(n) + "xK_" + s(n) + ")", "grid(" + s(n) + ")", 0.0, "0");
    t.qec_row("QEC(Petersen)", "petersen", 0.0, "0");
    t.qec_row("QEC(Shrikhande)", "shrikhande", 0.0, "0");
    t.qec_row("QEC(Clebsch)", "clebsch", 0.0, "0");
    t.qec_row("QEC(Schlafli)", "schlafli", 0.0, "0");
    for (int i = 1; i <= 3; ++i) t.qec_row("QEC(Chang " + s(i) + ")", "chang(" + s(i) + ")", 0.0, "0");
    t.qec_row("QEC(Hoffman-Singleton)", "hoffman_singleton", 1.0, "1");
    t.formula_row("QEC(Higman-Sims)", qec_srg({100, 22, 0, 6}), 6.0, "6");
    t.formula_row("QEC(Suzuki)", qec_srg({1782, 416, 100, 96}), 14.0, "14");

    // Joins with K_m and Kbar_m.
    t.qec_row("QEC(C_5+K_1)", "C(5) + K(1)", -(3 - sqrt5) / 2, "-(3-sqrt5)/2",
              qec_srg_join_tables(SrgFamily::cycle5, 0, JoinPartner::complete, 1));
    t.qec_row("QEC(C_5+K_2)", "C(5) + K(2)", -(3 - sqrt5) / 2, "-(3-sqrt5)/2",
              qec_srg_join_tables(SrgFamily::cycle5, 0, JoinPartner::complete, 2));
    for (std::int64_t m = 3; m <= 8; ++m)
        t.qec_row("QEC(C_5+K_" + s(m) + ")", "C(5) + K(" + s(m) + ")", ratio(m - 5, m + 5), "(m-5)/(m+5) = " + frac(m - 5, m + 5),
                  qec_srg_join_tables(SrgFamily::cycle5, 0, JoinPartner::complete, m));
    for (std::int64_t m = 2; m <= 8; ++m)
        t.qec_row("QEC(C_5+Kbar_" + s(m) + ")", "C(5) + Kbar(" + s(m) + ")", ratio(6 * m - 10, m + 5),
                  "(6m-10)/(m+5) = " + frac(6 * m - 10, m + 5), qec_srg_join_tables(SrgFamily::cycle5, 0, JoinPartner::empty, m));

    for (std::int64_t n = 4; n <= 7; ++n)
        for (std::int64_t m = 1; m <= 4; ++m) {
            const std::int64_t num = (n - 1) * (n * m - n - 4 * m), den = n * (n - 1) + 2 * m;
            const double v = std::max(0.0, ratio(num, den));
            t.qec_row("QEC(T(" + s(n) + ")+K_" + s(m) + ")", "T(" + s(n) + ") + K(" + s(m) + ")", v,
                      "max{0, (n-1)(nm-n-4m)/(n(n-1)+2m)} = " + (v > 0 ? frac(num, den) : "0"),
                      qec_srg_join_tables(SrgFamily::triangular, n, JoinPartner::complete, m));
            t.qec_row("QEC(T(" + s(n) + ")+Kbar_" + s(m) + ")", "T(" + s(n) + ") + Kbar(" + s(m) + ")", 0.0, "0",
                      qec_srg_join_tables(SrgFamily::triangular, n, JoinPartner::empty, m));
        }
    for (std::int64_t n = 2; n <= 5; ++n)
        for (std::int64_t m = 1; m <= 4; ++m) {
            const std::int64_t num = n * (n * m - n - 2 * m), den = n * n + m;
            const double v = std::max(0.0, ratio(num, den));
            t.qec_row("QEC(K_" + s(n) + "xK_" + s(n) + "+K_" + s(m) + ")", "grid(" + s(n) + ") + K(" + s(m) + ")", v,
                      "max{0, n(nm-n-2m)/(n^2+m)} = " + (v > 0 ? frac(num, den) : "0"),
                      qec_srg_join_tables(SrgFamily::grid, n, JoinPartner::complete, m));
            if (m >= 2) {
                const std::int64_t num2 = 2 * n * (n * m - n - m);
                t.qec_row("QEC(K_" + s(n) + "xK_" + s(n) + "+Kbar_" + s(m) + ")", "grid(" + s(n) + ") + Kbar(" + s(m) + ")",
                          ratio(num2, den), "2n(nm-n-m)/(n^2+m) = " + frac(num2, den),
                          qec_srg_join_tables(SrgFamily::grid, n, JoinPartner::empty, m));
            }
        }

    struct Named {
        std::string label;
        std::string text;
        SrgFamily family;
        std::int64_t order;
        PiecewiseJoin with_complete;
        PiecewiseJoin with_empty;
        std::int64_t max_m;
    };
    const std::vector<Named> named{
        {"Petersen", "petersen", SrgFamily::petersen, 10, {2, 0, "0", 5, 10, 10}, {1, 0, "0", 15, 20, 10}, 6},
        {"Shrikhande", "shrikhande", SrgFamily::shrikhande, 16, {2, 0, "0", 8, 16, 16}, {1, 0, "0", 24, 32, 16}, 6},
        {"Clebsch", "clebsch", SrgFamily::clebsch, 16, {4, 0, "0", 4, 16, 16}, {1, 0, "0", 20, 32, 16}, 7},
        {"Schlafli", "schlafli", SrgFamily::schlafli, 27, {3, 0, "0", 9, 27, 27}, {1, 0, "0", 36, 54, 27}, 6},
        {"Chang 1", "chang(1)", SrgFamily::chang, 28, {2, 0, "0", 14, 28, 28}, {1, 0, "0", 42, 56, 28}, 5},
        {"Chang 2", "chang(2)", SrgFamily::chang, 28, {2, 0, "0", 14, 28, 28}, {1, 0, "0", 42, 56, 28}, 5},
        {"Chang 3", "chang(3)", SrgFamily::chang, 28, {2, 0, "0", 14, 28, 28}, {1, 0, "0", 42, 56, 28}, 5},
        {"Hoffman-Singleton", "hoffman_singleton", SrgFamily::hoffman_singleton, 50, {2, 1, "1", 41, 50, 50},
         {1, 1, "1", 91, 100, 50}, 6},
    };
    auto piecewise = [](const PiecewiseJoin& p, std::int64_t m) -> std::pair<double, std::string> {
        if (m <= p.flat_until) return {p.flat, p.flat_text};
        const std::int64_t num = p.a * m - p.b, den = m + p.c;
        return {ratio(num, den),
                "(" + s(p.a) + "m-" + s(p.b) + ")/(m+" + s(p.c) + ") = " + frac(num, den)};
    };
    for (const auto& g : named) {
        for (std::int64_t m = 1; m <= g.max_m; ++m) {
            auto [v, text] = piecewise(g.with_complete, m);
            t.qec_row("QEC(" + g.label + "+K_" + s(m) + ")", g.text + " + K(" + s(m) + ")", v, text,
                      qec_srg_join_tables(g.family, 0, JoinPartner::complete, m));
        }
        for (std::int64_t m = 2; m <= g.max_m; ++m) {
            auto [v, text] = piecewise(g.with_empty, m);
            t.qec_row("QEC(" + g.label + "+Kbar_" + s(m) + ")", g.text + " + Kbar(" + s(m) + ")", v, text,
                      qec_srg_join_tables(g.family, 0, JoinPartner::empty, m));
        }
    }

    // Formula-only families.
    const PiecewiseJoin hs_complete{9, 6, "6", 76, 100, 100}, hs_empty{4, 6, "6", 176, 200, 100};
    const PiecewiseJoin suz_complete{19, 14, "14", 1364, 1782, 1782}, suz_empty{9, 14, "14", 3146, 3564, 1782};
    for (std::int64_t m = 1; m <= 12; ++m) {
        auto [v, text] = piecewise(hs_complete, m);
        t.formula_row("QEC(Higman-Sims+K_" + s(m) + ")", qec_srg_join_tables(SrgFamily::higman_sims, 0, JoinPartner::complete, m), v, text);
    }
    for (std::int64_t m = 1; m <= 7; ++m) {
        auto [v, text] = piecewise(hs_empty, m);
        t.formula_row("QEC(Higman-Sims+Kbar_" + s(m) + ")", qec_srg_join_tables(SrgFamily::higman_sims, 0, JoinPartner::empty, m), v, text);
    }
    for (std::int64_t m : {1, 5, 10, 19, 20, 21, 30}) {
        auto [v, text] = piecewise(suz_complete, m);
        t.formula_row("QEC(Suzuki+K_" + s(m) + ")", qec_srg_join_tables(SrgFamily::suzuki, 0, JoinPartner::complete, m), v, text);
    }
    for (std::int64_t m : {1, 5, 9, 10, 11, 20}) {
        auto [v, text] = piecewise(suz_empty, m);
        t.formula_row("QEC(Suzuki+Kbar_" + s(m) + ")", qec_srg_join_tables(SrgFamily::suzuki, 0, JoinPartner::empty, m), v, text);
    }

    // Proposition-level identities on SRG parameter quadruples.
    const std::vector<std::pair<SrgParams, std::int64_t>> srg_values{
        {{10, 3, 0, 1}, 0},  {{16, 6, 2, 2}, 0}, {{16, 10, 6, 6}, 0},  {{27, 16, 10, 8}, 0},
        {{28, 12, 6, 4}, 0}, {{50, 7, 0, 1}, 1}, {{100, 22, 0, 6}, 6}, {{1782, 416, 100, 96}, 14}};
    for (const auto& [p, v] : srg_values)
        t.formula_row("QEC(SRG(" + s(p.n) + "," + s(p.r) + "," + s(p.e) + "," + s(p.f) + "))", qec_srg(p),
                      static_cast<double>(v), s(v));

    return t.take();
}

std::string to_text(const std::vector<TableRow>& rows) {
    std::size_t w_label = 5, w_pub = 9, w_formula = 7, w_numeric = 7;
    for (const auto& r : rows) {
        w_label = std::max(w_label, r.label.size());
        w_pub = std::max(w_pub, r.published.size());
        w_formula = std::max(w_formula, r.formula.size());
        w_numeric = std::max(w_numeric, r.numeric.size());
    }
    auto pad = [](const std::string& x, std::size_t w) { return x + std::string(w - x.size(), ' '); };
    std::ostringstream out;
    out << pad("label", w_label) << "  " << pad("published", w_pub) << "  " << pad("formula", w_formula) << "  "
        << pad("numeric", w_numeric) << "  status\n";
    std::size_t passed = 0;
    for (const auto& r : rows) {
        out << pad(r.label, w_label) << "  " << pad(r.published, w_pub) << "  " << pad(r.formula, w_formula) << "  "
            << pad(r.numeric, w_numeric) << "  " << (r.pass ? "PASS" : "FAIL") << '\n';
        passed += r.pass ? 1 : 0;
    }
    out << passed << "/" << rows.size() << " rows pass\n";
    return out.str();
}

std::string to_json(const std::vector<TableRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows)
        out.push_back(Json{{"label", r.label},
                           {"published", r.published},
                           {"formula", r.formula},
                           {"numeric", r.numeric},
                           {"status", r.pass ? "PASS" : "FAIL"}});
    return out.dump(1) + "\n";
}

}  // namespace qec::report

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qec/errors.hpp"
#include "qec/expr.hpp"
#include "qec/report.hpp"

namespace {

enum Exit { ok = 0, internal = 1, usage = 2, domain = 3, verification = 4 };

int run(CLI::App& app, int argc, char** argv) {
    app.require_subcommand(1);

    std::string expr_text, file_path, method = "auto";
    bool json = false, witness = false;
    std::size_t max_vertices = 2000;
    auto* eval = app.add_subcommand("eval", "Evaluate the QE constant of a graph expression");
    eval->add_option("EXPR", expr_text, "Graph expression, e.g. \"C(5)+Kbar(2)\"");
    eval->add_option("--file", file_path, "Read the graph from an edge-list file");
    eval->add_option("--method", method, "auto, compression, stationary or diam2")->capture_default_str();
    eval->add_flag("--json", json, "Emit JSON");
    eval->add_flag("--witness", witness, "Include the maximizing vector");
    eval->add_option("--max-vertices", max_vertices, "Size cap for numeric evaluation")->capture_default_str();

    std::string spec_text;
    bool spec_json = false;
    auto* spec = app.add_subcommand("spectrum", "Adjacency and distance spectra with multiplicities");
    spec->add_option("EXPR", spec_text, "Graph expression")->required();
    spec->add_flag("--json", spec_json, "Emit JSON");
    spec->add_option("--max-vertices", max_vertices, "Size cap")->capture_default_str();

    qec::report::VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "Compare closed forms against numeric values over a family");
    verify->add_option("--family", vopts.family, "Sweep family (see --list)");
    verify->add_option("--max,--max-n", vopts.max, "Largest parameter")->capture_default_str();
    verify->add_option("--samples", vopts.samples, "Random samples")->capture_default_str();
    verify->add_option("--seed", vopts.seed, "Random seed")->capture_default_str();
    bool list_families = false;
    verify->add_flag("--list", list_families, "List families and exit");

    bool paper_examples = false, table_json = false;
    auto* table = app.add_subcommand("table", "Reproduce the published example values");
    table->add_flag("--paper-examples", paper_examples, "Published QE constants, spectra and parameters")->required();
    table->add_flag("--json", table_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    if (*eval) {
        if (expr_text.empty() == file_path.empty()) {
            std::cerr << "qec eval: give exactly one of EXPR or --file PATH\n";
            return usage;
        }
        qec::report::EvalOptions opts;
        opts.method = qec::report::parse_method(method);
        opts.max_vertices = max_vertices;
        const std::string text = file_path.empty() ? expr_text : qec::expr::render(*qec::expr::from_file(file_path));
        const auto r = qec::report::evaluate(text, opts);
        std::cout << (json ? qec::report::to_json(r, witness) : qec::report::to_text(r, witness));
        return ok;
    }
    if (*spec) {
        qec::report::EvalOptions opts;
        opts.max_vertices = max_vertices;
        const auto r = qec::report::spectrum(spec_text, opts);
        std::cout << (spec_json ? qec::report::to_json(r) : qec::report::to_text(r));
        return ok;
    }
    if (*verify) {
        if (list_families) {
            for (const auto& f : qec::report::verify_families()) std::cout << f << '\n';
            return ok;
        }
        if (vopts.family.empty()) {
            std::cerr << "qec verify: --family is required\n";
            return usage;
        }
        const auto s = qec::report::verify(vopts);
        std::cout << qec::report::to_text(s);
        return s.failures == 0 ? ok : verification;
    }
    const auto rows = qec::report::published_examples();
    std::cout << (table_json ? qec::report::to_json(rows) : qec::report::to_text(rows));
    for (const auto& r : rows)
        if (!r.pass) return verification;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic embedding constants of graphs", "qec"};
    try {
        return run(app, argc, argv);
    } catch (const qec::ParseError& e) {
        std::cerr << "qec: parse error: " << e.what() << '\n';
        return usage;
    } catch (const qec::InvalidArgument& e) {
        std::cerr << "qec: " << e.what() << '\n';
        return usage;
    } catch (const qec::DomainError& e) {
        std::cerr << "qec: " << e.what() << '\n';
        return domain;
    } catch (const qec::Error& e) {
        std::cerr << "qec: " << e.what() << '\n';
        return verification;
    } catch (const std::exception& e) {
        std::cerr << "qec: internal error: " << e.what() << '\n';
        return internal;
    }
}

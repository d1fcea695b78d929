#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qec/graph.hpp"
#include "qec/rational.hpp"

namespace qec {

// A closed-form QEC value. `exact` is set whenever the value is rational.
struct FormulaValue {
    double value = 0.0;
    std::string source;
    std::string validity;
    std::optional<Rational> exact;
};

// A regular graph as seen by the regular-join formula: order, degree and least
// adjacency eigenvalue (exact when rational).
struct RegularPart {
    std::int64_t n = 1;
    std::int64_t r = 0;
    double lambda_min = 0.0;
    std::optional<Rational> lambda_min_exact;
};

RegularPart complete_part(std::int64_t n);
RegularPart empty_part(std::int64_t n);
RegularPart cycle_part(std::int64_t n);
RegularPart copies_part(std::int64_t k, const RegularPart& p);
RegularPart srg_part(const SrgParams& p);

FormulaValue qec_complete(std::int64_t n);
FormulaValue qec_complete_bipartite(std::int64_t m, std::int64_t n);
FormulaValue qec_cycle(std::int64_t n);
double lambda_min_cycle(std::int64_t n);

// QEC of the join of two connected-or-not regular graphs:
//   -2 + max{-lmin1, -lmin2, (2 n1 n2 - r1 n2 - r2 n1) / (n1 + n2)}.
// The branch comparison is exact when both least eigenvalues are rational.
FormulaValue qec_join_regular(const RegularPart& g1, const RegularPart& g2);
FormulaValue qec_join_regular(std::int64_t n1, std::int64_t r1, double lmin1, std::int64_t n2, std::int64_t r2,
                              double lmin2);

// K_n + Kbar_m with n >= 2, m >= 1.
FormulaValue qec_complete_split(std::int64_t m, std::int64_t n);
FormulaValue qec_friendship(std::int64_t n);
FormulaValue qec_cycle_join_complete(std::int64_t n, std::int64_t m);
FormulaValue qec_wheel(std::int64_t n);
FormulaValue qec_cycle_join_empty(std::int64_t n, std::int64_t m);

FormulaValue qec_double_formula(double q);
FormulaValue qec_double_formula(const FormulaValue& q);
FormulaValue qec_lex2_formula(double q);
FormulaValue qec_lex2_formula(const FormulaValue& q);

// Least adjacency eigenvalue of a connected strongly regular graph, and its QEC.
double srg_lambda_min(const SrgParams& p);
std::optional<Rational> srg_lambda_min_exact(const SrgParams& p);
FormulaValue qec_srg(const SrgParams& p);

enum class SrgFamily {
    triangular,
    grid,
    cycle5,
    petersen,
    shrikhande,
    clebsch,
    schlafli,
    chang,
    hoffman_singleton,
    higman_sims,
    suzuki
};

enum class JoinPartner { complete, empty };

// Parameters of a family member; `param` is n for triangular and grid, ignored otherwise.
SrgParams srg_family_params(SrgFamily family, std::int64_t param = 0);
std::string srg_family_name(SrgFamily family, std::int64_t param = 0);

// QEC of (family member) + K_m or + Kbar_m through the regular-join formula.
// Higman-Sims and Suzuki enter through (n, r, lambda_min) read off their spectra.
FormulaValue qec_srg_join_tables(SrgFamily family, std::int64_t param, JoinPartner partner, std::int64_t m);

}  // namespace qec

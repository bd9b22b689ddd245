#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ainf/configuration.hpp"

namespace ainf {

struct ValidityReport {
    bool generic = true;
    /// Upper bound for sum 1/(1 + |lambda_n|) over all n.
    double summability_bound = 0.0;
    bool chart_admissible = true;
    std::vector<std::pair<CenterIndex, CenterIndex>> duplicates;
    std::vector<CenterIndex> zero_real_part;
    std::vector<std::string> violations;
    std::int64_t enumerated = 0;
};

/// Checks genericity, summability and chart admissibility over the enumerated
/// centers plus the analytic tails. Never throws for a constructed config.
ValidityReport validate(const Configuration& config);

/// Finitely many coordinates (z_n, w_n), n = 1..entries.size().
struct TruncatedRepresentative {
    Configuration config;
    std::vector<std::pair<Complex, Complex>> entries;
};

struct StabilityReport {
    bool moment_constant = false;
    Complex moment{0.0, 0.0};  // 2 z_1 w_1 - lambda_{1,C}
    double max_deviation = 0.0;
    bool stable = false;
    std::optional<std::pair<CenterIndex, CenterIndex>> unstable_pair;  // (n, m): t_n > t_m, z_n = w_m = 0
};

/// Complex moment constancy (relative tolerance) and t-stability; t defaults
/// to lambda_R.
StabilityReport check_representative(const TruncatedRepresentative& rep,
                                     const std::optional<std::vector<double>>& t = std::nullopt,
                                     double relative_tolerance = 1e-9);

}  // namespace ainf

#pragma once

#include <string>
#include <vector>

#include "qgauss/qcore.hpp"

namespace qgauss {

/// One verified property: the largest observed deviation against the
/// threshold it must stay under.
struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// Properties parameterized by q: derivative/monomial rules, exponential
/// identities, the Jackson-integral identity suite, measure consistency,
/// moment bridges, CDF shape properties.
std::vector<CheckResult> run_property_checks(const QParam& q, const TruncationPolicy& policy);

/// q-independent properties: matching combinatorics against the symbolic
/// double-factorial expansion, bracket limits, classical specializations.
std::vector<CheckResult> run_global_checks(const TruncationPolicy& policy);

} // namespace qgauss

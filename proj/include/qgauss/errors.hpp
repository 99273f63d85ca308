#pragma once

#include <stdexcept>
#include <string>

namespace qgauss {

/// Input outside the mathematically supported domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A callback produced a non-finite value at a required sample point.
class evaluation_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// A series evaluation hit its term cap before the tail bound reached
/// tolerance, or cancellation makes the tolerance unattainable at working
/// precision.
class truncation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction-time cross-check between two independent evaluation
/// routes disagreed beyond its contract.
class consistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qgauss

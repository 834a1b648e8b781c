#pragma once

#include <string>
#include <vector>

namespace hyplab {

/// One end-to-end certification check spanning a theorem cluster.
struct Certification {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the full certification battery (sandwich bounds, rate limits,
/// Fourier identities, kernel identities, blow-up and classification
/// certificates, bilinear split, F_t slopes, ultracontractive scaling,
/// rate-function algebra, Askey limits, necessary condition).
std::vector<Certification> certify_all();

}  // namespace hyplab

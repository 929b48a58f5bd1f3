#pragma once

#include <stdexcept>
#include <string>

namespace ncphase {

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// D = sqrt(Delta^2 - 4 Delta_Omega) below tolerance; closed-form eigenvectors
// are rank-deficient there (commutative isotropic locus).
struct DegenerateSpectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NormalizationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularUp : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotNormalizable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SigmaCollapse : std::runtime_error {
    SigmaCollapse(const std::string& msg, double last_good_time)
        : std::runtime_error(msg), last_good_time(last_good_time) {}
    double last_good_time;
};

struct StepRejection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularBlock : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ncphase

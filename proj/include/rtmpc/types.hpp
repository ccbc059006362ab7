#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace rtmpc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Thrown when an input violates an operation's preconditions.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a numerical routine cannot produce a valid result
/// (non-stabilizable pair, unbounded LP, empty polytope, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by the offline synthesis pipeline; carries a stage label so the
/// CLI can report which ingredient failed.
class SynthesisError : public std::runtime_error {
public:
    SynthesisError(const std::string& stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(stage) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

}  // namespace rtmpc

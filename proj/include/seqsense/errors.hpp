#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace seqsense {

// Error taxonomy. The CLI maps these to distinct exit codes.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated numerical precondition (non-Hermitian generator, mismatched shapes, ...).
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coherent-state truncation tail above tolerance.
struct CutoffError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite-difference states drifted off the unit sphere.
struct StepSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Every grid point has likelihood zero for the observed record.
struct DegenerateDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by trace_inverse on a singular Fisher matrix; carries the diagnostics
// so the caller can decide on a pseudoinverse fallback.
struct SingularMatrixError : std::runtime_error {
    SingularMatrixError(const std::string& msg, int rank, int k, std::vector<double> eigenvalues)
        : std::runtime_error(msg), rank(rank), k(k), eigenvalues(std::move(eigenvalues)) {}
    int rank;
    int k;
    std::vector<double> eigenvalues;
};

}  // namespace seqsense

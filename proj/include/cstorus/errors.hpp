#pragma once

#include <stdexcept>
#include <string>

namespace cstorus {

/// Thrown when an operation needs an invertible lattice map but det = 0.
struct SingularLattice : std::domain_error {
    explicit SingularLattice(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a Gauss-sum phase function is not constant on cosets of the
/// summation lattice (wrong quadratic form, wrong level, or wrong denominator).
struct IllPosedSum : std::runtime_error {
    explicit IllPosedSum(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a fixed-point set is not finite: w tensor U - 1 is singular,
/// e.g. parabolic monodromy combined with w = 1.
struct DegenerateFixedSet : std::domain_error {
    explicit DegenerateFixedSet(const std::string& what) : std::domain_error(what) {}
};

/// Thrown by partition-function evaluators when |Tr U| = 2.
struct ParabolicMonodromy : std::domain_error {
    explicit ParabolicMonodromy(const std::string& what) : std::domain_error(what) {}
};

/// Thrown by the SU(2) trace formula when c = 0 (the formula needs c != 0).
struct CUnsupported : std::domain_error {
    explicit CUnsupported(const std::string& what) : std::domain_error(what) {}
};

}  // namespace cstorus

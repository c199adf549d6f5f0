#pragma once

#include <stdexcept>
#include <string>

namespace fm {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series
struct ZeroConstantTerm : Error {
    ZeroConstantTerm() : Error("reciprocal requires a nonzero constant term") {}
};
struct NonzeroInnerConstant : Error {
    NonzeroInnerConstant() : Error("compose requires the inner series to have zero constant term") {}
};
struct NotInvertible : Error {
    NotInvertible() : Error("revert requires f[0] = 0 and f[1] != 0") {}
};
struct ReversionFailure : Error {
    ReversionFailure() : Error("degenerate Cauchy series, cannot invert") {}
};

// measures
struct NotPositiveDefinite : Error {
    explicit NotPositiveDefinite(int index)
        : Error("moment sequence is not positive definite, first failing Hankel index "
                + std::to_string(index)),
          index(index) {}
    int index;
};
struct FinitelySupported : Error {
    FinitelySupported() : Error("gamma_1 = 0: measure is a point mass, cannot strip") {}
};
struct InsufficientMoments : Error {
    InsufficientMoments() : Error("moment sequence too short for this operation") {}
};
struct InsufficientJacobi : Error {
    InsufficientJacobi() : Error("not enough Jacobi parameters for the requested depth") {}
};
struct InvalidJacobi : Error {
    InvalidJacobi() : Error("negative off-diagonal Jacobi coefficient") {}
};
struct InvalidScale : Error {
    InvalidScale() : Error("mean/variance adjustment needs a rational scale: "
                           "variance must be a perfect rational square unless b = 0") {}
};

// operators
struct DegreeViolation : Error {
    DegreeViolation() : Error("higher-order operator requires deg p_k <= k") {}
};
struct NoEigenfunction : Error {
    explicit NoEigenfunction(int degree)
        : Error("no polynomial eigenfunction of degree " + std::to_string(degree)),
          degree(degree) {}
    int degree;
};

// meixner
struct InvalidC : Error {
    InvalidC() : Error("free Meixner parameter c must satisfy c >= -1") {}
};
struct NoOperator : Error {
    NoOperator() : Error("no canonical operator on the stripe c = -1/2, b != 0") {}
};

// numerics
struct DegenerateJacobi : Error {
    DegenerateJacobi() : Error("quadrature rule needs strictly positive gamma coefficients") {}
};
struct AtomPresent : Error {
    AtomPresent() : Error("analytic identity check requires an atom-free measure") {}
};
struct IntegrationFailure : Error {
    explicit IntegrationFailure(double achieved)
        : Error("adaptive quadrature failed, achieved error estimate "
                + std::to_string(achieved)),
          achieved(achieved) {}
    double achieved;
};

// rmt
struct RankTooLarge : Error {
    RankTooLarge() : Error("projection rank exceeds matrix dimension") {}
};
struct SingularSum : Error {
    SingularSum() : Error("W1 + W2 is numerically singular") {}
};

}  // namespace fm

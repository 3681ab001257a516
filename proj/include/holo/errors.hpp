#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace holo {

using Complex = std::complex<double>;

/// Base of every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HOLO_DEFINE_ERROR(Name)                  \
    class Name : public Error {                  \
    public:                                      \
        using Error::Error;                      \
    }

// holomap
HOLO_DEFINE_ERROR(DomainError);
HOLO_DEFINE_ERROR(SingularPoint);
HOLO_DEFINE_ERROR(BranchCut);
HOLO_DEFINE_ERROR(NoFiniteLimit);
HOLO_DEFINE_ERROR(ZeroOnPath);
HOLO_DEFINE_ERROR(NonConvergent);
HOLO_DEFINE_ERROR(RootOnContour);
HOLO_DEFINE_ERROR(Unresolved);
// caratheodory / generators / approx / spiral / spectrum
HOLO_DEFINE_ERROR(ZeroEncountered);
HOLO_DEFINE_ERROR(NotNonnegativeReal);
HOLO_DEFINE_ERROR(NotAdmissible);
HOLO_DEFINE_ERROR(InvalidLambda);
// flow
HOLO_DEFINE_ERROR(StepFailure);
HOLO_DEFINE_ERROR(NewtonDiverged);

#undef HOLO_DEFINE_ERROR

/// Raised when a map fails the sampled positivity test for the class P.
class NotPositive : public Error {
public:
    NotPositive(double min_re, Complex argmin);

    double min_re() const noexcept { return min_re_; }
    Complex argmin() const noexcept { return argmin_; }

private:
    double min_re_;
    Complex argmin_;
};

std::string format_complex(Complex z);

}  // namespace holo

#pragma once

// Cylinder functions J0, J1, K0, K1 (and the exponentially scaled I0, I1
// helpers) for the step-index mode solver. Standard series / asymptotic
// evaluation with frozen Chebyshev kernels; relative accuracy is a few
// ulps, verified against high-precision fixtures in the test suite.

namespace fwmpair::bessel {

double j0(double x);
double j1(double x);

// Modified Bessel functions of the second kind; x > 0 required.
double k0(double x);
double k1(double x);

// First-kind modified functions, used by the K small-argument path and
// exposed for tests.
double i0(double x);
double i1(double x);

}  // namespace fwmpair::bessel

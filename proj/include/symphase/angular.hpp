#pragma once

#include <complex>
#include <vector>

namespace symphase::linalg {

/// ln(n!) from a table built once at first use (read-only afterwards).
double log_factorial(int n);

/// Condon-Shortley Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>.
/// Quantum numbers are half-integers passed as doubles. Returns 0 when
/// M != m1+m2 or J violates the triangle rule; throws InvalidQuantumNumbers
/// for non-half-integer or internally inconsistent arguments.
double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M);

/// Spherical harmonic Y_{KQ}(theta, phi), Condon-Shortley phase.
std::complex<double> ylm(int k, int q, double theta, double phi);

/// All Y_{KQ} for K <= kmax at one point, flat-indexed as K*K + (Q+K).
/// Appreciably cheaper than per-(K,Q) calls inside quadrature loops.
void ylm_table(int kmax, double theta, double phi, std::vector<std::complex<double>>& out);

/// Flat index into (K,Q)-ordered tables.
inline int kq_index(int k, int q) { return k * k + q + k; }

}  // namespace symphase::linalg

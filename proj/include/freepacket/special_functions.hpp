#pragma once

#include <cmath>
#include <stdexcept>

namespace freepacket {

inline constexpr int kMaxHermiteOrder = 64;

/// Physicists' Hermite polynomial H_n(x) by the upward three-term recurrence
///   H_{k+1} = 2x H_k - 2k H_{k-1}.
/// Scalar may be real or complex (the derivative packets need complex x).
template <class Scalar>
Scalar hermite(int n, const Scalar& x) {
  if (n < 0 || n > kMaxHermiteOrder) {
    throw std::domain_error("hermite: order outside [0, 64]");
  }
  Scalar prev(1);
  if (n == 0) return prev;
  Scalar cur = Scalar(2) * x;
  for (int k = 1; k < n; ++k) {
    Scalar next = Scalar(2) * x * cur - Scalar(2 * k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Normalized Hermite function exp(-xi^2/2) H_n(xi) / sqrt(2^n n! sqrt(pi)).
///
/// Uses the normalized recurrence so that neither 2^n n! nor H_n overflow.
double hermite_function(int n, double xi);

struct FresnelPair {
  double c = 0.0;
  double s = 0.0;
};

/// Fresnel integrals C(u) = int_0^u cos(pi t^2/2) dt, S(u) = int_0^u sin(pi t^2/2) dt.
///
/// Power series for |u| <= 1.6; beyond that the auxiliary functions come from a
/// continued fraction for erfc. Absolute error below 1e-10 for |u| <= 50.
FresnelPair fresnel(double u);

}  // namespace freepacket

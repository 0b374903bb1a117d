#pragma once

// Haar averaging X -> int U_g X U_g* dmu(g) over SU(2) acting on H^r by
// tensor powers, with dmu = (1/8 pi^2) sin(theta) dtheta dphi1 dphi2 on
// phi1, phi2 in [0, 2pi], theta in [0, pi].

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "cuntzsim/random.hpp"
#include "cuntzsim/repsu2.hpp"

namespace cuntzsim::twirl {

using repsu2::GroupElement;
using repsu2::TensorOperator;

enum class Kind { analytic, quadrature, montecarlo };

std::string_view kind_name(Kind kind);
/// Accepts analytic, quad, quadrature, mc, montecarlo.
Kind parse_kind(std::string_view text);

/// Largest r accepted by the quadrature and Monte Carlo methods.
inline constexpr int kMaxSampledPower = 8;
inline constexpr int kMaxMomentDegree = 8;

struct TwirlMethod {
  Kind kind = Kind::analytic;
  /// (n_theta, n_phi1, n_phi2)
  std::array<int, 3> nodes{32, 32, 32};
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;

  static TwirlMethod analytic() { return {}; }
  static TwirlMethod quadrature(std::array<int, 3> nodes = {32, 32, 32}) {
    return {Kind::quadrature, nodes, 100000, 42};
  }
  static TwirlMethod montecarlo(std::uint64_t samples, std::uint64_t seed) {
    return {Kind::montecarlo, {32, 32, 32}, samples, seed};
  }

  /// Throws InvalidArgument for node counts < 2 or zero samples.
  void validate() const;
};

TensorOperator twirl(const TensorOperator& x, const TwirlMethod& method = {});

/// Projection onto the commutant through the sector table: per sector,
/// sum_{c,c'} tr(V_c* X V_c') / (2T+1) V_c V_c'*.
TensorOperator twirl_analytic(const TensorOperator& x);
TensorOperator twirl_quadrature(const TensorOperator& x, std::array<int, 3> nodes);
TensorOperator twirl_montecarlo(const TensorOperator& x, std::uint64_t samples, std::uint64_t seed);

/// phi1, phi2 uniform on [0, 2pi), cos(theta) uniform on [-1, 1].
GroupElement haar_sample(Rng& rng);

/// alpha^a conj(alpha)^b beta^c conj(beta)^d
struct Monomial {
  int alpha = 0;
  int alpha_bar = 0;
  int beta = 0;
  int beta_bar = 0;

  int degree() const { return alpha + alpha_bar + beta + beta_bar; }
  Complex evaluate(const GroupElement& g) const;
};

/// Integral of the monomial against dmu by Gauss-Legendre in cos(theta) and,
/// per azimuth, the periodic trapezoid rule (integer frequency) or
/// Gauss-Legendre on [0, 2pi] (half-integer frequency, odd degree).
Complex haar_moment(const Monomial& m, std::array<int, 3> nodes = {32, 32, 32});

struct MomentEstimate {
  Complex mean;
  /// Standard error of the real and imaginary parts.
  double stderr_re = 0.0;
  double stderr_im = 0.0;
};

MomentEstimate haar_moment_montecarlo(const Monomial& m, std::uint64_t samples, std::uint64_t seed);

}  // namespace cuntzsim::twirl

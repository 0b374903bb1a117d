#include "cuntzsim/twirl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cuntzsim/errors.hpp"
#include "cuntzsim/quadrature.hpp"

namespace cuntzsim::twirl {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kSampleBlock = 1024;

void check_sampled_power(const TensorOperator& x) {
  if (x.r() > kMaxSampledPower) {
    throw ResourceLimit("sampled twirl limited to r <= " + std::to_string(kMaxSampledPower) + ", got r=" +
                        std::to_string(x.r()));
  }
}

CMatrix conjugate(const CMatrix& u, const CMatrix& x) { return u * x * u.adjoint(); }

Complex ipow(Complex z, int k) {
  Complex out{1.0};
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

QuadratureRule azimuth_rule(int n, bool half_integer_frequency) {
  return half_integer_frequency ? gauss_legendre(n, 0.0, kTwoPi) : periodic_trapezoid(n, kTwoPi);
}

}  // namespace

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::analytic:
      return "analytic";
    case Kind::quadrature:
      return "quad";
    case Kind::montecarlo:
      return "mc";
  }
  return "unknown";
}

Kind parse_kind(std::string_view text) {
  if (text == "analytic") return Kind::analytic;
  if (text == "quad" || text == "quadrature") return Kind::quadrature;
  if (text == "mc" || text == "montecarlo") return Kind::montecarlo;
  throw InvalidArgument("unknown twirl method '" + std::string(text) + "' (analytic|quad|mc)");
}

void TwirlMethod::validate() const {
  if (kind == Kind::quadrature) {
    for (int n : nodes)
      if (n < 2) throw InvalidArgument("quadrature node counts must be >= 2, got " + std::to_string(n));
  }
  if (kind == Kind::montecarlo && samples == 0) throw InvalidArgument("Monte Carlo twirl needs samples >= 1");
}

TensorOperator twirl(const TensorOperator& x, const TwirlMethod& method) {
  method.validate();
  switch (method.kind) {
    case Kind::analytic:
      return twirl_analytic(x);
    case Kind::quadrature:
      return twirl_quadrature(x, method.nodes);
    case Kind::montecarlo:
      return twirl_montecarlo(x, method.samples, method.seed);
  }
  throw InvalidArgument("unknown twirl method");
}

TensorOperator twirl_analytic(const TensorOperator& x) {
  const auto& table = repsu2::decompose(x.r());
  CMatrix out(x.dim(), x.dim());
  for (const auto& sector : table.sectors) {
    std::vector<CMatrix> iso;
    iso.reserve(static_cast<std::size_t>(sector.multiplicity));
    for (int c = 0; c < sector.multiplicity; ++c) iso.push_back(sector.isometry(c));
    for (int cp = 0; cp < sector.multiplicity; ++cp) {
      const CMatrix xv = x.entries() * iso[static_cast<std::size_t>(cp)];
      const CMatrix vcp_adj = iso[static_cast<std::size_t>(cp)].adjoint();
      for (int c = 0; c < sector.multiplicity; ++c) {
        const CMatrix& vc = iso[static_cast<std::size_t>(c)];
        const Complex block = (vc.adjoint() * xv).trace() / static_cast<double>(sector.dim);
        if (block == Complex{}) continue;
        out.add_scaled(block, vc * vcp_adj);
      }
    }
  }
  return TensorOperator(x.r(), std::move(out));
}

TensorOperator twirl_quadrature(const TensorOperator& x, std::array<int, 3> nodes) {
  TwirlMethod::quadrature(nodes).validate();
  check_sampled_power(x);
  const auto theta_rule = gauss_legendre(nodes[0]);
  // Conjugation by U^(x)r only sees integer azimuthal frequencies.
  const auto phi1_rule = periodic_trapezoid(nodes[1], kTwoPi);
  const auto phi2_rule = periodic_trapezoid(nodes[2], kTwoPi);
  constexpr double norm = 1.0 / (8.0 * std::numbers::pi * std::numbers::pi);

  std::vector<CMatrix> slices;
  slices.reserve(theta_rule.nodes.size());
  for (std::size_t a = 0; a < theta_rule.nodes.size(); ++a) {
    const double theta = std::acos(theta_rule.nodes[a]);
    CMatrix slice(x.dim(), x.dim());
    for (std::size_t b = 0; b < phi1_rule.nodes.size(); ++b)
      for (std::size_t c = 0; c < phi2_rule.nodes.size(); ++c) {
        const auto g = repsu2::group_element(phi1_rule.nodes[b], theta, phi2_rule.nodes[c]);
        const double w = phi1_rule.weights[b] * phi2_rule.weights[c];
        slice.add_scaled(w, conjugate(repsu2::rep_power(g, x.r()).entries(), x.entries()));
      }
    slice *= theta_rule.weights[a] * norm;
    slices.push_back(std::move(slice));
  }
  return TensorOperator(x.r(), pairwise_sum(std::move(slices)));
}

TensorOperator twirl_montecarlo(const TensorOperator& x, std::uint64_t samples, std::uint64_t seed) {
  TwirlMethod::montecarlo(samples, seed).validate();
  check_sampled_power(x);
  Rng rng(seed);
  std::vector<CMatrix> blocks;
  for (std::uint64_t done = 0; done < samples;) {
    const std::uint64_t n = std::min(kSampleBlock, samples - done);
    CMatrix block(x.dim(), x.dim());
    for (std::uint64_t s = 0; s < n; ++s) {
      const auto g = haar_sample(rng);
      block += conjugate(repsu2::rep_power(g, x.r()).entries(), x.entries());
    }
    blocks.push_back(std::move(block));
    done += n;
  }
  CMatrix total = pairwise_sum(std::move(blocks));
  total *= 1.0 / static_cast<double>(samples);
  return TensorOperator(x.r(), std::move(total));
}

GroupElement haar_sample(Rng& rng) {
  const double phi1 = kTwoPi * rng.uniform();
  const double cos_theta = 2.0 * rng.uniform() - 1.0;
  const double phi2 = kTwoPi * rng.uniform();
  return repsu2::group_element(phi1, std::acos(cos_theta), phi2);
}

Complex Monomial::evaluate(const GroupElement& g) const {
  if (alpha < 0 || alpha_bar < 0 || beta < 0 || beta_bar < 0) throw InvalidArgument("monomial exponents must be >= 0");
  return ipow(g.alpha, alpha) * ipow(std::conj(g.alpha), alpha_bar) * ipow(g.beta, beta) *
         ipow(std::conj(g.beta), beta_bar);
}

Complex haar_moment(const Monomial& m, std::array<int, 3> nodes) {
  if (m.degree() > kMaxMomentDegree) {
    throw ResourceLimit("monomial degree " + std::to_string(m.degree()) + " exceeds " +
                          std::to_string(kMaxMomentDegree));
  }
  TwirlMethod::quadrature(nodes).validate();
  const bool half_integer = m.degree() % 2 != 0;
  // Even degree: polynomial in cos(theta), exact in that variable. Odd degree
  // brings in cos(theta/2), sin(theta/2); integrate in theta with weight sin(theta).
  const auto theta_rule = half_integer ? gauss_legendre(nodes[0], 0.0, std::numbers::pi) : gauss_legendre(nodes[0]);
  const auto phi1_rule = azimuth_rule(nodes[1], half_integer);
  const auto phi2_rule = azimuth_rule(nodes[2], half_integer);
  constexpr double norm = 1.0 / (8.0 * std::numbers::pi * std::numbers::pi);
  Complex total{};
  for (std::size_t a = 0; a < theta_rule.nodes.size(); ++a) {
    const double theta = half_integer ? theta_rule.nodes[a] : std::acos(theta_rule.nodes[a]);
    const double jacobian = half_integer ? std::sin(theta) : 1.0;
    Complex slice{};
    for (std::size_t b = 0; b < phi1_rule.nodes.size(); ++b)
      for (std::size_t c = 0; c < phi2_rule.nodes.size(); ++c) {
        const auto g = repsu2::group_element(phi1_rule.nodes[b], theta, phi2_rule.nodes[c]);
        slice += phi1_rule.weights[b] * phi2_rule.weights[c] * m.evaluate(g);
      }
    total += theta_rule.weights[a] * jacobian * slice;
  }
  return norm * total;
}

MomentEstimate haar_moment_montecarlo(const Monomial& m, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 2) throw InvalidArgument("Monte Carlo moment needs at least 2 samples");
  Rng rng(seed);
  // Welford running moments, separately for real and imaginary parts.
  double mean_re = 0.0, mean_im = 0.0, m2_re = 0.0, m2_im = 0.0;
  for (std::uint64_t s = 1; s <= samples; ++s) {
    const Complex v = m.evaluate(haar_sample(rng));
    const double dr = v.real() - mean_re;
    const double di = v.imag() - mean_im;
    mean_re += dr / static_cast<double>(s);
    mean_im += di / static_cast<double>(s);
    m2_re += dr * (v.real() - mean_re);
    m2_im += di * (v.imag() - mean_im);
  }
  const double n = static_cast<double>(samples);
  return {Complex(mean_re, mean_im), std::sqrt(m2_re / (n - 1) / n), std::sqrt(m2_im / (n - 1) / n)};
}

}  // namespace cuntzsim::twirl

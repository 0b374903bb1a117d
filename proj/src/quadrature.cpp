#include "cuntzsim/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cuntzsim/errors.hpp"

namespace cuntzsim {

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw InvalidArgument("Gauss-Legendre needs n >= 1, got " + std::to_string(n));
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  // Legendre P_n(x) and its derivative by the three-term recurrence.
  const auto legendre = [n](double x, double& derivative) {
    double p = 1.0;
    double prev = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double older = prev;
      prev = p;
      p = ((2.0 * j - 1.0) * x * prev - (j - 1.0) * older) / j;
    }
    derivative = n * (x * p - prev) / (x * x - 1.0);
    return p;
  };
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      const double dx = legendre(x, dp) / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(x, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = mid - half * x;
    rule.nodes[hi] = mid + half * x;
    rule.weights[lo] = half * w;
    rule.weights[hi] = half * w;
  }
  return rule;
}

QuadratureRule periodic_trapezoid(int n, double period) {
  if (n < 1) throw InvalidArgument("trapezoid rule needs n >= 1, got " + std::to_string(n));
  QuadratureRule rule;
  for (int k = 0; k < n; ++k) {
    rule.nodes.push_back(period * k / n);
    rule.weights.push_back(period / n);
  }
  return rule;
}

CMatrix pairwise_sum(std::vector<CMatrix> terms) {
  if (terms.empty()) throw InvalidArgument("pairwise_sum of nothing");
  while (terms.size() > 1) {
    std::vector<CMatrix> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(std::move(terms[i] += terms[i + 1]));
    if (terms.size() % 2 == 1) next.push_back(std::move(terms.back()));
    terms = std::move(next);
  }
  return std::move(terms.front());
}

}  // namespace cuntzsim

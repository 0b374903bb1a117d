#pragma once

#include <vector>

#include "cuntzsim/matrix.hpp"

namespace cuntzsim {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// n equispaced nodes on [0, period) with equal weights period/n; exact for
/// trigonometric polynomials of frequency below n.
QuadratureRule periodic_trapezoid(int n, double period);

/// Pairwise sum of equally shaped matrices (consumes the input).
CMatrix pairwise_sum(std::vector<CMatrix> terms);

}  // namespace cuntzsim

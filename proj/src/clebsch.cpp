#include "cuntzsim/clebsch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace cuntzsim {
namespace {

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

bool triangle(int a, int b, int c) { return c >= std::abs(a - b) && c <= a + b && (a + b + c) % 2 == 0; }

}  // namespace

double clebsch_gordan(Spin j1, Spin m1, Spin j2, Spin m2, Spin J, Spin M) {
  // All arithmetic in doubled units, halved where factorial arguments need it.
  const int tj1 = j1.twice(), tm1 = m1.twice(), tj2 = j2.twice(), tm2 = m2.twice(), tJ = J.twice(), tM = M.twice();
  if (tj1 < 0 || tj2 < 0 || tJ < 0) return 0.0;
  if (tm1 + tm2 != tM) return 0.0;
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tM) > tJ) return 0.0;
  if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tJ + tM) % 2 != 0) return 0.0;
  if (!triangle(tj1, tj2, tJ)) return 0.0;

  const int a = (tj1 + tj2 - tJ) / 2;
  const int b = (tj1 - tm1) / 2;
  const int c = (tj2 + tm2) / 2;
  const int e = (tJ - tj2 + tm1) / 2;
  const int f = (tJ - tj1 - tm2) / 2;

  const double log_prefactor =
      0.5 * (std::log(tJ + 1.0) + log_factorial(a) + log_factorial((tj1 - tj2 + tJ) / 2) +
             log_factorial((-tj1 + tj2 + tJ) / 2) - log_factorial((tj1 + tj2 + tJ) / 2 + 1) +
             log_factorial((tj1 + tm1) / 2) + log_factorial(b) + log_factorial((tj2 - tm2) / 2) +
             log_factorial(c) + log_factorial((tJ + tM) / 2) + log_factorial((tJ - tM) / 2));

  const int kmin = std::max({0, -e, -f});
  const int kmax = std::min({a, b, c});
  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    const double term = std::exp(log_prefactor - log_factorial(k) - log_factorial(a - k) - log_factorial(b - k) -
                                 log_factorial(c - k) - log_factorial(e + k) - log_factorial(f + k));
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace cuntzsim

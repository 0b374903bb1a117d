// Acceptance checks: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "cuntzsim/cuntz.hpp"
#include "cuntzsim/linalg.hpp"
#include "cuntzsim/protocol.hpp"
#include "cuntzsim/repsu2.hpp"
#include "cuntzsim/twirl.hpp"
#include "support/oracles.hpp"

using namespace cuntzsim;
namespace tw = cuntzsim::twirl;

namespace {

int failures = 0;

struct Outcome {
  bool pass;
  std::string detail;
};

void report(const char* id, const char* title, const std::function<Outcome()>& check) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("%s  %-3s %-34s %s [%.3f s]\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

CMatrix proj(const StateVector& v) { return outer(v, v); }

repsu2::TensorOperator op(int r, CMatrix m) { return repsu2::TensorOperator(r, std::move(m)); }

}  // namespace

int main() {
  report("1", "Haar moment E[(a abar)^2] = 1/3", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const double q = tw::haar_moment({2, 2, 0, 0}).real();
    const auto mc = tw::haar_moment_montecarlo({2, 2, 0, 0}, 100000, 42);
    const double secs = seconds_since(t0);
    const double eq = std::abs(q - 1.0 / 3.0);
    const double em = std::abs(mc.mean.real() - 1.0 / 3.0);
    return Outcome{eq < 1e-9 && em < 0.005 && secs < 1.0,
                   "quad err " + sci(eq) + " (<1e-9), mc err " + sci(em) + " (<0.005), " + sci(secs) + " s (<1)"};
  });

  const auto& t2 = repsu2::decompose(2);
  const auto b2 = repsu2::explicit_basis(2);
  const CMatrix pi11 = proj(repsu2::find_vector(b2, "psi11"));
  const CMatrix pi1 = repsu2::sector_projector(t2, Spin::integer(1)).entries();

  report("2", "twirl(Pi11) = Pi1 / 3", [&] {
    const double ea = max_abs_diff(tw::twirl(op(2, pi11)).entries(), (1.0 / 3.0) * pi1);
    const double eq = max_abs_diff(tw::twirl(op(2, pi11), tw::TwirlMethod::quadrature()).entries(), (1.0 / 3.0) * pi1);
    return Outcome{ea < 1e-12 && eq < 1e-6, "analytic " + sci(ea) + " (<1e-12), quad " + sci(eq) + " (<1e-6)"};
  });

  report("3", "twirl(Pi00) = Pi00", [&] {
    const CMatrix pi00 = proj(repsu2::find_vector(b2, "psi00"));
    const double e = max_abs_diff(tw::twirl(op(2, pi00)).entries(), pi00);
    return Outcome{e < 1e-12, "max diff " + sci(e) + " (<1e-12)"};
  });

  report("4", "sector tables r = 2, 3, 4", [] {
    using Table = std::map<int, int>;  // 2T -> m_T
    const std::map<int, Table> want{{2, {{2, 1}, {0, 1}}}, {3, {{3, 1}, {1, 2}}}, {4, {{4, 1}, {2, 3}, {0, 2}}}};
    bool ok = true;
    std::string detail;
    for (const auto& [r, table] : want) {
      const auto& t = repsu2::decompose(r);
      Table got;
      std::size_t dims = 0;
      for (const auto& s : t.sectors) {
        got[s.T.twice()] = s.multiplicity;
        dims += static_cast<std::size_t>(s.multiplicity * s.dim);
      }
      ok = ok && got == table && dims == (std::size_t{1} << r) && t.total_dim() == dims;
      detail += "r=" + std::to_string(r) + ":{";
      for (const auto& s : t.sectors) detail += s.T.to_string() + ":" + std::to_string(s.multiplicity) + " ";
      detail.back() = '}';
      detail += " dim " + std::to_string(dims) + "; ";
    }
    return Outcome{ok, detail};
  });

  const auto b4 = repsu2::explicit_basis(4);
  const auto S = cuntz::symmetrizer(2);
  const auto theta11 = cuntz::flip(2);  // words of length 2 act on the first two factors

  report("5a", "e1 e1* = S S S* S* (r=4)", [&] {
    const CMatrix rhs = repsu2::realize(S * S * cuntz::adjoint(S) * cuntz::adjoint(S), 4).entries();
    const double e = max_abs_diff(proj(repsu2::find_vector(b4, "e1")), rhs);
    return Outcome{e < 1e-12, "max diff " + sci(e) + " (<1e-12)"};
  });

  report("5b", "e2 e2* = (I + theta(1,1)) / 2 (r=4)", [&] {
    const CMatrix lhs = proj(repsu2::find_vector(b4, "e2"));
    CMatrix rhs = CMatrix::identity(16) + repsu2::realize(theta11, 4).entries();
    rhs *= 0.5;
    const double e = max_abs_diff(lhs, rhs);
    return Outcome{e < 1e-12, "max diff " + sci(e) + " (<1e-12); rank " + std::to_string(matrix_rank(lhs)) +
                                  " vs " + std::to_string(matrix_rank(rhs))};
  });

  {
    // Not a criterion: the identical statement restricted to the isosinglet sector.
    const CMatrix p0 = repsu2::sector_projector(repsu2::decompose(4), Spin::integer(0)).entries();
    CMatrix sym = CMatrix::identity(16) + repsu2::realize(theta11, 4).entries();
    sym *= 0.5;
    const double e = max_abs_diff(proj(repsu2::find_vector(b4, "e2")), p0 * sym);
    std::printf("INFO  5b  e2 e2* = Pi_T=0 (I + theta(1,1)) / 2 holds to %s\n", sci(e).c_str());
  }

  report("6", "nine-term expansion of U Pi11 U*", [&] {
    Rng rng(2024);
    const StateVector& v11 = repsu2::find_vector(b2, "psi11");
    const StateVector& v10 = repsu2::find_vector(b2, "psi10");
    const StateVector& v1m = repsu2::find_vector(b2, "psi1-1");
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
      const auto g = repsu2::group_element(2 * M_PI * rng.uniform(), M_PI * rng.uniform(), 2 * M_PI * rng.uniform());
      const Complex a = g.alpha, b = g.beta, ab = std::conj(a), bb = std::conj(b);
      const double s2 = std::sqrt(2.0);
      CMatrix x = (a * ab) * (a * ab) * outer(v11, v11);
      x.add_scaled(2.0 * (a * ab) * (b * bb), outer(v10, v10));
      x.add_scaled((b * bb) * (b * bb), outer(v1m, v1m));
      x.add_scaled(a * a * b * b, outer(v11, v1m));
      x.add_scaled(ab * ab * bb * bb, outer(v1m, v11));
      x.add_scaled(-s2 * a * a * ab * b, outer(v11, v10));
      x.add_scaled(-s2 * ab * ab * a * bb, outer(v10, v11));
      x.add_scaled(-s2 * a * bb * b * b, outer(v10, v1m));
      x.add_scaled(-s2 * ab * b * bb * bb, outer(v1m, v10));
      const CMatrix u = repsu2::rep_power(g, 2).entries();
      worst = std::max(worst, max_abs_diff(x, u * pi11 * u.adjoint()));
    }
    return Outcome{worst < 1e-10, "worst over 20 g " + sci(worst) + " (<1e-10)"};
  });

  report("7", "capacity 2, 3, 6 = oracle", [] {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    const int want[] = {2, 3, 6};
    for (int r = 2; r <= 4; ++r) {
      const auto c = protocol::capacity(r);
      const int o = protocol::distinguishable_message_oracle(r);
      ok = ok && c.message_count == want[r - 2] && o == c.message_count;
      detail += "r=" + std::to_string(r) + ": " + std::to_string(c.message_count) + " msgs " + sci(c.bits) +
                " bits oracle " + std::to_string(o) + "; ";
    }
    ok = ok && std::abs(protocol::capacity(2).bits - 1.0) < 1e-15;
    const double secs = seconds_since(t0);
    return Outcome{ok && secs < 10.0, detail + sci(secs) + " s (<10)"};
  });

  report("8", "invariant codebooks perfect, 1e4", [] {
    bool ok = true;
    std::string detail;
    for (int r = 2; r <= 4; ++r) {
      const auto s = protocol::simulate(protocol::build_codebook(r), 10000, protocol::Mode::sampled, 42);
      double worst = 1.0;
      for (double x : s.success_rate) worst = std::min(worst, x);
      ok = ok && worst == 1.0;
      detail += "r=" + std::to_string(r) + " min success " + sci(worst) + "; ";
    }
    return Outcome{ok, detail};
  });

  report("9", "naive Tz codebook decoheres (r=2)", [] {
    const auto book = protocol::build_codebook(2, protocol::CodebookKind::naive);
    double worst = 0;
    for (int m = 1; m <= 3; ++m) {
      const auto t = protocol::transmit(book, m, protocol::ExactTwirl{});
      for (int k = 1; k <= 3; ++k) worst = std::max(worst, std::abs(t.probabilities[static_cast<std::size_t>(k)] - 1.0 / 3.0));
    }
    return Outcome{worst < 1e-12, "max |p - 1/3| " + sci(worst) + " (<1e-12)"};
  });

  report("10", "property suites", [] {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(10);
    int bad = 0;
    std::string detail;
    // twirl channel properties
    for (int r = 1; r <= 4; ++r) {
      const std::size_t n = std::size_t{1} << r;
      for (int k = 0; k < 50; ++k) {
        const CMatrix h = oracle::random_hermitian(rng, n);
        const CMatrix t = tw::twirl_analytic(op(r, h)).entries();
        const CMatrix u = repsu2::rep_power(tw::haar_sample(rng), r).entries();
        const CMatrix psd = h * h;
        if (max_abs_diff(tw::twirl_analytic(op(r, t)).entries(), t) > 1e-11) ++bad;
        if (std::abs(t.trace() - h.trace()) > 1e-10) ++bad;
        if (min_eigenvalue(tw::twirl_analytic(op(r, psd)).entries()) < -1e-10) ++bad;
        if (oracle::max_abs(commutator(u, t)) > 1e-10) ++bad;
      }
    }
    detail += "twirl " + std::to_string(bad) + " bad; ";
    // Cuntz normal form and adjoint
    int bad_c = 0;
    for (int k = 0; k < 200; ++k) {
      const int d = 2 + k % 2;
      const auto a = oracle::random_element(rng, d, 4, 3);
      const auto b = oracle::random_element(rng, d, 4, 3);
      if (!(a.normalized() == a) || !(a.normalized().normalized() == a.normalized())) ++bad_c;
      if (!cuntz::approx_equal(cuntz::adjoint(a * b), cuntz::adjoint(b) * cuntz::adjoint(a), 1e-10)) ++bad_c;
    }
    detail += "cuntz " + std::to_string(bad_c) + " bad; ";
    // sector projectors
    int bad_s = 0;
    for (int r = 0; r <= 5; ++r) {
      const auto& t = repsu2::decompose(r);
      CMatrix sum(t.total_dim(), t.total_dim());
      const CMatrix u = repsu2::rep_power(tw::haar_sample(rng), r).entries();
      for (const auto& s : t.sectors) {
        const CMatrix p = repsu2::sector_projector(t, s.T).entries();
        if (!is_projector(p) || oracle::max_abs(commutator(u, p)) > 1e-11) ++bad_s;
        sum += p;
      }
      if (max_abs_diff(sum, CMatrix::identity(t.total_dim())) > 1e-12) ++bad_s;
    }
    detail += "sectors " + std::to_string(bad_s) + " bad; ";
    // sum m_T^2 = dim of the commutant spanned by permutations
    int bad_m = 0;
    for (int r = 1; r <= 4; ++r) {
      int sum = 0;
      for (const auto& s : repsu2::decompose(r).sectors) sum += s.multiplicity * s.multiplicity;
      if (static_cast<std::size_t>(sum) != span_rank(oracle::all_permutation_matrices(r))) ++bad_m;
    }
    detail += "commutant " + std::to_string(bad_m) + " bad; ";
    const double secs = seconds_since(t0);
    return Outcome{bad + bad_c + bad_s + bad_m == 0 && secs < 60.0, detail + sci(secs) + " s (<60)"};
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

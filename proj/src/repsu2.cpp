#include "cuntzsim/repsu2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "cuntzsim/clebsch.hpp"
#include "cuntzsim/errors.hpp"

namespace cuntzsim::repsu2 {
namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t v = 1;
  for (int k = 0; k < exp; ++k) v *= base;
  return v;
}

std::size_t index_of(const std::vector<int>& word, std::size_t d) {
  std::size_t idx = 0;
  for (int i : word) idx = idx * d + static_cast<std::size_t>(i - 1);
  return idx;
}

void check_power(int r) {
  if (r < 0) throw InvalidArgument("tensor power must be >= 0, got " + std::to_string(r));
  if (r > max_power()) {
    throw ResourceLimit("tensor power " + std::to_string(r) + " exceeds r_max = " + std::to_string(max_power()));
  }
}

StateVector word_vector(int r, std::initializer_list<std::pair<double, std::vector<int>>> terms) {
  StateVector v(power_dim(r));
  for (const auto& [c, w] : terms) v[index_of(w, 2)] += c;
  return v;
}

SectorTable couple_one_more(const SectorTable& parent) {
  const Spin half = Spin::from_twice(1);
  const std::size_t parent_dim = power_dim(parent.r);
  const std::size_t dim = 2 * parent_dim;

  // children keyed by twice-J, copies kept in production order
  std::map<int, Sector> children;
  for (auto it = parent.sectors.rbegin(); it != parent.sectors.rend(); ++it) {
    const Sector& ps = *it;
    for (int c = 0; c < ps.multiplicity; ++c) {
      for (int tj : {ps.T.twice() - 1, ps.T.twice() + 1}) {
        if (tj < 0) continue;
        const Spin J = Spin::from_twice(tj);
        std::vector<StateVector> copy;
        for (int tM = tj; tM >= -tj; tM -= 2) {
          StateVector v(dim);
          for (int k = 0; k < ps.dim; ++k) {
            const int tm = ps.T.twice() - 2 * k;
            for (int bit = 0; bit < 2; ++bit) {
              const int ts = bit == 0 ? 1 : -1;
              const double cg = clebsch_gordan(ps.T, Spin::from_twice(tm), half, Spin::from_twice(ts), J,
                                               Spin::from_twice(tM));
              if (cg == 0.0) continue;
              const StateVector& pv = ps.copies[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
              for (std::size_t i = 0; i < parent_dim; ++i) v[2 * i + static_cast<std::size_t>(bit)] += cg * pv[i];
            }
          }
          copy.push_back(std::move(v));
        }
        Sector& child = children[tj];
        child.T = J;
        child.dim = tj + 1;
        child.copies.push_back(std::move(copy));
        auto path = ps.paths[static_cast<std::size_t>(c)];
        if (parent.r > 0) path.push_back(ps.T);
        child.paths.push_back(std::move(path));
      }
    }
  }

  SectorTable table;
  table.r = parent.r + 1;
  for (auto it = children.rbegin(); it != children.rend(); ++it) {
    Sector s = std::move(it->second);
    // Gram-Schmidt across copies with one coefficient per copy pair (taken from
    // the highest-weight vectors) so every copy stays a standard |T, M> basis.
    for (std::size_t c = 0; c < s.copies.size(); ++c) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        const Complex overlap = inner(s.copies[prev][0], s.copies[c][0]);
        for (std::size_t k = 0; k < s.copies[c].size(); ++k)
          for (std::size_t i = 0; i < dim; ++i) s.copies[c][k][i] -= overlap * s.copies[prev][k][i];
      }
      const double n = norm(s.copies[c][0]);
      for (auto& v : s.copies[c])
        for (auto& x : v) x /= n;
    }
    s.multiplicity = static_cast<int>(s.copies.size());
    table.sectors.push_back(std::move(s));
  }
  return table;
}

SectorTable trivial_table() {
  SectorTable t;
  t.r = 0;
  Sector s;
  s.T = Spin::integer(0);
  s.multiplicity = 1;
  s.dim = 1;
  s.copies = {{StateVector{1.0}}};
  s.paths = {{}};
  t.sectors.push_back(std::move(s));
  return t;
}

}  // namespace

int max_power() {
  if (const char* env = std::getenv("CUNTZSIM_RMAX")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 16) return static_cast<int>(v);
  }
  return kDefaultMaxPower;
}

std::size_t power_dim(int r) { return ipow(2, r); }

TensorOperator::TensorOperator(int r, CMatrix entries) : r_(r), entries_(std::move(entries)) {
  if (r < 0) throw InvalidArgument("tensor power must be >= 0");
  const std::size_t n = power_dim(r);
  if (entries_.rows() != n || entries_.cols() != n) {
    throw DimensionMismatch("operator on H^" + std::to_string(r) + " must be " + std::to_string(n) + "x" +
                            std::to_string(n) + ", got " + std::to_string(entries_.rows()) + "x" +
                            std::to_string(entries_.cols()));
  }
}

TensorOperator TensorOperator::identity(int r) { return TensorOperator(r, CMatrix::identity(power_dim(r))); }

CMatrix realize_map(const cuntz::CuntzElement& x, int source_power, int target_power) {
  if (source_power < 0 || target_power < 0) throw InvalidArgument("tensor powers must be >= 0");
  const auto d = static_cast<std::size_t>(x.d());
  CMatrix out(ipow(d, target_power), ipow(d, source_power));
  for (const auto& t : x.terms()) {
    const int c = static_cast<int>(t.creations.size());
    const int a = static_cast<int>(t.annihilations.size());
    if (c > target_power || a > source_power) {
      throw RankError("word with " + std::to_string(c) + " creations / " + std::to_string(a) +
                      " annihilations does not fit H^" + std::to_string(source_power) + " -> H^" +
                      std::to_string(target_power));
    }
    if (target_power - c != source_power - a) {
      throw NotAnEndomorphism("word degree " + std::to_string(c - a) + " does not map H^" +
                              std::to_string(source_power) + " to H^" + std::to_string(target_power));
    }
    const std::size_t tail = ipow(d, source_power - a);
    const std::size_t row0 = index_of(t.creations, d) * tail;
    const std::size_t col0 = index_of(t.annihilations, d) * tail;
    for (std::size_t k = 0; k < tail; ++k) out(row0 + k, col0 + k) += t.coefficient;
  }
  return out;
}

TensorOperator realize(const cuntz::CuntzElement& x, int r) {
  if (x.d() != 2) throw DimensionMismatch("realize: tensor operators live in O_2, got O_" + std::to_string(x.d()));
  for (const auto& t : x.terms()) {
    if (t.creations.size() != t.annihilations.size()) {
      throw NotAnEndomorphism("term with " + std::to_string(t.creations.size()) + " creations and " +
                              std::to_string(t.annihilations.size()) + " annihilations is not an endomorphism");
    }
  }
  return TensorOperator(r, realize_map(x, r, r));
}

StateVector realize_vector(const cuntz::CuntzElement& x) {
  if (x.is_zero()) throw InvalidArgument("realize_vector: zero element has no defined length");
  const std::size_t k = x.terms().front().creations.size();
  for (const auto& t : x.terms()) {
    if (!t.annihilations.empty() || t.creations.size() != k) {
      throw InvalidArgument("realize_vector: element must be a combination of creation words of one length");
    }
  }
  const CMatrix m = realize_map(x, 0, static_cast<int>(k));
  return StateVector(m.data(), m.data() + m.size());
}

std::size_t word_index(std::initializer_list<int> word) { return index_of(std::vector<int>(word), 2); }

CMatrix GroupElement::matrix() const {
  CMatrix m(2, 2);
  m(0, 0) = alpha;
  m(0, 1) = beta;
  m(1, 0) = -std::conj(beta);
  m(1, 1) = std::conj(alpha);
  return m;
}

GroupElement group_element(double phi1, double theta, double phi2) {
  if (!std::isfinite(phi1) || !std::isfinite(theta) || !std::isfinite(phi2)) {
    throw InvalidArgument("group_element: Euler angles must be finite");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const auto reduce = [&](double phi, const char* name) {
    if (phi >= 0.0 && phi <= two_pi) return phi;
    const double r = phi - two_pi * std::floor(phi / two_pi);
    std::clog << "cuntzsim: warning: " << name << " = " << phi << " reduced to " << r << "\n";
    return r;
  };
  phi1 = reduce(phi1, "phi1");
  phi2 = reduce(phi2, "phi2");
  if (theta < 0.0 || theta > std::numbers::pi) {
    const double c = std::clamp(theta, 0.0, std::numbers::pi);
    std::clog << "cuntzsim: warning: theta = " << theta << " clamped to " << c << "\n";
    theta = c;
  }
  GroupElement g;
  g.phi1 = phi1;
  g.theta = theta;
  g.phi2 = phi2;
  g.alpha = std::cos(theta / 2) * std::exp(Complex(0.0, (phi1 + phi2) / 2));
  g.beta = Complex(0.0, 1.0) * std::sin(theta / 2) * std::exp(Complex(0.0, -(phi2 - phi1) / 2));
  return g;
}

TensorOperator rep_power(const GroupElement& g, int r) {
  check_power(r);
  const CMatrix u = g.matrix();
  CMatrix out = CMatrix::identity(1);
  for (int k = 0; k < r; ++k) out = kron(out, u);
  return TensorOperator(r, std::move(out));
}

CMatrix Sector::isometry(int copy) const {
  if (copy < 0 || copy >= multiplicity) {
    throw NotFound("sector T=" + T.to_string() + " has no copy " + std::to_string(copy));
  }
  const auto& vecs = copies[static_cast<std::size_t>(copy)];
  CMatrix v(vecs.front().size(), vecs.size());
  for (std::size_t k = 0; k < vecs.size(); ++k)
    for (std::size_t i = 0; i < vecs[k].size(); ++i) v(i, k) = vecs[k][i];
  return v;
}

const Sector& SectorTable::sector(Spin T) const {
  for (const auto& s : sectors)
    if (s.T == T) return s;
  throw NotFound("no sector T=" + T.to_string() + " in H^" + std::to_string(r));
}

bool SectorTable::contains(Spin T) const {
  for (const auto& s : sectors)
    if (s.T == T) return true;
  return false;
}

std::size_t SectorTable::total_dim() const {
  std::size_t n = 0;
  for (const auto& s : sectors) n += static_cast<std::size_t>(s.multiplicity * s.dim);
  return n;
}

int SectorTable::total_copies() const {
  int n = 0;
  for (const auto& s : sectors) n += s.multiplicity;
  return n;
}

const SectorTable& decompose(int r) {
  check_power(r);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const SectorTable>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(r); it != cache.end()) return *it->second;
  if (!cache.contains(0)) cache.emplace(0, std::make_unique<const SectorTable>(trivial_table()));
  for (int k = 1; k <= r; ++k) {
    if (!cache.contains(k)) cache.emplace(k, std::make_unique<const SectorTable>(couple_one_more(*cache.at(k - 1))));
  }
  return *cache.at(r);
}

TensorOperator copy_projector(const SectorTable& table, Spin T, int copy) {
  const CMatrix v = table.sector(T).isometry(copy);
  return TensorOperator(table.r, v * v.adjoint());
}

TensorOperator sector_projector(const SectorTable& table, Spin T) {
  const Sector& s = table.sector(T);
  CMatrix p(power_dim(table.r), power_dim(table.r));
  for (int c = 0; c < s.multiplicity; ++c) {
    const CMatrix v = s.isometry(c);
    p += v * v.adjoint();
  }
  return TensorOperator(table.r, std::move(p));
}

TensorOperator weight_projector(int r, Spin T, Spin Tz, int copy) {
  const Sector& s = decompose(r).sector(T);
  const int k = (T.twice() - Tz.twice());
  if (k < 0 || k > T.twice() || k % 2 != 0) {
    throw NotFound("Tz=" + Tz.to_string() + " is not a weight of T=" + T.to_string());
  }
  if (copy < 0 || copy >= s.multiplicity) {
    throw NotFound("sector T=" + T.to_string() + " has no copy " + std::to_string(copy));
  }
  const StateVector& v = s.copies[static_cast<std::size_t>(copy)][static_cast<std::size_t>(k / 2)];
  return TensorOperator(r, outer(v, v));
}

std::vector<NamedVector> explicit_basis(int r) {
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s3 = 1.0 / std::sqrt(3.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  switch (r) {
    case 2:
      return {
          {"psi00", word_vector(2, {{s2, {1, 2}}, {-s2, {2, 1}}})},
          {"psi11", word_vector(2, {{1.0, {1, 1}}})},
          {"psi10", word_vector(2, {{s2, {1, 2}}, {s2, {2, 1}}})},
          {"psi1-1", word_vector(2, {{1.0, {2, 2}}})},
      };
    case 3:
      return {
          {"e1", word_vector(3, {{s2, {1, 2, 1}}, {-s2, {2, 1, 1}}})},
          {"e2", word_vector(3, {{s2, {1, 2, 2}}, {-s2, {2, 1, 2}}})},
          {"e3", word_vector(3, {{2 * s6, {1, 1, 2}}, {-s6, {1, 2, 1}}, {-s6, {2, 1, 1}}})},
          {"e4", word_vector(3, {{s6, {1, 2, 2}}, {s6, {2, 1, 2}}, {-2 * s6, {2, 2, 1}}})},
          {"e5", word_vector(3, {{1.0, {1, 1, 1}}})},
          {"e6", word_vector(3, {{s3, {1, 2, 1}}, {s3, {2, 1, 1}}, {s3, {1, 1, 2}}})},
          {"e7", word_vector(3, {{s3, {1, 2, 2}}, {s3, {2, 1, 2}}, {s3, {2, 2, 1}}})},
          {"e8", word_vector(3, {{1.0, {2, 2, 2}}})},
      };
    case 4:
      return {
          {"e1", word_vector(4, {{0.5, {1, 2, 1, 2}}, {-0.5, {1, 2, 2, 1}}, {-0.5, {2, 1, 1, 2}}, {0.5, {2, 1, 2, 1}}})},
          {"e2", word_vector(4, {{s3, {1, 1, 2, 2}},
                                 {-0.5 * s3, {1, 2, 1, 2}},
                                 {-0.5 * s3, {2, 1, 1, 2}},
                                 {-0.5 * s3, {1, 2, 2, 1}},
                                 {-0.5 * s3, {2, 1, 2, 1}},
                                 {s3, {2, 2, 1, 1}}})},
      };
    default:
      throw NotFound("no explicit basis for r=" + std::to_string(r) + " (supported: 2, 3, 4)");
  }
}

const StateVector& find_vector(const std::vector<NamedVector>& basis, const std::string& name) {
  for (const auto& nv : basis)
    if (nv.name == name) return nv.coords;
  throw NotFound("no basis vector named '" + name + "'");
}

TensorOperator apply_canonical_endomorphism(const TensorOperator& x) {
  return TensorOperator(x.r() + 1, kron(CMatrix::identity(2), x.entries()));
}

}  // namespace cuntzsim::repsu2

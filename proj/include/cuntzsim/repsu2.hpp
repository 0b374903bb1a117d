#pragma once

// Matrix realization of tensor powers of the isospin-1/2 representation.
//
// Basis of H^r: words (i1..ir), i in {1,2}, ordered lexicographically with i1
// most significant, so index = sum (ik - 1) 2^(r-k). psi_1 carries Tz = +1/2.
// A word of length k acts on the first k tensor factors.

#include <cstddef>
#include <string>
#include <vector>

#include "cuntzsim/cuntz.hpp"
#include "cuntzsim/matrix.hpp"
#include "cuntzsim/spin.hpp"

namespace cuntzsim::repsu2 {

inline constexpr int kDefaultMaxPower = 10;

/// Largest supported tensor power: CUNTZSIM_RMAX if set, else kDefaultMaxPower.
int max_power();

std::size_t power_dim(int r);

class TensorOperator {
 public:
  TensorOperator() : TensorOperator(0, CMatrix::identity(1)) {}
  /// Throws DimensionMismatch unless entries is 2^r x 2^r.
  TensorOperator(int r, CMatrix entries);

  static TensorOperator identity(int r);

  int r() const { return r_; }
  std::size_t dim() const { return entries_.rows(); }
  const CMatrix& entries() const { return entries_; }
  Complex operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  int r_;
  CMatrix entries_;
};

/// Matrix of an endomorphism element on H^r (d = 2). Every term must have equal
/// creation and annihilation counts k <= r.
TensorOperator realize(const cuntz::CuntzElement& x, int r);

/// Matrix of x as a map H^s -> H^t for any d (shape d^t x d^s). Each term
/// with c creations and a annihilations needs t - c == s - a >= 0.
CMatrix realize_map(const cuntz::CuntzElement& x, int source_power, int target_power);

/// Coordinates of a creation-only element whose words all have length k.
StateVector realize_vector(const cuntz::CuntzElement& x);

/// Index of a word (1-based letters) in the lexicographic basis of H^len.
std::size_t word_index(std::initializer_list<int> word);

struct GroupElement {
  double phi1 = 0.0;
  double theta = 0.0;
  double phi2 = 0.0;
  Complex alpha{1.0};
  Complex beta{0.0};

  /// [[alpha, beta], [-conj(beta), conj(alpha)]]
  CMatrix matrix() const;
};

/// Euler parameterization alpha = cos(theta/2) e^{i(phi1+phi2)/2},
/// beta = i sin(theta/2) e^{-i(phi2-phi1)/2}. Angles outside phi in [0, 2pi],
/// theta in [0, pi] are reduced/clamped with a warning on stderr; non-finite
/// angles throw InvalidArgument.
GroupElement group_element(double phi1, double theta, double phi2);

/// r-fold Kronecker power of g.matrix().
TensorOperator rep_power(const GroupElement& g, int r);

struct Sector {
  Spin T;
  int multiplicity = 0;
  int dim = 0;
  /// copies[c][k] has Tz = T - k.
  std::vector<std::vector<StateVector>> copies;
  /// Intermediate isospins of the coupling path that produced each copy.
  std::vector<std::vector<Spin>> paths;

  /// Isometry C^(2T+1) -> H^r of one copy (columns in descending Tz).
  CMatrix isometry(int copy) const;
};

struct SectorTable {
  int r = 0;
  std::vector<Sector> sectors;  // descending T

  const Sector& sector(Spin T) const;  // throws NotFound
  bool contains(Spin T) const;
  std::size_t total_dim() const;
  int total_copies() const;
};

/// Isotypic decomposition of the r-th tensor power by recursive coupling
/// T (x) 1/2 -> T +- 1/2 with Condon-Shortley coefficients. Parents are
/// visited in ascending T, so copy 0 of a sector is the one whose path keeps
/// the smallest intermediate isospins. Tables are cached per r.
const SectorTable& decompose(int r);

TensorOperator sector_projector(const SectorTable& table, Spin T);
TensorOperator copy_projector(const SectorTable& table, Spin T, int copy);
TensorOperator weight_projector(int r, Spin T, Spin Tz, int copy);

struct NamedVector {
  std::string name;
  StateVector coords;
};

/// The hand-written bases: r = 2 -> psi00, psi11, psi10, psi1-1;
/// r = 3 -> e1..e8; r = 4 -> the two isosinglets e1, e2.
std::vector<NamedVector> explicit_basis(int r);
const StateVector& find_vector(const std::vector<NamedVector>& basis, const std::string& name);

/// sigma(X) = sum_i psi_i X psi*_i on H^(r+1), i.e. 1_2 (x) X.
TensorOperator apply_canonical_endomorphism(const TensorOperator& x);

}  // namespace cuntzsim::repsu2

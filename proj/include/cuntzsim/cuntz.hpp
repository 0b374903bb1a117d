#pragma once

// Symbolic algebra of the Cuntz generators psi_1..psi_d and their adjoints.
//
// A term psi_{i1}...psi_{ir} psi*_{js}...psi*_{j1} is stored as
// creations = (i1..ir), annihilations = (j1..js), so it is the operator
// |i1..ir><j1..js| and its adjoint is the swap of the two lists. Elements are
// kept in normal form (all psi before all psi*) using only psi*_i psi_j =
// delta_ij I. The completeness relation sum_i psi_i psi*_i = I is not a
// rewrite rule; equality modulo it is decided through repsu2::realize.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cuntzsim/matrix.hpp"

namespace cuntzsim::cuntz {

inline constexpr double kMergeTolerance = 1e-12;

struct CuntzTerm {
  Complex coefficient{1.0};
  std::vector<int> creations;
  std::vector<int> annihilations;

  bool is_unit_word() const { return creations.empty() && annihilations.empty(); }
};

/// One letter of a raw (not yet normal-ordered) product: psi_i or psi*_i.
struct Letter {
  int index;
  bool adjoint;
};

class CuntzElement {
 public:
  /// The zero element of O_d.
  explicit CuntzElement(int d);

  static CuntzElement unit(int d);
  static CuntzElement generator(int d, int i);
  static CuntzElement generator_adjoint(int d, int i);
  /// Sorts, merges equal words and drops coefficients with |c| <= tol.
  static CuntzElement from_terms(int d, std::vector<CuntzTerm> terms, double tol = kMergeTolerance);
  /// Normal form of coefficient * (letter_1 letter_2 ... letter_n).
  static CuntzElement from_word(int d, Complex coefficient, std::span<const Letter> word,
                                double tol = kMergeTolerance);

  int d() const { return d_; }
  const std::vector<CuntzTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Re-runs normalization; idempotent on any element.
  CuntzElement normalized(double tol = kMergeTolerance) const;

  CuntzElement& operator+=(const CuntzElement& other);
  CuntzElement& operator-=(const CuntzElement& other);
  CuntzElement& operator*=(Complex s);

  friend CuntzElement operator+(CuntzElement a, const CuntzElement& b) { return a += b; }
  friend CuntzElement operator-(CuntzElement a, const CuntzElement& b) { return a -= b; }
  friend CuntzElement operator*(Complex s, CuntzElement a) { return a *= s; }
  friend CuntzElement operator*(const CuntzElement& a, const CuntzElement& b);

  /// Exact structural equality (same words, bitwise-equal coefficients).
  bool operator==(const CuntzElement& other) const;

 private:
  int d_;
  std::vector<CuntzTerm> terms_;
};

/// Same set of words with coefficients equal within tol.
bool approx_equal(const CuntzElement& a, const CuntzElement& b, double tol = 1e-12);

CuntzElement multiply(const CuntzElement& a, const CuntzElement& b, double tol = kMergeTolerance);
CuntzElement adjoint(const CuntzElement& a);

/// A bijection on {1..n}, stored as images p(1)..p(n).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Swaps positions a and b (1-based).
  static Permutation transposition(int n, int a, int b);
  /// All n! permutations in lexicographic order of their image lists.
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<int>& images() const { return images_; }
  int sign() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// S = (1/sqrt(d!)) sum_p sign(p) psi_{p(1)}...psi_{p(d)}; d >= 2.
CuntzElement symmetrizer(int d);

/// theta(p) = sum_{i1..in} psi_{i1}..psi_{in} psi*_{i_p(n)}..psi*_{i_p(1)}.
CuntzElement permutation_operator(const Permutation& p, int d);

/// theta(1,1): permutation_operator of the transposition on two symbols.
CuntzElement flip(int d);

/// Text form, e.g. "psi1 psi2 psi2* psi1* - 0.5 psi2 psi2*" or "I".
/// Coefficients are printed with 17 significant digits so parse(to_string(x)) == x.
std::string to_string(const CuntzElement& x);

/// Parses the text grammar: juxtaposition is the product, '+'/'-' separate
/// terms, "psiK" / "psiK*" are generators/adjoints, "I" the unit, and
/// coefficients are written as "0.5", "2i", "i" or "(a+bi)".
CuntzElement parse(std::string_view text, int d);

}  // namespace cuntzsim::cuntz

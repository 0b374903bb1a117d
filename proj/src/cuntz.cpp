#include "cuntzsim/cuntz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cuntzsim/errors.hpp"

namespace cuntzsim::cuntz {
namespace {

void check_d(int d) {
  if (d < 1) throw InvalidArgument("Cuntz algebra needs d >= 1, got " + std::to_string(d));
}

void check_index(int d, int i) {
  if (i < 1 || i > d) {
    throw InvalidArgument("generator index " + std::to_string(i) + " outside 1.." + std::to_string(d));
  }
}

void check_same_algebra(const CuntzElement& a, const CuntzElement& b) {
  if (a.d() != b.d()) {
    throw DimensionMismatch("elements of O_" + std::to_string(a.d()) + " and O_" + std::to_string(b.d()));
  }
}

bool key_less(const CuntzTerm& x, const CuntzTerm& y) {
  if (x.creations != y.creations) return x.creations < y.creations;
  return x.annihilations < y.annihilations;
}

bool same_key(const CuntzTerm& x, const CuntzTerm& y) {
  return x.creations == y.creations && x.annihilations == y.annihilations;
}

// psi_{Ca} psi*_{Aa} . psi_{Cb} psi*_{Ab}: the inner annihilations of a meet
// the creations of b innermost-first, contracting to delta_ij until one side
// runs out. Returns false when a delta vanishes.
bool term_product(const CuntzTerm& a, const CuntzTerm& b, CuntzTerm& out) {
  const std::size_t overlap = std::min(a.annihilations.size(), b.creations.size());
  for (std::size_t k = 0; k < overlap; ++k) {
    if (a.annihilations[k] != b.creations[k]) return false;
  }
  out.coefficient = a.coefficient * b.coefficient;
  out.creations = a.creations;
  out.creations.insert(out.creations.end(), b.creations.begin() + static_cast<std::ptrdiff_t>(overlap),
                       b.creations.end());
  out.annihilations = b.annihilations;
  out.annihilations.insert(out.annihilations.end(),
                           a.annihilations.begin() + static_cast<std::ptrdiff_t>(overlap), a.annihilations.end());
  return true;
}

}  // namespace

CuntzElement::CuntzElement(int d) : d_(d) { check_d(d); }

CuntzElement CuntzElement::unit(int d) {
  CuntzElement e(d);
  e.terms_.push_back(CuntzTerm{});
  return e;
}

CuntzElement CuntzElement::generator(int d, int i) {
  check_index(d, i);
  CuntzElement e(d);
  e.terms_.push_back(CuntzTerm{1.0, {i}, {}});
  return e;
}

CuntzElement CuntzElement::generator_adjoint(int d, int i) {
  check_index(d, i);
  CuntzElement e(d);
  e.terms_.push_back(CuntzTerm{1.0, {}, {i}});
  return e;
}

CuntzElement CuntzElement::from_terms(int d, std::vector<CuntzTerm> terms, double tol) {
  CuntzElement e(d);
  for (const auto& t : terms) {
    for (int i : t.creations) check_index(d, i);
    for (int i : t.annihilations) check_index(d, i);
  }
  std::stable_sort(terms.begin(), terms.end(), key_less);
  for (auto& t : terms) {
    if (!e.terms_.empty() && same_key(e.terms_.back(), t)) {
      e.terms_.back().coefficient += t.coefficient;
    } else {
      e.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(e.terms_, [tol](const CuntzTerm& t) { return std::abs(t.coefficient) <= tol; });
  return e;
}

CuntzElement CuntzElement::from_word(int d, Complex coefficient, std::span<const Letter> word, double tol) {
  CuntzTerm acc{coefficient, {}, {}};
  for (const Letter& l : word) {
    check_index(d, l.index);
    const CuntzTerm letter = l.adjoint ? CuntzTerm{1.0, {}, {l.index}} : CuntzTerm{1.0, {l.index}, {}};
    CuntzTerm next;
    if (!term_product(acc, letter, next)) return CuntzElement(d);
    acc = std::move(next);
  }
  return from_terms(d, {std::move(acc)}, tol);
}

CuntzElement CuntzElement::normalized(double tol) const { return from_terms(d_, terms_, tol); }

CuntzElement& CuntzElement::operator+=(const CuntzElement& other) {
  check_same_algebra(*this, other);
  std::vector<CuntzTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  *this = from_terms(d_, std::move(all));
  return *this;
}

CuntzElement& CuntzElement::operator-=(const CuntzElement& other) { return *this += Complex(-1.0) * other; }

CuntzElement& CuntzElement::operator*=(Complex s) {
  for (auto& t : terms_) t.coefficient *= s;
  *this = normalized();
  return *this;
}

CuntzElement operator*(const CuntzElement& a, const CuntzElement& b) { return multiply(a, b); }

bool CuntzElement::operator==(const CuntzElement& other) const {
  if (d_ != other.d_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (!same_key(terms_[k], other.terms_[k]) || terms_[k].coefficient != other.terms_[k].coefficient) return false;
  }
  return true;
}

bool approx_equal(const CuntzElement& a, const CuntzElement& b, double tol) {
  if (a.d() != b.d() || a.terms().size() != b.terms().size()) return false;
  for (std::size_t k = 0; k < a.terms().size(); ++k) {
    const auto& x = a.terms()[k];
    const auto& y = b.terms()[k];
    if (!same_key(x, y) || std::abs(x.coefficient - y.coefficient) > tol) return false;
  }
  return true;
}

CuntzElement multiply(const CuntzElement& a, const CuntzElement& b, double tol) {
  check_same_algebra(a, b);
  std::vector<CuntzTerm> products;
  products.reserve(a.terms().size() * b.terms().size());
  CuntzTerm t;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms())
      if (term_product(x, y, t)) products.push_back(t);
  return CuntzElement::from_terms(a.d(), std::move(products), tol);
}

CuntzElement adjoint(const CuntzElement& a) {
  std::vector<CuntzTerm> out;
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) out.push_back(CuntzTerm{std::conj(t.coefficient), t.annihilations, t.creations});
  return CuntzElement::from_terms(a.d(), std::move(out), 0.0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)]) {
      throw InvalidArgument("permutation images are not a bijection on 1.." + std::to_string(images_.size()));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw InvalidArgument("permutation size must be >= 0");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n) throw InvalidArgument("transposition positions outside 1..n");
  auto p = identity(n).images_;
  std::swap(p[static_cast<std::size_t>(a - 1)], p[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(p));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  auto img = identity(n).images_;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

int Permutation::sign() const {
  std::vector<bool> visited(images_.size(), false);
  int transpositions = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t k = start; !visited[k]; k = static_cast<std::size_t>(images_[k] - 1)) {
      visited[k] = true;
      ++len;
    }
    transpositions += static_cast<int>(len) - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

CuntzElement symmetrizer(int d) {
  if (d < 2) throw InvalidArgument("symmetrizer needs d >= 2, got " + std::to_string(d));
  const auto perms = Permutation::all(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(perms.size()));
  std::vector<CuntzTerm> terms;
  terms.reserve(perms.size());
  for (const auto& p : perms) terms.push_back(CuntzTerm{scale * p.sign(), p.images(), {}});
  return CuntzElement::from_terms(d, std::move(terms));
}

CuntzElement permutation_operator(const Permutation& p, int d) {
  check_d(d);
  const int n = p.size();
  std::vector<CuntzTerm> terms;
  std::vector<int> word(static_cast<std::size_t>(n), 1);
  while (true) {
    CuntzTerm t{1.0, word, std::vector<int>(static_cast<std::size_t>(n))};
    for (int k = 1; k <= n; ++k) t.annihilations[static_cast<std::size_t>(k - 1)] = word[static_cast<std::size_t>(p(k) - 1)];
    terms.push_back(std::move(t));
    // odometer over {1..d}^n, last position fastest
    int pos = n - 1;
    while (pos >= 0 && word[static_cast<std::size_t>(pos)] == d) word[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++word[static_cast<std::size_t>(pos)];
  }
  return CuntzElement::from_terms(d, std::move(terms));
}

CuntzElement flip(int d) {
  if (d < 2) throw InvalidArgument("flip needs d >= 2, got " + std::to_string(d));
  return permutation_operator(Permutation::transposition(2, 1, 2), d);
}

}  // namespace cuntzsim::cuntz

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <thread>

#include "cuntzsim/cuntz.hpp"
#include "cuntzsim/errors.hpp"
#include "cuntzsim/linalg.hpp"
#include "cuntzsim/repsu2.hpp"
#include "support/oracles.hpp"

using namespace cuntzsim;
using namespace cuntzsim::repsu2;

namespace {

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0)));
}

// m_T(r) = C(r, r/2 - T) - C(r, r/2 - T - 1), doubled units
int expected_multiplicity(int r, int twice_T) {
  const int k = (r - twice_T) / 2;
  return static_cast<int>(binom(r, k) - binom(r, k - 1));
}

GroupElement random_g(Rng& rng) {
  return group_element(2 * M_PI * rng.uniform(), M_PI * rng.uniform(), 2 * M_PI * rng.uniform());
}

CMatrix cmat(const StateVector& v) { return outer(v, v); }

}  // namespace

TEST(Realize, WordsActOnLeadingFactors) {
  // psi1 psi2* on H^2 is |1><2| (x) I
  const auto x = cuntz::parse("psi1 psi2*", 2);
  CMatrix want(4, 4);
  want(word_index({1, 1}), word_index({2, 1})) = 1.0;
  want(word_index({1, 2}), word_index({2, 2})) = 1.0;
  EXPECT_EQ(realize(x, 2).entries(), want);
  EXPECT_EQ(word_index({2, 1, 1}), 4u);
  EXPECT_THROW(realize(cuntz::parse("psi1", 2), 2), NotAnEndomorphism);
  EXPECT_THROW(realize(cuntz::parse("psi1 psi1 psi1* psi1*", 2), 1), RankError);
  EXPECT_THROW(realize(cuntz::parse("psi1 psi1*", 3), 1), InvalidArgument);
}

TEST(Realize, IsAlgebraHomomorphism) {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    // endomorphism elements: equal creation/annihilation lengths
    std::vector<cuntz::CuntzTerm> ta, tb;
    for (int k = 0; k < 3; ++k) {
      const int la = static_cast<int>(rng.next_u64() % 3);
      const int lb = static_cast<int>(rng.next_u64() % 3);
      cuntz::CuntzTerm a{Complex(rng.uniform(), rng.uniform()), {}, {}};
      cuntz::CuntzTerm b{Complex(rng.uniform(), rng.uniform()), {}, {}};
      for (int l = 0; l < la; ++l) {
        a.creations.push_back(1 + static_cast<int>(rng.next_u64() % 2));
        a.annihilations.push_back(1 + static_cast<int>(rng.next_u64() % 2));
      }
      for (int l = 0; l < lb; ++l) {
        b.creations.push_back(1 + static_cast<int>(rng.next_u64() % 2));
        b.annihilations.push_back(1 + static_cast<int>(rng.next_u64() % 2));
      }
      ta.push_back(a);
      tb.push_back(b);
    }
    const auto a = cuntz::CuntzElement::from_terms(2, ta);
    const auto b = cuntz::CuntzElement::from_terms(2, tb);
    const int r = 3;
    EXPECT_LT(max_abs_diff(realize(a * b, r).entries(), realize(a, r).entries() * realize(b, r).entries()), 1e-12);
    EXPECT_LT(max_abs_diff(realize(cuntz::adjoint(a), r).entries(), realize(a, r).entries().adjoint()), 1e-15);
  }
}

TEST(Realize, MapAndVector) {
  const auto s = cuntz::symmetrizer(2);
  const StateVector v = realize_vector(s);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_NEAR(v[1].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(v[2].real(), -1 / std::sqrt(2.0), 1e-15);
  const CMatrix m = realize_map(s, 0, 2);
  EXPECT_EQ(m.rows(), 4u);
  EXPECT_EQ(m.cols(), 1u);
  // d = 3 generator as a map H^1 -> H^2
  const CMatrix g = realize_map(cuntz::CuntzElement::generator(3, 2), 1, 2);
  EXPECT_EQ(g.rows(), 9u);
  EXPECT_EQ(g(3 + 0, 0), Complex(1.0));
  EXPECT_THROW(realize_map(cuntz::CuntzElement::generator(2, 1), 2, 2), NotAnEndomorphism);
}

TEST(Group, MatchesPauliExponentials) {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const double p1 = 2 * M_PI * rng.uniform();
    const double th = M_PI * rng.uniform();
    const double p2 = 2 * M_PI * rng.uniform();
    const auto g = group_element(p1, th, p2);
    EXPECT_LT(max_abs_diff(g.matrix(), oracle::su2_from_pauli(p1, th, p2)), 1e-14);
    EXPECT_NEAR(std::norm(g.alpha) + std::norm(g.beta), 1.0, 1e-14);
  }
  const auto g = group_element(0, M_PI, 0);
  CMatrix want(2, 2);
  want(0, 1) = Complex(0, 1);
  want(1, 0) = Complex(0, 1);
  EXPECT_LT(max_abs_diff(g.matrix(), want), 1e-15);
}

TEST(Group, OutOfRangeAnglesAndErrors) {
  // phi is reduced mod 2pi before the half angles are taken
  const auto a = group_element(0.3, 1.0, 0.2);
  const auto b = group_element(0.3 + 2 * M_PI, 1.0, 0.2);
  EXPECT_NEAR(b.phi1, 0.3, 1e-15);
  EXPECT_LT(max_abs_diff(a.matrix(), b.matrix()), 1e-13);
  const auto c = group_element(0.0, -0.5, 0.0);  // clamped to theta = 0
  EXPECT_LT(max_abs_diff(c.matrix(), CMatrix::identity(2)), 1e-15);
  EXPECT_THROW(group_element(std::nan(""), 0, 0), InvalidArgument);
  EXPECT_THROW(group_element(0, INFINITY, 0), InvalidArgument);
}

TEST(Group, RepPowerMatchesOracleAndIsHomomorphism) {
  Rng rng(43);
  for (int r = 0; r <= 5; ++r) {
    const auto g = random_g(rng);
    const auto h = random_g(rng);
    const auto pg = rep_power(g, r).entries();
    EXPECT_LT(max_abs_diff(pg, oracle::tensor_power(g.matrix(), r)), 1e-14);
    // product of group elements as 2x2 matrices; (g h)^{(x)r} = g^{(x)r} h^{(x)r}
    EXPECT_LT(max_abs_diff(oracle::tensor_power(g.matrix() * h.matrix(), r), pg * rep_power(h, r).entries()),
              1e-13);
    EXPECT_LT(max_abs_diff(pg * pg.adjoint(), CMatrix::identity(pg.rows())), 1e-13);
  }
}

TEST(Decompose, TablesForSmallPowers) {
  const std::map<int, std::map<int, int>> want{
      {0, {{0, 1}}}, {1, {{1, 1}}}, {2, {{2, 1}, {0, 1}}}, {3, {{3, 1}, {1, 2}}}, {4, {{4, 1}, {2, 3}, {0, 2}}}};
  for (const auto& [r, sectors] : want) {
    const auto& t = decompose(r);
    EXPECT_EQ(t.r, r);
    EXPECT_EQ(t.total_dim(), std::size_t{1} << r);
    std::map<int, int> got;
    for (const auto& s : t.sectors) got[s.T.twice()] = s.multiplicity;
    EXPECT_EQ(got, sectors) << r;
  }
}

TEST(Decompose, MultiplicitiesMatchBinomialFormula) {
  for (int r = 0; r <= 9; ++r) {
    const auto& t = decompose(r);
    for (const auto& s : t.sectors) EXPECT_EQ(s.multiplicity, expected_multiplicity(r, s.T.twice())) << r;
    // descending T
    for (std::size_t k = 1; k < t.sectors.size(); ++k) EXPECT_GT(t.sectors[k - 1].T, t.sectors[k].T);
  }
}

TEST(Decompose, BasisIsOrthonormalWeightBasis) {
  for (int r = 1; r <= 6; ++r) {
    const auto& t = decompose(r);
    const CMatrix jz = oracle::total_jz(r);
    const CMatrix j2 = oracle::total_j2(r);
    std::vector<StateVector> all;
    for (const auto& s : t.sectors) {
      for (const auto& copy : s.copies) {
        ASSERT_EQ(copy.size(), static_cast<std::size_t>(s.dim));
        for (std::size_t k = 0; k < copy.size(); ++k) {
          const double tz = s.T.value() - static_cast<double>(k);
          const auto jv = cuntzsim::apply(jz, copy[k]);
          const auto j2v = cuntzsim::apply(j2, copy[k]);
          for (std::size_t i = 0; i < jv.size(); ++i) {
            EXPECT_NEAR(std::abs(jv[i] - tz * copy[k][i]), 0.0, 1e-12);
            EXPECT_NEAR(std::abs(j2v[i] - s.T.value() * (s.T.value() + 1) * copy[k][i]), 0.0, 1e-11);
          }
          all.push_back(copy[k]);
        }
      }
    }
    ASSERT_EQ(all.size(), std::size_t{1} << r);
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < all.size(); ++b)
        EXPECT_NEAR(std::abs(inner(all[a], all[b])), a == b ? 1.0 : 0.0, 1e-12);
  }
}

TEST(Decompose, CopiesAreStandardMultiplets) {
  // Lowering operator J- = sum of per-factor s-, maps |T,M> to sqrt((T+M)(T-M+1)) |T,M-1>
  for (int r = 2; r <= 5; ++r) {
    const std::size_t n = std::size_t{1} << r;
    CMatrix lower(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < r; ++k)
        if (((i >> k) & 1U) == 0) lower(i | (std::size_t{1} << k), i) += 1.0;
    for (const auto& s : decompose(r).sectors) {
      for (const auto& copy : s.copies) {
        for (std::size_t k = 0; k + 1 < copy.size(); ++k) {
          const double T = s.T.value();
          const double M = T - static_cast<double>(k);
          const auto v = cuntzsim::apply(lower, copy[k]);
          const double c = std::sqrt((T + M) * (T - M + 1));
          for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(std::abs(v[i] - c * copy[k + 1][i]), 0.0, 1e-12);
        }
      }
    }
  }
}

TEST(Decompose, ProjectorCompletenessAndInvariance) {
  Rng rng(44);
  for (int r = 0; r <= 5; ++r) {
    const auto& t = decompose(r);
    CMatrix sum(t.total_dim(), t.total_dim());
    for (const auto& s : t.sectors) {
      const auto p = sector_projector(t, s.T).entries();
      EXPECT_TRUE(is_projector(p));
      EXPECT_NEAR(p.trace().real(), s.multiplicity * s.dim, 1e-10);
      for (int k = 0; k < 3; ++k) {
        const auto u = rep_power(random_g(rng), r).entries();
        EXPECT_LT(oracle::max_abs(commutator(u, p)), 1e-11);
      }
      CMatrix copies(t.total_dim(), t.total_dim());
      for (int c = 0; c < s.multiplicity; ++c) {
        const auto pc = copy_projector(t, s.T, c).entries();
        EXPECT_TRUE(is_projector(pc));
        copies += pc;
      }
      EXPECT_LT(max_abs_diff(copies, p), 1e-12);
      sum += p;
    }
    EXPECT_LT(max_abs_diff(sum, CMatrix::identity(t.total_dim())), 1e-12);
  }
  EXPECT_THROW(sector_projector(decompose(2), Spin::from_twice(1)), NotFound);
  EXPECT_THROW(copy_projector(decompose(3), Spin::from_twice(1), 2), InvalidArgument);
}

TEST(Decompose, WeightProjectors) {
  const auto p = weight_projector(2, Spin::integer(1), Spin::integer(1), 0).entries();
  CMatrix want(4, 4);
  want(0, 0) = 1.0;
  EXPECT_LT(max_abs_diff(p, want), 1e-15);
  EXPECT_THROW(weight_projector(2, Spin::integer(1), Spin::integer(2), 0), InvalidArgument);
}

TEST(Decompose, MultiplicitiesSquaredEqualCommutantDimension) {
  for (int r = 1; r <= 4; ++r) {
    int sum = 0;
    for (const auto& s : decompose(r).sectors) sum += s.multiplicity * s.multiplicity;
    const auto perms = oracle::all_permutation_matrices(r);
    EXPECT_EQ(static_cast<std::size_t>(sum), span_rank(perms)) << r;
  }
}

TEST(Decompose, RespectsResourceLimit) {
  EXPECT_THROW(decompose(max_power() + 1), ResourceLimit);
  EXPECT_THROW(decompose(-1), InvalidArgument);
}

TEST(ExplicitBasis, MatchesDecomposition) {
  const auto& t2 = decompose(2);
  const auto b2 = explicit_basis(2);
  EXPECT_LT(max_abs_diff(cmat(find_vector(b2, "psi00")), cmat(t2.sector(Spin::integer(0)).copies[0][0])), 1e-15);
  for (int k = 0; k < 3; ++k) {
    const char* names[] = {"psi11", "psi10", "psi1-1"};
    const auto& v = t2.sector(Spin::integer(1)).copies[0][static_cast<std::size_t>(k)];
    EXPECT_LT(max_abs_diff(cmat(find_vector(b2, names[k])), cmat(v)), 1e-15);
  }
  // r = 3: e1,e2 copy 0; e3,e4 copy 1; e5..e8 the quartet, all with identical phases
  const auto& t3 = decompose(3);
  const auto b3 = explicit_basis(3);
  const auto& half = t3.sector(Spin::from_twice(1));
  const auto& quartet = t3.sector(Spin::from_twice(3));
  const std::vector<std::pair<std::string, const StateVector*>> pairs{
      {"e1", &half.copies[0][0]},    {"e2", &half.copies[0][1]},    {"e3", &half.copies[1][0]},
      {"e4", &half.copies[1][1]},    {"e5", &quartet.copies[0][0]}, {"e6", &quartet.copies[0][1]},
      {"e7", &quartet.copies[0][2]}, {"e8", &quartet.copies[0][3]}};
  for (const auto& [name, v] : pairs) {
    const auto& e = find_vector(b3, name);
    for (std::size_t i = 0; i < e.size(); ++i) EXPECT_NEAR(std::abs(e[i] - (*v)[i]), 0.0, 1e-14) << name;
  }
  // r = 4 singlets: e1 is copy 0; e2 spans copy 1
  const auto& t4 = decompose(4);
  const auto b4 = explicit_basis(4);
  const auto& singlet = t4.sector(Spin::integer(0));
  EXPECT_LT(max_abs_diff(cmat(find_vector(b4, "e1")), cmat(singlet.copies[0][0])), 1e-14);
  EXPECT_LT(max_abs_diff(cmat(find_vector(b4, "e2")), cmat(singlet.copies[1][0])), 1e-14);
  EXPECT_THROW(explicit_basis(5), NotFound);
  EXPECT_THROW(find_vector(b4, "e9"), NotFound);
}

TEST(ExplicitBasis, SingletProjectorIdentities) {
  // e1 e1* = S S S* S*, and completeness restricted to the r = 3 doublet copy 0 equals S S*
  const auto s = cuntz::symmetrizer(2);
  const auto ssss = realize(s * s * cuntz::adjoint(s) * cuntz::adjoint(s), 4).entries();
  EXPECT_LT(max_abs_diff(cmat(find_vector(explicit_basis(4), "e1")), ssss), 1e-15);
  const auto b3 = explicit_basis(3);
  const CMatrix pi_half0 = cmat(find_vector(b3, "e1")) + cmat(find_vector(b3, "e2"));
  EXPECT_LT(max_abs_diff(pi_half0, realize(s * cuntz::adjoint(s), 3).entries()), 1e-15);
}

TEST(CanonicalEndomorphism, PrependsIdentityFactor) {
  Rng rng(45);
  const auto x = oracle::random_matrix(rng, 4, 4);
  CMatrix want(8, 8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      want(i, j) = x(i, j);
      want(i + 4, j + 4) = x(i, j);
    }
  EXPECT_EQ(apply_canonical_endomorphism(TensorOperator(2, x)).entries(), want);
  // sum_i psi_i X psi_i* realized agrees
  const auto a = cuntz::parse("psi1 psi2*", 2);
  const auto sigma = cuntz::parse("psi1", 2) * a * cuntz::parse("psi1*", 2) +
                     cuntz::parse("psi2", 2) * a * cuntz::parse("psi2*", 2);
  EXPECT_LT(max_abs_diff(realize(sigma, 2).entries(), apply_canonical_endomorphism(realize(a, 1)).entries()),
            1e-15);
}

TEST(TensorOperatorType, ValidatesShape) {
  EXPECT_THROW(TensorOperator(2, CMatrix(3, 3)), DimensionMismatch);
  EXPECT_THROW(TensorOperator(1, CMatrix(2, 3)), DimensionMismatch);
  EXPECT_EQ(TensorOperator::identity(3).dim(), 8u);
}

TEST(ExplicitBasis, DoubletCopyZeroIsSymmetrizerTimesGenerator) {
  const auto s = cuntz::symmetrizer(2);
  const auto b3 = explicit_basis(3);
  for (int i = 1; i <= 2; ++i) {
    const auto v = realize_vector(s * cuntz::CuntzElement::generator(2, i));
    const auto& e = find_vector(b3, i == 1 ? "e1" : "e2");
    for (std::size_t k = 0; k < v.size(); ++k) EXPECT_NEAR(std::abs(v[k] - e[k]), 0.0, 1e-15);
  }
  // S S* at r = 3 has rank 2: one copy of the doublet, not the isotypic projector
  EXPECT_EQ(matrix_rank(realize(s * cuntz::adjoint(s), 3).entries()), 2u);
  EXPECT_EQ(matrix_rank(sector_projector(decompose(3), Spin::from_twice(1)).entries()), 4u);
}

TEST(Decompose, CacheIsSafeForConcurrentReaders) {
  std::vector<const SectorTable*> seen(8, nullptr);
  std::vector<std::thread> threads;
  for (std::size_t k = 0; k < seen.size(); ++k) {
    threads.emplace_back([&seen, k] { seen[k] = &decompose(7); });
  }
  for (auto& t : threads) t.join();
  for (const auto* p : seen) EXPECT_EQ(p, seen.front());
  EXPECT_EQ(seen.front()->total_dim(), 128u);
}

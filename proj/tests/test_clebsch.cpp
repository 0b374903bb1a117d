#include <gtest/gtest.h>

#include <cmath>

#include "cuntzsim/clebsch.hpp"
#include "support/oracles.hpp"

using cuntzsim::clebsch_gordan;
using cuntzsim::Spin;

namespace {
Spin h(int twice) { return Spin::from_twice(twice); }
}  // namespace

TEST(Clebsch, SpinHalfCouplingMatchesClosedForm) {
  for (int tj = 0; tj <= 9; ++tj) {
    for (int tJ : {tj - 1, tj + 1}) {
      if (tJ < 0) continue;
      for (int tM = -tJ; tM <= tJ; tM += 2) {
        for (int tms : {1, -1}) {
          const int tm1 = tM - tms;
          if (std::abs(tm1) > tj) continue;
          EXPECT_NEAR(clebsch_gordan(h(tj), h(tm1), h(1), h(tms), h(tJ), h(tM)),
                      oracle::cg_spin_half(tj, tms, tJ, tM), 1e-13)
              << tj << " " << tm1 << " " << tms << " " << tJ << " " << tM;
        }
      }
    }
  }
}

TEST(Clebsch, KnownValues) {
  const double s2 = 1 / std::sqrt(2.0);
  EXPECT_NEAR(clebsch_gordan(h(1), h(1), h(1), h(-1), h(0), h(0)), s2, 1e-15);
  EXPECT_NEAR(clebsch_gordan(h(1), h(-1), h(1), h(1), h(0), h(0)), -s2, 1e-15);
  EXPECT_NEAR(clebsch_gordan(h(2), h(0), h(2), h(0), h(0), h(0)), -1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(clebsch_gordan(h(2), h(2), h(2), h(-2), h(2), h(0)), s2, 1e-15);
  EXPECT_NEAR(clebsch_gordan(h(2), h(0), h(2), h(0), h(2), h(0)), 0.0, 1e-15);
}

TEST(Clebsch, ForbiddenLabelsVanish) {
  EXPECT_EQ(clebsch_gordan(h(1), h(1), h(1), h(1), h(0), h(0)), 0.0);  // M mismatch
  EXPECT_EQ(clebsch_gordan(h(1), h(1), h(1), h(1), h(4), h(2)), 0.0);  // triangle
  EXPECT_EQ(clebsch_gordan(h(1), h(3), h(1), h(-1), h(2), h(2)), 0.0);  // |m| > j
}

TEST(Clebsch, Orthogonality) {
  // sum_{m1,m2} <j1 m1 j2 m2|J M><j1 m1 j2 m2|J' M> = delta_JJ'
  for (int tj1 = 0; tj1 <= 4; ++tj1) {
    for (int tj2 = 0; tj2 <= 3; ++tj2) {
      for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2) {
        for (int tJp = std::abs(tj1 - tj2); tJp <= tj1 + tj2; tJp += 2) {
          for (int tM = -std::min(tJ, tJp); tM <= std::min(tJ, tJp); tM += 2) {
            double sum = 0;
            for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
              const int tm2 = tM - tm1;
              if (std::abs(tm2) > tj2) continue;
              sum += clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tJ), h(tM)) *
                     clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tJp), h(tM));
            }
            EXPECT_NEAR(sum, tJ == tJp ? 1.0 : 0.0, 1e-12);
          }
        }
      }
    }
  }
}

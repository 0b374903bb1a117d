#pragma once

#include "cuntzsim/spin.hpp"

namespace cuntzsim {

/// <j1 m1; j2 m2 | J M> in the Condon-Shortley phase convention
/// (Racah's closed form). Zero for any label combination that is not allowed.
double clebsch_gordan(Spin j1, Spin m1, Spin j2, Spin m2, Spin J, Spin M);

}  // namespace cuntzsim

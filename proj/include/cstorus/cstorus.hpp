#pragma once

// Chern-Simons-Witten partition functions of mapping tori of the 2-torus:
// exact fixed-point sums, Gauss-sum trace formulas, and the SU(2) modular
// representation trace, plus the framing phases relating them.

#include "cstorus/errors.hpp"
#include "cstorus/fixed_points.hpp"
#include "cstorus/framing.hpp"
#include "cstorus/gauss_sums.hpp"
#include "cstorus/int_linalg.hpp"
#include "cstorus/modular_group.hpp"
#include "cstorus/numeric.hpp"
#include "cstorus/partition.hpp"
#include "cstorus/root_systems.hpp"

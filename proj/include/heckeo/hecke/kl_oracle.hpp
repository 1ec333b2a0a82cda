#pragma once

#include "heckeo/check.hpp"
#include "heckeo/hecke/hecke_algebra.hpp"

namespace heckeo {

/// Computes C_x without the inductive recursion: the coefficients of H_y
/// (l(y) < l(x)) are unknown integers in degrees 1..l(x)-l(y), and d(C_x) = C_x
/// is solved as a rational linear system. Uses its own dense multiplication.
/// Throws std::logic_error if the solution is not unique or not integral.
HeckeElt kl_element_by_linear_system(WeylElt x);

/// Compares the recursion against the linear-system solver for every x.
CheckResult verify_kl_oracle(const HeckeAlgebra& algebra);

}  // namespace heckeo

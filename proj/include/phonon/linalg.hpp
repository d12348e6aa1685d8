// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "phonon/types.hpp"

namespace phonon::linalg {

/// All singular values of a square complex matrix, descending.
std::vector<double> singular_values(const MatXc& A);

/// Smallest singular value.
double sigma_min(const MatXc& A);

/// sigma_min / sigma_max (conditioning-independent root indicator).
double sigma_min_rel(const MatXc& A);

/// Smallest singular value and the corresponding right singular vector.
double sigma_min_vector(const MatXc& A, VecXc& v_min);

/// log|det A| via LU (scaled to avoid overflow): sum log|U_ii|.
double log_abs_det(const MatXc& A);

}  // namespace phonon::linalg

// Copyright (C) 2026 The iasec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "iasec/rng.hpp"

namespace iasec {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

namespace linalg {

// Relative rank threshold: singular values below max(m,n) * sigma_max * 1e-12
// count as zero.
inline constexpr double kRankRelTol = 1e-12;

int numerical_rank(const CMatrix& a);

// Singular values in descending order (empty for an empty matrix).
Eigen::VectorXd singular_values(const CMatrix& a);

// Orthonormal basis of null(a): right singular vectors past the numerical
// rank. A matrix with zero rows has the identity as its null-space basis.
CMatrix null_space(const CMatrix& a);

struct EigenSelection {
  CMatrix vectors;             // columns = selected eigenvectors
  Eigen::VectorXd values;      // matching eigenvalues, ascending
  bool degenerate = false;     // eigenvalue at the cut ties with the next one
};

// The count least-dominant eigenvectors of a Hermitian matrix. Ties keep
// the solver's natural ordering and set the degenerate flag.
EigenSelection least_eigenvectors(const CMatrix& hermitian, Eigen::Index count);

// Rotate each column so its first non-negligible entry is real and positive.
void normalize_phase(CMatrix& columns);
void normalize_phase(CVector& v);

// Haar-like random matrix with orthonormal columns (rows >= cols).
CMatrix random_orthonormal(RandomStream& rng, Eigen::Index rows, Eigen::Index cols);

struct SingularPair {
  CVector left;
  CVector right;
  double value = 0.0;
};

// Dominant singular triplet; left = a * right / value so that
// left^H a right = value exactly in exact arithmetic.
SingularPair top_singular_pair(const CMatrix& a);

// Frobenius distance of q^H q from the identity.
double orthonormality_error(const CMatrix& q);

}  // namespace linalg
}  // namespace iasec

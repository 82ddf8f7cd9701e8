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

#include "iasec/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace iasec::linalg {

namespace {

double rank_threshold(const CMatrix& a, const Eigen::VectorXd& sv) {
  if (sv.size() == 0) return 0.0;
  return static_cast<double>(std::max(a.rows(), a.cols())) * sv(0) * kRankRelTol;
}

int rank_from(const CMatrix& a, const Eigen::VectorXd& sv) {
  const double tol = rank_threshold(a, sv);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++r;
  return r;
}

}  // namespace

Eigen::VectorXd singular_values(const CMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  return Eigen::JacobiSVD<CMatrix>(a).singularValues();
}

int numerical_rank(const CMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return rank_from(a, singular_values(a));
}

CMatrix null_space(const CMatrix& a) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return CMatrix::Identity(n, n);
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const int r = rank_from(a, svd.singularValues());
  CMatrix basis = svd.matrixV().rightCols(n - r);
  normalize_phase(basis);
  return basis;
}

EigenSelection least_eigenvectors(const CMatrix& hermitian, Eigen::Index count) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian);
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  EigenSelection sel;
  sel.vectors = es.eigenvectors().leftCols(count);
  sel.values = ev.head(count);
  if (count > 0 && count < ev.size()) {
    const double scale = std::max(std::abs(ev(ev.size() - 1)), 1e-300);
    sel.degenerate = std::abs(ev(count) - ev(count - 1)) <= 1e-12 * scale;
  }
  normalize_phase(sel.vectors);
  return sel;
}

void normalize_phase(CMatrix& columns) {
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    const double norm = columns.col(c).norm();
    if (norm == 0.0) continue;
    for (Eigen::Index r = 0; r < columns.rows(); ++r) {
      const double mag = std::abs(columns(r, c));
      if (mag > 1e-12 * norm) {
        columns.col(c) *= std::conj(columns(r, c)) / mag;
        columns(r, c) = mag;
        break;
      }
    }
  }
}

void normalize_phase(CVector& v) {
  CMatrix m = v;
  normalize_phase(m);
  v = m.col(0);
}

CMatrix random_orthonormal(RandomStream& rng, Eigen::Index rows, Eigen::Index cols) {
  const CMatrix g = rng.complex_normal(rows, cols);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(rows, cols);
  const CMatrix& r = qr.matrixQR();
  // Fold the phases of diag(R) into Q so the distribution is Haar.
  for (Eigen::Index c = 0; c < cols; ++c) {
    const double mag = std::abs(r(c, c));
    if (mag > 0.0) q.col(c) *= r(c, c) / mag;
  }
  return q;
}

SingularPair top_singular_pair(const CMatrix& a) {
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SingularPair p;
  p.value = svd.singularValues()(0);
  p.right = svd.matrixV().col(0);
  normalize_phase(p.right);
  p.left = a * p.right / p.value;
  p.left.normalize();
  return p;
}

double orthonormality_error(const CMatrix& q) {
  return (q.adjoint() * q - CMatrix::Identity(q.cols(), q.cols())).norm();
}

}  // namespace iasec::linalg

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

#include <doctest.h>

#include <cmath>

#include "iasec/channel.hpp"
#include "iasec/error.hpp"

using namespace iasec;

namespace {

// Rank-r matrix as a product of random factors.
CMatrix low_rank(RandomStream& rng, int rows, int cols, int r) {
  return rng.complex_normal(rows, r) * rng.complex_normal(r, cols);
}

// Largest singular value by power iteration on A^H A.
double power_sigma_max(const CMatrix& a) {
  RandomStream rng(99);
  CVector x = rng.complex_normal(a.cols());
  for (int i = 0; i < 2000; ++i) x = (a.adjoint() * (a * x)).normalized();
  return (a * x).norm();
}

}  // namespace

TEST_CASE("config text round-trips") {
  const NetworkConfig c = make_config(12, 2, 3, 4, 9, 4, 2, 16);
  const std::string text = format_config(c, 7);
  CHECK(text == "Ma=12 Nb=2 da=3 K=4 Mk=9 Nk=4 dk=2 L=16 seed=7");
  const ParsedConfig p = parse_config(text);
  CHECK(p.config == c);
  REQUIRE(p.seed);
  CHECK(*p.seed == 7u);
}

TEST_CASE("heterogeneous pairs use comma lists") {
  const ParsedConfig p = parse_config("Ma=10 Nb=1 da=2 K=3 Mk=6,7,8 Nk=3 dk=1,1,2");
  REQUIRE(p.config.K() == 3);
  CHECK(p.config.pairs[1] == PairLayout{7, 3, 1});
  CHECK(p.config.pairs[2] == PairLayout{8, 3, 2});
  CHECK(p.config.L == 1);
  CHECK_FALSE(p.seed);
  CHECK(parse_config(format_config(p.config)).config == p.config);
  // K inferred from list lengths.
  CHECK(parse_config("Ma=10 Nb=1 da=2 Mk=6,7 Nk=3,3 dk=1,1").config.K() == 2);
}

TEST_CASE("malformed config text is rejected") {
  CHECK_THROWS_AS(parse_config("Ma=12 Nb=2"), ConfigError);
  CHECK_THROWS_AS(parse_config("Ma=12 Nb=2 da=1 foo=3"), ConfigError);
  CHECK_THROWS_AS(parse_config("Ma=12 Ma=11 Nb=2 da=1"), ConfigError);
  CHECK_THROWS_AS(parse_config("Ma=12 Nb=two da=1"), ConfigError);
  CHECK_THROWS_AS(parse_config("Ma=12 Nb=2 da=1 K=3 Mk=9,9 Nk=4 dk=2"), ConfigError);
  CHECK_THROWS_AS(parse_config("Ma=12 Nb=2 da=1 K=2 Nk=4 dk=2"), ConfigError);
  CHECK_THROWS_AS(parse_config("Ma=12 Nb=2 da=1 seed=-1"), ConfigError);
  CHECK_THROWS_AS(parse_config("Ma 12"), ConfigError);
}

TEST_CASE("validation names the violated constraint") {
  auto message = [](const NetworkConfig& c) {
    try {
      c.validate();
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(make_config(12, 2, 4, 4, 9, 4, 2)).empty());
  CHECK(message(make_config(12, 2, 12, 4, 9, 4, 2)).find("da <= Ma - 1") != std::string::npos);
  CHECK(message(make_config(12, 2, 0, 4, 9, 4, 2)).find("1 <= da") != std::string::npos);
  CHECK(message(make_config(12, 2, 3, 4, 9, 2, 2)).find("dk <= min(Mk, Nk - 1)") != std::string::npos);
  CHECK(message(make_config(8, 2, 3, 4, 9, 4, 2)).find("Ma >= 1 + sum dk") != std::string::npos);
  CHECK(message(make_config(12, 2, 3, 4, 8, 4, 2)).find("Mk >= 1 + sum dk") != std::string::npos);
  CHECK(message(make_config(12, 2, 3, 4, 9, 4, 2, 0)).find("L must be >= 1") != std::string::npos);
}

TEST_CASE("validation agrees with the constraint list over a sweep") {
  for (int Ma = 2; Ma <= 20; ++Ma)
    for (int K = 0; K <= 6; ++K)
      for (int da = 0; da <= Ma; da += 3)
        for (int dk = 1; dk <= 3; ++dk) {
          const NetworkConfig c = make_config(Ma, 2, da, K, 8, 3, dk);
          const int sd = K * dk;
          const bool ok = da >= 1 && da <= Ma - 1 && (K == 0 || (dk <= std::min(8, 2) && Ma >= 1 + sd && 8 >= 1 + sd));
          bool threw = false;
          try {
            c.validate();
          } catch (const ConfigError&) {
            threw = true;
          }
          CHECK_MESSAGE(threw != ok, format_config(c));
        }
}

TEST_CASE("channel draws have the right shapes and are reproducible") {
  const NetworkConfig c = parse_config("Ma=10 Nb=2 da=2 K=3 Mk=7,8,9 Nk=3,4,5 dk=1,2,1").config;
  const ChannelSet a = generate_channels(c, 17);
  const ChannelSet b = generate_channels(c, 17);
  const ChannelSet other = generate_channels(c, 18);
  CHECK_NOTHROW(check_channel_shapes(a, c));
  CHECK(a.Hba.rows() == 2);
  CHECK(a.Hba.cols() == 10);
  CHECK(a.Hka[2].rows() == 5);
  CHECK(a.Hbk[1].cols() == 8);
  CHECK(a.Hkj[0][2].rows() == 3);
  CHECK(a.Hkj[0][2].cols() == 9);
  CHECK((a.Hba - b.Hba).norm() == 0.0);
  CHECK((a.Hkj[2][1] - b.Hkj[2][1]).norm() == 0.0);
  CHECK((a.Hba - other.Hba).norm() > 0.0);

  // Draw order: Hba, then every Hka, then every Hbk, then Hkj row by row.
  RandomStream rng(17, StreamTag::kChannels);
  CHECK((rng.complex_normal(2, 10) - a.Hba).norm() == 0.0);
  for (int k = 0; k < 3; ++k) CHECK((rng.complex_normal(a.Hka[k].rows(), 10) - a.Hka[k]).norm() == 0.0);

  CHECK_THROWS_AS(check_channel_shapes(a, make_config(10, 2, 2, 3, 9, 4, 1)), ShapeError);
  CHECK_THROWS_AS(generate_channels(make_config(10, 2, 10, 3, 9, 4, 1), 0), ConfigError);
}

TEST_CASE("entries of drawn channels are CN(0,1)") {
  const NetworkConfig c = make_config(12, 2, 4, 4, 9, 4, 2);
  double power = 0.0, n = 0.0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const ChannelSet ch = generate_channels(c, s);
    power += ch.Hba.squaredNorm() + ch.Hkj[1][3].squaredNorm();
    n += ch.Hba.size() + ch.Hkj[1][3].size();
  }
  CHECK(power / n == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("alignment matrices stack the projected channels") {
  const NetworkConfig c = make_config(12, 2, 3, 3, 9, 4, 2);
  const ChannelSet ch = generate_channels(c, 3);
  RandomStream rng(4);
  const CVector ub = rng.complex_normal(2).normalized();
  std::vector<CMatrix> Uk;
  for (int k = 0; k < 3; ++k) Uk.push_back(linalg::random_orthonormal(rng, 4, 2));
  const AlignmentMatrices am = build_alignment_matrices(ch, ub, Uk);
  CHECK(am.s_d == 6);
  REQUIRE(am.M.rows() == 7);
  REQUIRE(am.M.cols() == 12);
  CHECK((am.M.row(0) - ub.adjoint() * ch.Hba).norm() < 1e-14);
  CHECK((am.M.block(3, 0, 2, 12) - Uk[1].adjoint() * ch.Hka[1]).norm() < 1e-14);
  CHECK((am.Mbar - am.M.bottomRows(6)).norm() == 0.0);
  REQUIRE(am.Mk.size() == 3);
  // Pair 2 (index 1) sees Bob and pairs 1 and 3.
  REQUIRE(am.Mk[1].rows() == 5);
  CHECK((am.Mk[1].row(0) - ub.adjoint() * ch.Hbk[1]).norm() < 1e-14);
  CHECK((am.Mk[1].block(1, 0, 2, 9) - Uk[0].adjoint() * ch.Hkj[0][1]).norm() < 1e-14);
  CHECK((am.Mk[1].block(3, 0, 2, 9) - Uk[2].adjoint() * ch.Hkj[2][1]).norm() < 1e-14);

  CHECK_THROWS_AS(build_alignment_matrices(ch, rng.complex_normal(3), Uk), ShapeError);
  Uk.pop_back();
  CHECK_THROWS_AS(build_alignment_matrices(ch, ub, Uk), ShapeError);
}

TEST_CASE("null space of a rank-deficient matrix") {
  RandomStream rng(8);
  for (int r = 0; r <= 5; ++r) {
    const CMatrix a = r == 0 ? CMatrix::Zero(5, 9) : low_rank(rng, 5, 9, r);
    const CMatrix n = linalg::null_space(a);
    CHECK(linalg::numerical_rank(a) == r);
    REQUIRE(n.cols() == 9 - r);
    CHECK((a * n).norm() < 1e-10 * std::max(1.0, a.norm()));
    CHECK(linalg::orthonormality_error(n) < 1e-12);
    // Columns are phase-normalized.
    for (int j = 0; j < n.cols(); ++j) {
      int i = 0;
      while (std::abs(n(i, j)) < 1e-12) ++i;
      CHECK(std::abs(n(i, j).imag()) < 1e-14);
      CHECK(n(i, j).real() > 0.0);
    }
  }
  CHECK(linalg::null_space(CMatrix(0, 4)).isIdentity());
}

TEST_CASE("least eigenvectors minimize the trace of the projection") {
  RandomStream rng(21);
  const CMatrix g = rng.complex_normal(8, 8);
  const CMatrix h = g * g.adjoint();
  const auto sel = linalg::least_eigenvectors(h, 3);
  REQUIRE(sel.vectors.cols() == 3);
  CHECK_FALSE(sel.degenerate);
  CHECK(linalg::orthonormality_error(sel.vectors) < 1e-12);
  CHECK((h * sel.vectors - sel.vectors * sel.values.asDiagonal()).norm() < 1e-10 * h.norm());
  const double best = (sel.vectors.adjoint() * h * sel.vectors).trace().real();
  CHECK(best == doctest::Approx(sel.values.sum()).epsilon(1e-12));
  // No random 3-frame beats it.
  for (int t = 0; t < 2000; ++t) {
    const CMatrix q = linalg::random_orthonormal(rng, 8, 3);
    CHECK((q.adjoint() * h * q).trace().real() >= best - 1e-9);
  }
}

TEST_CASE("tied eigenvalues at the cut are flagged") {
  const CMatrix h = Eigen::VectorXd::Ones(4).cast<std::complex<double>>().asDiagonal();
  CHECK(linalg::least_eigenvectors(h, 2).degenerate);
  Eigen::VectorXcd d(4);
  d << 1.0, 2.0, 3.0, 3.0;
  CHECK_FALSE(linalg::least_eigenvectors(d.asDiagonal().toDenseMatrix(), 2).degenerate);
  CHECK(linalg::least_eigenvectors(d.asDiagonal().toDenseMatrix(), 3).degenerate);
}

TEST_CASE("top singular pair against power iteration") {
  RandomStream rng(5);
  for (int t = 0; t < 10; ++t) {
    const CMatrix a = rng.complex_normal(2 + t % 3, 12);
    const auto sp = linalg::top_singular_pair(a);
    CHECK(sp.value == doctest::Approx(power_sigma_max(a)).epsilon(1e-10));
    CHECK(sp.left.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sp.right.norm() == doctest::Approx(1.0).epsilon(1e-14));
    const std::complex<double> g = sp.left.adjoint() * a * sp.right;
    CHECK(std::abs(g.imag()) < 1e-12);
    CHECK(g.real() == doctest::Approx(sp.value).epsilon(1e-12));
  }
}

TEST_CASE("random orthonormal frames") {
  RandomStream rng(6);
  const CMatrix q = linalg::random_orthonormal(rng, 9, 4);
  CHECK(q.rows() == 9);
  CHECK(q.cols() == 4);
  CHECK(linalg::orthonormality_error(q) < 1e-13);
  // Isotropy: the average projector is (cols/rows) I.
  CMatrix avg = CMatrix::Zero(5, 5);
  const int n = 4000;
  for (int i = 0; i < n; ++i) {
    const CMatrix u = linalg::random_orthonormal(rng, 5, 2);
    avg += u * u.adjoint();
  }
  avg /= n;
  CHECK((avg - 0.4 * CMatrix::Identity(5, 5)).norm() < 0.05);
}

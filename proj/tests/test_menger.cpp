// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numeric>
#include <variant>

#include <doctest.h>

#include "distgeom/menger.hpp"
#include "support.hpp"

using namespace distgeom;
using distgeom::testing::pairwise_distances;
using distgeom::testing::random_points;
using distgeom::testing::Rng;

namespace {

FiniteSemiMetricSpace space_of(const Eigen::MatrixXd& d) {
  return validate_semi_metric(d);
}

FiniteSemiMetricSpace points_space(const Eigen::MatrixXd& x) {
  return space_of(pairwise_distances(x));
}

FiniteSemiMetricSpace square_space() {
  Eigen::MatrixXd x(4, 2);
  x << 0, 0, 1, 0, 1, 1, 0, 1;
  return points_space(x);
}

FiniteSemiMetricSpace equilateral_tetrahedron() {
  Eigen::MatrixXd d = Eigen::MatrixXd::Ones(4, 4);
  d.diagonal().setZero();
  return space_of(d);
}

FiniteSemiMetricSpace bad_triangle() {
  Eigen::MatrixXd d(3, 3);
  d << 0, 1, 1, 1, 0, 3, 1, 3, 0;
  return space_of(d);
}

Eigen::MatrixXd permuted(const Eigen::MatrixXd& d, const std::vector<std::size_t>& p) {
  // result(p[i], p[j]) = d(i, j)
  Eigen::MatrixXd out(d.rows(), d.cols());
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j)
      out(static_cast<Eigen::Index>(p[static_cast<std::size_t>(i)]),
          static_cast<Eigen::Index>(p[static_cast<std::size_t>(j)])) = d(i, j);
  return out;
}

bool preserves(const FiniteSemiMetricSpace& s, const FiniteSemiMetricSpace& t,
               const std::vector<std::size_t>& map) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (std::abs(s.distances()(i, j) - t.distances()(map[i], map[j])) >
          1e-8 * std::max(1.0, s.distances()(i, j)))
        return false;
  return true;
}

// Brute force over std::next_permutation.
bool brute_congruent(const FiniteSemiMetricSpace& s, const FiniteSemiMetricSpace& t) {
  std::vector<std::size_t> p(s.size());
  std::iota(p.begin(), p.end(), 0u);
  do {
    if (preserves(s, t, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool embeddable(const FiniteSemiMetricSpace& s, std::size_t n) {
  return std::holds_alternative<Embeddable>(congruently_embeddable(s, n));
}

FiniteSemiMetricSpace random_space(Rng& rng, int max_points) {
  const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_points - 1));
  if (rng() % 2 == 0) {
    const int k = 1 + static_cast<int>(rng() % 4);
    return points_space(random_points(rng, n, k));
  }
  std::uniform_real_distribution<double> u(0.3, 1.5);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d(i, j) = d(j, i) = u(rng);
  return space_of(d);
}

}  // namespace

TEST_CASE("validate_semi_metric") {
  Eigen::MatrixXd ok(2, 2);
  ok << 0, 1, 1, 0;
  CHECK(validate_semi_metric(ok).size() == 2);
  CHECK(validate_semi_metric(ok).labels() == std::vector<std::string>{"0", "1"});
  try {
    validate_semi_metric(Eigen::MatrixXd::Zero(2, 2));
    FAIL("zero off-diagonal accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroOffDiagonal);
    CHECK(e.row() == 0u);
    CHECK(e.col() == 1u);
  }
  // The triangle inequality is not part of the semi-metric axioms.
  CHECK(bad_triangle().size() == 3);
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(validate_semi_metric(asym), Error);
  CHECK_THROWS_AS(FiniteSemiMetricSpace(DistanceMatrix::validate(ok), {"a"}), Error);
}

TEST_CASE("find_congruence examples") {
  const auto sq = square_space();
  const auto self = find_congruence(sq, sq);
  REQUIRE(std::holds_alternative<CongruenceWitness>(self));
  CHECK(std::get<CongruenceWitness>(self).mapping == std::vector<std::size_t>{0, 1, 2, 3});

  const std::vector<std::size_t> p{2, 0, 3, 1};
  const auto shuffled = space_of(permuted(sq.distances().values(), p));
  const auto found = find_congruence(sq, shuffled);
  REQUIRE(std::holds_alternative<CongruenceWitness>(found));
  CHECK(preserves(sq, shuffled, std::get<CongruenceWitness>(found).mapping));

  Eigen::MatrixXd rhombus(4, 2);
  rhombus << 0, 0, 1, 0, 1.5, std::sqrt(3.0) / 2, 0.5, std::sqrt(3.0) / 2;
  CHECK(std::holds_alternative<NotCongruent>(find_congruence(sq, points_space(rhombus))));
}

TEST_CASE("find_congruence guards") {
  const auto sq = square_space();
  try {
    find_congruence(sq, bad_triangle());
    FAIL("size mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeMismatch);
  }
  Rng rng(1);
  const auto big = points_space(random_points(rng, 11, 2));
  try {
    find_congruence(big, big);
    FAIL("11 points accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
  const auto ten = points_space(random_points(rng, 10, 2));
  CHECK(std::holds_alternative<CongruenceWitness>(find_congruence(ten, ten)));
}

TEST_CASE("congruence is an equivalence and matches brute force") {
  Rng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    // Small integer distances make accidental congruences common.
    std::uniform_int_distribution<int> u(1, 2);
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) d(i, j) = d(j, i) = u(rng);
    const auto s = space_of(d);

    std::vector<std::size_t> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0u);
    std::shuffle(p.begin(), p.end(), rng);
    const auto t = space_of(permuted(d, p));
    std::shuffle(p.begin(), p.end(), rng);
    const auto w = space_of(permuted(t.distances().values(), p));

    const auto st = find_congruence(s, t);
    const auto ts = find_congruence(t, s);
    const auto tw = find_congruence(t, w);
    REQUIRE(std::holds_alternative<CongruenceWitness>(st));
    REQUIRE(std::holds_alternative<CongruenceWitness>(ts));
    REQUIRE(std::holds_alternative<CongruenceWitness>(tw));
    CHECK(std::holds_alternative<CongruenceWitness>(find_congruence(s, s)));

    // The inverse of a witness is a witness the other way round.
    const auto& fwd = std::get<CongruenceWitness>(st).mapping;
    std::vector<std::size_t> inv(fwd.size());
    for (std::size_t i = 0; i < fwd.size(); ++i) inv[fwd[i]] = i;
    CHECK(preserves(t, s, inv));
    // Composition verifies.
    const auto& second = std::get<CongruenceWitness>(tw).mapping;
    std::vector<std::size_t> composed(fwd.size());
    for (std::size_t i = 0; i < fwd.size(); ++i) composed[i] = second[fwd[i]];
    CHECK(preserves(s, w, composed));

    // Against an unrelated space the verdict matches exhaustive search.
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e(i, j) = e(j, i) = u(rng);
    const auto other = space_of(e);
    CHECK(std::holds_alternative<CongruenceWitness>(find_congruence(s, other)) ==
          brute_congruent(s, other));
  }
}

TEST_CASE("congruently_embeddable examples") {
  const auto tetra = equilateral_tetrahedron();
  CHECK(embeddable(tetra, 3));
  const auto flat = congruently_embeddable(tetra, 2);
  REQUIRE(std::holds_alternative<NotEmbeddable>(flat));
  CHECK(std::get<NotEmbeddable>(flat).failing_subset == Subset{0, 1, 2, 3});

  for (std::size_t n : {1u, 2u, 3u, 5u}) {
    const auto r = congruently_embeddable(bad_triangle(), n);
    REQUIRE(std::holds_alternative<NotEmbeddable>(r));
    CHECK(std::get<NotEmbeddable>(r).failing_subset == Subset{0, 1, 2});
    CHECK(std::get<NotEmbeddable>(r).min_eigenvalue < 0.0);
  }

  Eigen::MatrixXd two(2, 2);
  two << 0, 4.2, 4.2, 0;
  const auto line = congruently_embeddable(space_of(two), 1);
  REQUIRE(std::holds_alternative<Embeddable>(line));
  const auto& x = std::get<Embeddable>(line).realization;
  CHECK(x.dimension() == 1);
  CHECK(std::abs(x.coords()(0, 0) - x.coords()(1, 0)) == doctest::Approx(4.2));
  CHECK_FALSE(embeddable(space_of(two), 0));
}

TEST_CASE("embedding realizations have n columns and reproduce distances") {
  Rng rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto s = points_space(random_points(rng, 6, k));
    const std::size_t n = static_cast<std::size_t>(k) + rng() % 3;
    const auto r = congruently_embeddable(s, n);
    REQUIRE(std::holds_alternative<Embeddable>(r));
    const auto& x = std::get<Embeddable>(r).realization;
    CHECK(x.dimension() == n);
    CHECK((pairwise_distances(x.coords()) - s.distances().values()).cwiseAbs().maxCoeff() <=
          1e-8);
  }
}

TEST_CASE("verify_menger_criterion examples") {
  Rng rng(71);
  const auto planar = points_space(random_points(rng, 5, 2));
  const MengerReport p = verify_menger_criterion(planar, 2);
  CHECK(p.embeddable);
  CHECK(p.evaluated_dimension == 2);
  CHECK(p.independent_subset_found);
  CHECK(p.nonflat_plus2.empty());
  CHECK(p.nonflat_plus3_all.empty());

  const MengerReport t = verify_menger_criterion(equilateral_tetrahedron(), 2);
  CHECK_FALSE(t.embeddable);
  REQUIRE(t.nonflat_plus2.size() == 1);
  CHECK(t.nonflat_plus2.front() == Subset{0, 1, 2, 3});

  Eigen::MatrixXd line(3, 1);
  line << 0, 1, 2.5;
  const MengerReport l = verify_menger_criterion(points_space(line), 1);
  CHECK(l.embeddable);
  CHECK(l.nonflat_plus2.empty());
  REQUIRE(l.base_subset.has_value());
  // every pair has scaled CM 2, so the first one wins the tie
  CHECK(*l.base_subset == Subset{0, 1});

  // Collinear points asked about the plane: evaluated at the affine dimension.
  const MengerReport lp = verify_menger_criterion(points_space(line), 2);
  CHECK(lp.embeddable);
  CHECK(lp.evaluated_dimension == 1);

  const auto big = points_space(random_points(rng, 13, 2));
  try {
    verify_menger_criterion(big, 2);
    FAIL("13 points accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("Menger criterion agrees with the Schoenberg route") {
  Rng rng(73);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_space(rng, 8);
    for (std::size_t n : {1u, 2u, 3u}) {
      const MengerReport report = verify_menger_criterion(s, n);
      CHECK(report.embeddable == embeddable(s, n));
    }
  }
}

TEST_CASE("embeddability is monotone in n and inherited by subsets") {
  Rng rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_space(rng, 7);
    for (std::size_t n = 1; n <= 3; ++n) {
      if (!embeddable(s, n)) continue;
      for (std::size_t m = n + 1; m <= 6; ++m) CHECK(embeddable(s, m));
      for_each_subset(s.size(), 3, [&](const Subset& sub) {
        if (sub.size() <= s.size()) CHECK(embeddable(s.restrict_to(sub), n));
        return true;
      });
    }
  }
}

TEST_CASE("for_each_subset enumerates combinations in lexicographic order") {
  std::vector<Subset> seen;
  for_each_subset(4, 2, [&](const Subset& s) {
    seen.push_back(s);
    return true;
  });
  CHECK(seen == std::vector<Subset>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  int count = 0;
  for_each_subset(3, 4, [&](const Subset&) { return ++count, true; });
  CHECK(count == 0);
  for_each_subset(5, 3, [&](const Subset&) { return ++count < 4; });
  CHECK(count == 4);
}

// SPDX-License-Identifier: Apache-2.0
//
// Finite semi-metric spaces, congruences between them, and embeddability in
// R^n decided two ways: the Gram-matrix (Schoenberg) test on the whole space
// and Menger's finite-subset criterion on Cayley-Menger determinants.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "distgeom/matrices.hpp"

namespace distgeom {

using Subset = std::vector<std::size_t>;

// Points with symmetric distances that vanish only on the diagonal. The
// triangle inequality is not required.
class FiniteSemiMetricSpace {
 public:
  // Labels default to "0", "1", ...
  explicit FiniteSemiMetricSpace(DistanceMatrix d,
                                 std::vector<std::string> labels = {});

  std::size_t size() const { return d_.size(); }
  const DistanceMatrix& distances() const { return d_; }
  const std::vector<std::string>& labels() const { return labels_; }

  FiniteSemiMetricSpace restrict_to(const Subset& indices) const;

 private:
  DistanceMatrix d_;
  std::vector<std::string> labels_;
};

// Validates like validate_distance_matrix and additionally throws
// ZeroOffDiagonal for two distinct points at distance 0.
FiniteSemiMetricSpace validate_semi_metric(const Eigen::MatrixXd& raw,
                                           const Tolerances& tol = {});

struct CongruenceWitness {
  // mapping[i] is the index in T matched with point i of S.
  std::vector<std::size_t> mapping;
};

struct NotCongruent {};

using CongruenceResult = std::variant<CongruenceWitness, NotCongruent>;

inline constexpr std::size_t kMaxCongruenceSize = 10;

// Exhaustive search over bijections (with pruning on partial assignments);
// returns the lexicographically first distance-preserving one.
// Throws SizeMismatch or TooLarge (more than 10 points).
CongruenceResult find_congruence(const FiniteSemiMetricSpace& s,
                                 const FiniteSemiMetricSpace& t,
                                 const Tolerances& tol = {});

struct Embeddable {
  Realization realization;  // n columns; unused trailing columns are zero
};

struct NotEmbeddable {
  // Smallest failing subset (by size, then lexicographically) with at most
  // n+3 points; the whole space if no such subset is detected numerically.
  Subset failing_subset;
  double min_eigenvalue = 0.0;  // of the double-centered matrix of the space
  std::size_t rank = 0;         // EDM rank when the space is Euclidean
};

using EmbeddabilityResult = std::variant<Embeddable, NotEmbeddable>;

// Embeddable iff classify_edm(S) is an EDM of rank <= n.
EmbeddabilityResult congruently_embeddable(const FiniteSemiMetricSpace& s,
                                           std::size_t n,
                                           const Tolerances& tol = {});

inline constexpr std::size_t kMaxMengerSize = 12;

struct MengerReport {
  std::size_t dimension = 0;
  // Largest r <= n for which some (r+1)-subset is independent (EDM of rank
  // exactly r), and the best-conditioned such subset. The conditions below
  // are evaluated at that r.
  std::size_t evaluated_dimension = 0;
  std::optional<Subset> base_subset;
  // (i) holds when base_subset is set.
  bool independent_subset_found = false;
  // (ii) (r+2)-subsets whose scaled Cayley-Menger determinant is nonzero.
  std::vector<Subset> nonflat_plus2;
  // (iii) (r+3)-subsets containing base_subset with nonzero determinant.
  std::vector<Subset> nonflat_plus3_containing_base;
  // (iii') every (r+3)-subset with nonzero determinant; the stronger
  // all-subsets reading of the criterion, reported alongside.
  std::vector<Subset> nonflat_plus3_all;
  bool embeddable = false;
};

// Throws TooLarge beyond 12 points.
MengerReport verify_menger_criterion(const FiniteSemiMetricSpace& s,
                                     std::size_t n, const Tolerances& tol = {});

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order
// until f returns false.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  Subset idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(static_cast<const Subset&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace distgeom

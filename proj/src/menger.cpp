// SPDX-License-Identifier: Apache-2.0
#include "distgeom/menger.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "distgeom/embedding.hpp"
#include "distgeom/simplex.hpp"

namespace distgeom {

namespace {

bool embeds_in(const DistanceMatrix& d, std::size_t n, const Tolerances& tol) {
  const EdmVerdict v = classify_edm(d, tol);
  return v.is_edm && v.rank <= n;
}

bool contains_all(const Subset& outer, const Subset& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

FiniteSemiMetricSpace::FiniteSemiMetricSpace(DistanceMatrix d,
                                             std::vector<std::string> labels)
    : d_(std::move(d)), labels_(std::move(labels)) {
  const std::size_t n = d_.size();
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != n) {
    throw Error(ErrorKind::SizeMismatch, "one label per point is required");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d_(i, j) <= 0.0) {
        std::ostringstream os;
        os << "distinct points at distance zero at (" << i << "," << j << ")";
        throw Error(ErrorKind::ZeroOffDiagonal, os.str(), i, j);
      }
}

FiniteSemiMetricSpace FiniteSemiMetricSpace::restrict_to(
    const Subset& indices) const {
  std::vector<std::string> labels;
  labels.reserve(indices.size());
  for (std::size_t i : indices) labels.push_back(labels_.at(i));
  return FiniteSemiMetricSpace(d_.restrict_to(indices), std::move(labels));
}

FiniteSemiMetricSpace validate_semi_metric(const Eigen::MatrixXd& raw,
                                           const Tolerances& tol) {
  return FiniteSemiMetricSpace(DistanceMatrix::validate(raw, tol));
}

CongruenceResult find_congruence(const FiniteSemiMetricSpace& s,
                                 const FiniteSemiMetricSpace& t,
                                 const Tolerances& tol) {
  const std::size_t n = s.size();
  if (n != t.size())
    throw Error(ErrorKind::SizeMismatch, "spaces have different sizes");
  if (n > kMaxCongruenceSize)
    throw Error(ErrorKind::TooLarge,
                "congruence search is limited to 10 points");

  std::vector<std::size_t> mapping(n);
  std::vector<bool> used(n, false);

  // Depth-first over target choices in increasing order, so the first
  // complete assignment is the lexicographically smallest witness.
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < depth && ok; ++prev)
        ok = nearly_equal(s.distances()(prev, depth),
                          t.distances()(mapping[prev], cand), tol.dist_tol);
      if (!ok) continue;
      mapping[depth] = cand;
      used[cand] = true;
      if (self(self, depth + 1)) return true;
      used[cand] = false;
    }
    return false;
  };

  if (extend(extend, 0)) return CongruenceWitness{mapping};
  return NotCongruent{};
}

EmbeddabilityResult congruently_embeddable(const FiniteSemiMetricSpace& s,
                                           std::size_t n,
                                           const Tolerances& tol) {
  const EdmVerdict whole = classify_edm(s.distances(), tol);
  if (whole.is_edm && whole.rank <= n) {
    const Realization x = realization_from_gram(double_center(s.distances()), tol);
    Eigen::MatrixXd padded =
        Eigen::MatrixXd::Zero(x.coords().rows(), static_cast<Eigen::Index>(n));
    padded.leftCols(x.coords().cols()) = x.coords();
    return Embeddable{Realization(std::move(padded))};
  }

  NotEmbeddable out;
  out.min_eigenvalue = whole.min_eigenvalue;
  out.rank = whole.rank;
  const std::size_t limit = std::min(s.size(), n + 3);
  bool found = false;
  for (std::size_t k = 2; k <= limit && !found; ++k) {
    for_each_subset(s.size(), k, [&](const Subset& sub) {
      if (!embeds_in(s.distances().restrict_to(sub), n, tol)) {
        out.failing_subset = sub;
        found = true;
      }
      return !found;
    });
  }
  if (!found) {
    out.failing_subset.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out.failing_subset[i] = i;
  }
  return out;
}

MengerReport verify_menger_criterion(const FiniteSemiMetricSpace& s,
                                     std::size_t n, const Tolerances& tol) {
  const std::size_t size = s.size();
  if (size > kMaxMengerSize)
    throw Error(ErrorKind::TooLarge,
                "Menger criterion enumeration is limited to 12 points");

  MengerReport report;
  report.dimension = n;
  if (size == 0) {
    report.embeddable = true;
    return report;
  }

  auto flat = [&](const Subset& sub) {
    return is_flat(SimplexSides(s.distances().restrict_to(sub)), tol);
  };

  // (i) an independent (r+1)-subset, r as large as possible up to n. Among
  // candidates keep the one with the largest scaled simplex volume.
  const std::size_t top = std::min(n, size - 1);
  for (std::size_t r = top + 1; r-- > 0 && !report.base_subset;) {
    if (r == 0) {
      report.base_subset = Subset{0};
      report.evaluated_dimension = 0;
      break;
    }
    double best = -1.0;
    for_each_subset(size, r + 1, [&](const Subset& sub) {
      const DistanceMatrix d = s.distances().restrict_to(sub);
      const EdmVerdict v = classify_edm(d, tol);
      if (v.is_edm && v.rank == r) {
        const double volume = std::abs(scaled_cayley_menger(SimplexSides(d)));
        if (volume > best) {
          best = volume;
          report.base_subset = sub;
        }
      }
      return true;
    });
    report.evaluated_dimension = r;
  }
  report.independent_subset_found = report.base_subset.has_value();
  const std::size_t r = report.evaluated_dimension;

  // (ii) every (r+2)-subset is flat.
  for_each_subset(size, r + 2, [&](const Subset& sub) {
    if (!flat(sub)) report.nonflat_plus2.push_back(sub);
    return true;
  });

  // (iii) every (r+3)-subset, and those containing the base subset.
  for_each_subset(size, r + 3, [&](const Subset& sub) {
    if (!flat(sub)) {
      report.nonflat_plus3_all.push_back(sub);
      if (report.base_subset && contains_all(sub, *report.base_subset))
        report.nonflat_plus3_containing_base.push_back(sub);
    }
    return true;
  });

  report.embeddable = report.independent_subset_found &&
                      report.nonflat_plus2.empty() &&
                      report.nonflat_plus3_containing_base.empty();
  return report;
}

}  // namespace distgeom

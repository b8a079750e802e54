// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace distgeom {

// Signs in {-1, 0, +1}, read cyclically.
class CyclicSignSequence {
 public:
  // Throws InvalidArgument on any entry outside {-1, 0, +1}.
  explicit CyclicSignSequence(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }

 private:
  std::vector<int> entries_;
};

struct PolyhedralCounts {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t faces = 0;
};

// Sign changes between cyclically adjacent nonzero entries, counting the
// wrap-around from last to first. Zeros are skipped.
std::size_t cyclic_sign_changes(const CyclicSignSequence& s);

// V - E + F, computed without unsigned wrap-around.
std::int64_t euler_characteristic(const PolyhedralCounts& c);

bool euler_characteristic_holds(const PolyhedralCounts& c);

}  // namespace distgeom

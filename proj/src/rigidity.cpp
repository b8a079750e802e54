// SPDX-License-Identifier: Apache-2.0
#include "distgeom/rigidity.hpp"

#include "distgeom/errors.hpp"

namespace distgeom {

CyclicSignSequence::CyclicSignSequence(std::vector<int> entries)
    : entries_(std::move(entries)) {
  for (int v : entries_)
    if (v < -1 || v > 1)
      throw Error(ErrorKind::InvalidArgument, "signs must be -1, 0 or +1");
}

std::size_t cyclic_sign_changes(const CyclicSignSequence& s) {
  std::vector<int> nonzero;
  for (int v : s.entries())
    if (v != 0) nonzero.push_back(v);
  if (nonzero.size() < 2) return 0;
  std::size_t changes = 0;
  for (std::size_t i = 0; i < nonzero.size(); ++i)
    if (nonzero[i] != nonzero[(i + 1) % nonzero.size()]) ++changes;
  return changes;
}

std::int64_t euler_characteristic(const PolyhedralCounts& c) {
  return static_cast<std::int64_t>(c.vertices) -
         static_cast<std::int64_t>(c.edges) + static_cast<std::int64_t>(c.faces);
}

bool euler_characteristic_holds(const PolyhedralCounts& c) {
  return euler_characteristic(c) == 2;
}

}  // namespace distgeom

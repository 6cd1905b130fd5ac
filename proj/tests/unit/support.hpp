#pragma once

#include <vector>

#include "crystbraid/block_spec.hpp"

namespace testsupport {

// Every block spec (odd blocks >= 3, non-decreasing) with total at most n.
inline std::vector<cryst::BlockSpec> all_specs(int n) {
  std::vector<cryst::BlockSpec> out;
  std::vector<int> blocks;
  auto rec = [&](auto&& self, int min_part, int left) -> void {
    if (!blocks.empty()) out.emplace_back(n, blocks);
    for (int part = min_part; part <= left; part += 2) {
      blocks.push_back(part);
      self(self, part, left - part);
      blocks.pop_back();
    }
  };
  rec(rec, 3, n);
  return out;
}

}  // namespace testsupport

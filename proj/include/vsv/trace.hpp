// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "vsv/rules.hpp"

namespace vsv {

// A lasso: `prefix` followed by `loop` repeated forever. An empty loop marks
// a finite witness.
struct Trace {
  std::vector<Assignment> prefix;
  std::vector<Assignment> loop;

  std::size_t loop_start() const { return prefix.size(); }
  std::size_t size() const { return prefix.size() + loop.size(); }

  std::vector<Assignment> states() const {
    std::vector<Assignment> all = prefix;
    all.insert(all.end(), loop.begin(), loop.end());
    return all;
  }

  friend bool operator==(const Trace&, const Trace&) = default;
};

// NuSMV-style listing: the first state in full, later states only with the
// variables that changed. `order` fixes the variable order.
inline std::string render_trace(const Trace& t, const std::vector<std::string>& order) {
  std::string out;
  const auto all = t.states();
  const Assignment* prev = nullptr;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i == t.loop_start() && !t.loop.empty()) out += "-- Loop starts here\n";
    out += "-> State: 1." + std::to_string(i + 1) + " <-\n";
    for (const auto& name : order) {
      auto it = all[i].find(name);
      if (it == all[i].end()) continue;
      if (prev != nullptr) {
        auto p = prev->find(name);
        if (p != prev->end() && p->second == it->second) continue;
      }
      out += "  " + name + " = " + it->second + "\n";
    }
    prev = &all[i];
  }
  return out;
}

}  // namespace vsv

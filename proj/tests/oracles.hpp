#pragma once

// Independent reference computations for tests: deliberately naive, sharing
// no optimization machinery with the library implementations they check.

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "dsgrp/group_ops.hpp"
#include "dsgrp/perm_group.hpp"
#include "dsgrp/subgroups.hpp"

namespace oracles {

// Element-index set generated by the listed element indices: plain BFS over
// right multiplication, returned ascending.
inline std::vector<std::uint32_t> close_index_set(
    const dsgrp::ElementTable& table, const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint32_t> out{0};
  std::vector<bool> seen(table.size(), false);
  seen[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::uint32_t gi : gens) {
      std::uint32_t next =
          table.at(dsgrp::compose(table.elems[out[head]], table.elems[gi]));
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every subgroup of g as a set of element-index sets. Seeds every pair (and
// every triple for small groups), then fixpoints one-element extensions over
// all outside elements — no conjugacy shortcuts, no coset shortcuts.
inline std::set<std::vector<std::uint32_t>> naive_subgroup_sets(
    const dsgrp::PermGroup& g, bool with_triples) {
  const dsgrp::ElementTable& table = g.elements();
  const auto n = static_cast<std::uint32_t>(table.size());
  std::set<std::vector<std::uint32_t>> found;
  std::deque<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>>
      work;  // (element set, generating indices)
  auto add = [&](std::vector<std::uint32_t> gens) {
    auto s = close_index_set(table, gens);
    if (found.insert(s).second) work.emplace_back(std::move(s), std::move(gens));
  };
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      add({i, j});
      if (with_triples) {
        for (std::uint32_t k = j; k < n; ++k) add({i, j, k});
      }
    }
  }
  while (!work.empty()) {
    auto [elems, gens] = work.front();
    work.pop_front();
    std::vector<bool> inside(n, false);
    for (std::uint32_t e : elems) inside[e] = true;
    for (std::uint32_t e = 0; e < n; ++e) {
      if (inside[e]) continue;
      auto ext = gens;
      ext.push_back(e);
      add(std::move(ext));
    }
  }
  return found;
}

// Conjugacy partition of a family of subgroup element sets, by brute force:
// conjugate every set by every group element. Returns class count.
inline std::size_t brute_subgroup_class_count(
    const dsgrp::PermGroup& g,
    const std::set<std::vector<std::uint32_t>>& sets) {
  const dsgrp::ElementTable& table = g.elements();
  std::set<std::vector<std::uint32_t>> unseen = sets;
  std::size_t classes = 0;
  while (!unseen.empty()) {
    std::vector<std::uint32_t> rep = *unseen.begin();
    ++classes;
    for (std::size_t e = 0; e < table.size(); ++e) {
      std::vector<std::uint32_t> image(rep.size());
      for (std::size_t i = 0; i < rep.size(); ++i) {
        image[i] =
            table.at(table.elems[rep[i]].conjugated_by(table.elems[e]));
      }
      std::sort(image.begin(), image.end());
      unseen.erase(image);
    }
  }
  return classes;
}

}  // namespace oracles

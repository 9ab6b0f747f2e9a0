#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dsgrp/group_ops.hpp"
#include "dsgrp/perm_group.hpp"

namespace dsgrp {

// Cheap isomorphism invariants, totally ordered so they can key maps and
// sort class representatives. Equal fingerprints are decisive for abelian
// groups; otherwise they are a necessary filter before the search.
struct IsoFingerprint {
  std::uint64_t order = 1;
  bool abelian = true;
  std::uint64_t center_order = 1;
  std::vector<std::uint64_t> derived_orders;  // orders along the derived series
  std::vector<std::pair<std::uint64_t, std::uint64_t>>
      element_orders;  // (element order, count), ascending
  std::vector<std::uint64_t> abelian_inv;  // elementary divisors; empty unless abelian
  auto operator<=>(const IsoFingerprint&) const = default;
};

IsoFingerprint iso_fingerprint(const PermGroup& g, const Limits& limits = {});

// Abstract-group isomorphism. Equal abelian invariants decide the abelian
// case; nonabelian pairs run a generator-mapping search with element-order
// and conjugacy-class-size pruning, so the answer is exact either way.
bool is_isomorphic(const PermGroup& a, const PermGroup& b,
                   const Limits& limits = {});

// Partition of a family into isomorphism classes, numbered by first
// appearance. rep[c] is the index of the first member of class c.
struct IsoClasses {
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> rep;
  std::size_t count() const { return rep.size(); }
};
IsoClasses classify_groups(const std::vector<PermGroup>& groups,
                           const Limits& limits = {});

// No proper nontrivial normal subgroup (checked via normal closures of
// conjugacy class representatives). The trivial group is not simple.
bool is_simple(const PermGroup& g, const Limits& limits = {});

// Short structural name for reports: "1", abelian invariant-factor names
// like "C2xC12", dihedral/quaternion/alternating/symmetric recognizers for
// small cases, names of the simple groups in the supported range, and an
// honest "order N (derived order M)" fallback otherwise.
std::string describe_group(const PermGroup& g, const Limits& limits = {});

}  // namespace dsgrp

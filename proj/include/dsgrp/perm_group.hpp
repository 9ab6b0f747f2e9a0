#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dsgrp/perm.hpp"

namespace dsgrp {

// Stabilizer chain built by deterministic Schreier-Sims with
// smallest-moved-point base selection. The result depends only on the
// generator list (and extension order), never on scheduling.
class StabChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;           // generators first moving this base
    std::vector<Point> orbit;         // discovery order; orbit[0] == base
    std::vector<std::int32_t> where;  // point -> index into transversal, -1 outside
    std::vector<Perm> transversal;    // transversal[where[x]] maps base -> x
  };

  StabChain(unsigned degree, const std::vector<Perm>& generators);

  unsigned degree() const { return degree_; }
  std::uint64_t order() const;
  bool contains(const Perm& p) const;

  // Adds one generator; no-op (returns false) when already a member.
  bool extend(const Perm& g);

  // Sifts p through levels [from, end); returns residue and the level where
  // sifting stopped (== levels().size() when it ran through completely).
  std::pair<Perm, std::size_t> sift(const Perm& p, std::size_t from = 0) const;

  const std::vector<Level>& levels() const { return levels_; }
  std::vector<Point> base() const;

 private:
  void insert_generator(const Perm& g, std::size_t level);
  void complete(std::size_t level);
  void recompute_orbit(std::size_t level);
  std::vector<const Perm*> level_gens(std::size_t level) const;

  unsigned degree_;
  std::vector<Level> levels_;
};

// All elements of a group, sorted lexicographically by image array, with a
// hash index and cached element orders.
struct ElementTable {
  std::vector<Perm> elems;
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  std::vector<std::uint32_t> order_of;

  std::uint32_t at(const Perm& p) const;
  std::optional<std::uint32_t> find(const Perm& p) const;
  std::size_t size() const { return elems.size(); }
};

// Handle to a finite permutation group: degree, generators, optional label,
// a lazily built stabilizer chain and a lazily built element table (both
// cached and shared between copies).
class PermGroup {
 public:
  PermGroup(unsigned degree, std::vector<Perm> generators,
            std::string label = "");

  unsigned degree() const;
  const std::vector<Perm>& generators() const;
  const std::string& label() const;
  void set_label(std::string label);

  const StabChain& chain() const;
  std::uint64_t order() const;
  bool contains(const Perm& p) const;
  bool is_trivial() const { return order() == 1; }

  // Enumerates all elements; throws TooLargeError above the threshold.
  const ElementTable& elements(const Limits& limits = {}) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// Set equality of subgroups of a common symmetric group, decided by orders
// plus generator membership (no enumeration).
bool same_subgroup(const PermGroup& a, const PermGroup& b);

// a <= b as subgroups of a common symmetric group
bool subgroup_of(const PermGroup& a, const PermGroup& b);

}  // namespace dsgrp

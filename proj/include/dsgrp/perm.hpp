#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dsgrp/common.hpp"

namespace dsgrp {

// Immutable permutation of {0, ..., degree-1}, stored as the image array.
// Composition is left-to-right: compose(a, b) applies a first, then b.
class Perm {
 public:
  Perm() = default;  // degree-0 placeholder; not a usable permutation

  explicit Perm(std::vector<Point> images);
  static Perm identity(unsigned degree);

  // Parses cycle notation like "(0,1,2)(3,4)"; "" is the identity.
  // Cycles must be disjoint, whitespace-free, with every point < degree.
  // Throws ParseError with the byte position of the offending character.
  static Perm parse_cycles(std::string_view text, unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  // g^-1 * (*this) * g
  Perm conjugated_by(const Perm& g) const;

  // order of the element: lcm of its cycle lengths
  std::uint64_t order() const;

  // Disjoint-cycle string; fixed points omitted; each cycle starts at its
  // smallest point; cycles sorted by first point. Identity prints as "".
  std::string cycles() const;

  std::uint64_t hash() const { return fnv1a64(images_.data(), images_.size() * sizeof(Point)); }

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

// a then b
Perm compose(const Perm& a, const Perm& b);

// p composed with itself e times (e == 0 gives the identity).
Perm perm_pow(const Perm& p, std::uint64_t e);

struct PermHash {
  std::size_t operator()(const Perm& p) const { return static_cast<std::size_t>(p.hash()); }
};

}  // namespace dsgrp

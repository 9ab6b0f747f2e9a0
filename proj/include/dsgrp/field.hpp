#pragma once

#include <cstdint>
#include <vector>

namespace dsgrp {

// Arithmetic tables for one finite field GF(q). Elements are indices in
// [0, q): index 0 is zero, index 1 is one, and the base-p digits of an index
// (least significant first) are the coefficients of ascending powers of the
// generator. Listing elements by index therefore lists them lexicographically
// by coefficient tuple written in conventional descending-power order.
struct FieldTable {
  unsigned q = 0;  // p^k
  unsigned p = 0;  // characteristic
  unsigned k = 0;  // extension degree
  std::vector<unsigned> modulus;  // c0..c_{k-1} of the reducing polynomial
  std::vector<std::vector<unsigned>> add;
  std::vector<std::vector<unsigned>> mul;
  std::vector<unsigned> neg;
  std::vector<unsigned> inv;       // inv[0] = 0 placeholder, never valid
  unsigned primitive = 0;          // smallest generator of GF(q)*

  unsigned sub(unsigned a, unsigned b) const { return add[a][neg[b]]; }
  unsigned div(unsigned a, unsigned b) const { return mul[a][inv[b]]; }
  unsigned pow(unsigned a, std::uint64_t e) const;

  // Cached table for a supported q; throws std::invalid_argument for other
  // q, naming the supported values.
  static const FieldTable& get(unsigned q);
  static const std::vector<unsigned>& supported();
};

}  // namespace dsgrp

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dsgrp {

inline constexpr const char* kEngineVersion = "dsgrp-0.1.0";

// Points a permutation acts on. Degrees stay small (natural actions of the
// supported groups), but dihedral groups of order 2^10 need 512 points.
using Point = std::uint16_t;
inline constexpr unsigned kMaxDegree = 4096;

struct Limits {
  // element enumeration refuses groups larger than this
  std::uint64_t elements_threshold = 200000;
  // full subgroup-lattice enumeration refuses groups larger than this
  std::uint64_t lattice_threshold = 30000;
  // lattices above this bound require an explicit slow-tier opt-in
  std::uint64_t fast_lattice_bound = 2448;
};

// malformed textual input (cycle notation, group expressions, data files)
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

// a computation refused because a size threshold would be exceeded
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t seed = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b,
                          const char* context);

}  // namespace dsgrp

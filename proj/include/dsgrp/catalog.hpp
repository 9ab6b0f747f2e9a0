#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dsgrp/perm_group.hpp"

namespace dsgrp {

// A parsed group expression. The grammar (whitespace-free):
//   C<n>            cyclic of order n
//   D<n>            dihedral of order n (n even)
//   S<n> / A<n>     symmetric / alternating on n letters (n <= 20)
//   PSL2_<q>        projective special linear group on the line over GF(q)
//   prod(a,b)       direct product of two expressions
//   frob(p,k)       metacyclic group C_p x| C_k with k | p-1, k > 1
//   NAME@PATH       group loaded from a data file (NAME is a display alias)
// parse and to_string round-trip losslessly.
struct GroupSpec {
  enum class Family {
    cyclic,
    dihedral,
    symmetric,
    alternating,
    psl2,
    direct_product,
    metacyclic_frobenius,
    from_file,
  };

  Family family = Family::cyclic;
  std::uint64_t a = 0;  // first numeric parameter
  std::uint64_t b = 0;  // second numeric parameter (frob only)
  std::string label;    // from_file alias
  std::string path;     // from_file path
  std::vector<GroupSpec> parts;  // direct_product factors (exactly two)

  static GroupSpec parse(std::string_view text);
  std::string to_string() const;
};

// Family constructors. Every constructor self-checks the stabilizer-chain
// order against the family's closed-form order and labels the group with its
// canonical expression.
PermGroup cyclic(std::uint64_t n);
PermGroup dihedral(std::uint64_t order);
PermGroup symmetric(std::uint64_t n);
PermGroup alternating(std::uint64_t n);
PermGroup psl2(unsigned q);
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
PermGroup metacyclic_frobenius(std::uint64_t p, std::uint64_t k);

// Reads the group data format: `name <string>` / `degree <n>` / `order <N>`
// followed by `gen <cycles>` lines. Structural problems raise ParseError
// carrying the 1-based line number; a declared order that the generators do
// not reproduce raises a "corrupt data" error.
PermGroup load_group(const std::string& path);

PermGroup make_group(const GroupSpec& spec);
PermGroup make_group(std::string_view expr);

// One line per grammar form, for the CLI catalog listing.
std::vector<std::string> catalog_lines();

}  // namespace dsgrp

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dsgrp/group_ops.hpp"
#include "dsgrp/parallel.hpp"
#include "dsgrp/perm_group.hpp"

namespace dsgrp {

// One subgroup of a fixed parent group, stored against the parent's element
// table. Fingerprints are equal exactly when the element sets are equal
// (hash collisions are resolved by exact comparison during construction).
struct SubgroupRecord {
  std::vector<std::uint32_t> elems;  // ascending indices into the parent table
  std::vector<Perm> gens;
  std::uint64_t order = 0;
  std::uint64_t fingerprint = 0;
  std::uint32_t class_id = 0;  // conjugacy class under the parent
};

// Every subgroup of a parent group, sorted by (order, fingerprint, element
// list), with conjugacy classes numbered by first appearance in that order.
struct Lattice {
  std::vector<SubgroupRecord> subs;
  std::vector<std::uint32_t> class_rep;   // class id -> index into subs
  std::vector<std::uint32_t> class_size;  // class id -> number of conjugates
  std::size_t class_count() const { return class_rep.size(); }
};

// Enumerates all subgroups: cyclic seeds, then a fixpoint of one-element
// extensions <H, g>. Extensions run only from conjugacy-class representatives
// over coset representatives (sound because <H, g> = <H, hg> and conjugation
// maps extensions of H to extensions of H^c); every new subgroup is expanded
// to its full conjugacy class. Extension batches are parallelizable; results
// do not depend on the execution mode or thread count.
Lattice all_subgroups(const PermGroup& g, const Limits& limits = {},
                      par::ExecMode mode = par::ExecMode::parallel);

// The subgroup as a group in its own right (same degree as the parent).
PermGroup subgroup_group(const PermGroup& parent, const SubgroupRecord& rec);

// Element-index set generated by the listed permutations, resolved against a
// parent element table; ascending indices.
std::vector<std::uint32_t> closure_indices(const ElementTable& table,
                                           const std::vector<Perm>& gens);

// For a prime p with no normal p-complement: a subgroup H = <x, P> with
// P Sylow and x normalizing but not centralizing P, whose derived subgroup
// is a nontrivial p-group.
struct PiWitness {
  std::uint64_t prime;
  Perm x;
  PermGroup sylow;
  PermGroup subgroup;
  PermGroup derived;
};
struct PiWitnessReport {
  std::vector<PiWitness> witnesses;
  std::vector<std::uint64_t> p_nilpotent;  // primes with no witness needed
};
PiWitnessReport pi_witnesses(const PermGroup& g, const Limits& limits = {},
                             par::ExecMode mode = par::ExecMode::parallel);

// A dihedral subgroup of order 2z: a rotation of order z plus an involution
// inverting it, found by targeted scan (no lattice).
struct DihedralWitness {
  Perm rotation;
  Perm reflection;
  PermGroup subgroup;
};
std::optional<DihedralWitness> dihedral_witness(const PermGroup& g,
                                                std::uint64_t z,
                                                const Limits& limits = {});

// The 2-local witness chain of the order-29120 group on 65 points:
// F Sylow-2 (order 64), ZF = Z(F) (order 8), T the normalizer of F
// (order 448), H a cyclic order-7 complement in T, S = <ZF, H>.
// Construction fails loudly if any of the structural facts is violated.
struct SuzukiWitnesses {
  PermGroup f, zf, t, h, s;
  PermGroup s_derived, t_derived;
};
SuzukiWitnesses suzuki_witnesses(const PermGroup& g, const Limits& limits = {},
                                 par::ExecMode mode = par::ExecMode::parallel);

// Malnormality: H^g meets H trivially for every g outside H — the complement
// condition of a Frobenius group. Requires 1 < |H| < |G| and H <= G.
bool frobenius_complement_check(const PermGroup& g, const PermGroup& h,
                                const Limits& limits = {},
                                par::ExecMode mode = par::ExecMode::parallel);

}  // namespace dsgrp

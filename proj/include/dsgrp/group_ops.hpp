#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dsgrp/parallel.hpp"
#include "dsgrp/perm_group.hpp"

namespace dsgrp {

// a^-1 b^-1 a b in left-to-right composition
Perm commutator(const Perm& a, const Perm& b);

// Greedy reduction of a spanning list to a short generating list (each kept
// element at least doubles the generated order, so at most log2(order) are
// kept). Order-sensitive but deterministic for a fixed input list.
std::vector<Perm> reduce_generators(unsigned degree,
                                    const std::vector<Perm>& span);

// Smallest subgroup of g containing seed and closed under conjugation by g.
PermGroup normal_closure(const PermGroup& g, std::vector<Perm> seed);

// Subgroup generated by all commutators of g.
PermGroup derived_subgroup(const PermGroup& g);

// [g, g', g'', ...] until the order stops changing. The last entry is either
// trivial (solvable case) or a nontrivial perfect group.
std::vector<PermGroup> derived_series(const PermGroup& g);

bool is_abelian(const PermGroup& g);
bool is_perfect(const PermGroup& g);

// Element scans over the full element table of g. The *_indices forms return
// positions into g.elements(); the PermGroup forms wrap them with a reduced
// generating set. All scans run through par::filter_indices, so serial and
// parallel modes agree exactly.
std::vector<std::uint32_t> centralizer_indices(
    const PermGroup& g, const PermGroup& h, const Limits& limits = {},
    par::ExecMode mode = par::ExecMode::parallel);
std::vector<std::uint32_t> normalizer_indices(
    const PermGroup& g, const PermGroup& h, const Limits& limits = {},
    par::ExecMode mode = par::ExecMode::parallel);

PermGroup centralizer(const PermGroup& g, const Perm& x,
                      const Limits& limits = {},
                      par::ExecMode mode = par::ExecMode::parallel);
PermGroup centralizer(const PermGroup& g, const PermGroup& h,
                      const Limits& limits = {},
                      par::ExecMode mode = par::ExecMode::parallel);
PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                     const Limits& limits = {},
                     par::ExecMode mode = par::ExecMode::parallel);
PermGroup center(const PermGroup& g, const Limits& limits = {},
                 par::ExecMode mode = par::ExecMode::parallel);

// Conjugacy classes over the element table of g. Classes are numbered by
// their smallest element index, so the layout is canonical for a group.
struct ConjClasses {
  std::vector<std::uint32_t> class_of;  // element index -> class id
  std::vector<std::uint32_t> rep;       // class id -> smallest element index
  std::vector<std::uint32_t> size;      // class id -> class size
  std::size_t count() const { return rep.size(); }
};
ConjClasses conjugacy_classes(const PermGroup& g, const Limits& limits = {});

// Prime factorization of n as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> prime_spectrum(
    std::uint64_t n);

// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// A Sylow p-subgroup, grown by normalizer ascent from a cyclic seed of
// maximal p-power order. Requires p prime; returns the trivial group when
// p does not divide |g|. Deterministic for a fixed element table.
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p,
                         const Limits& limits = {},
                         par::ExecMode mode = par::ExecMode::parallel);

// True when g has a normal p-complement, decided by whether the set of
// elements of order coprime to p is multiplicatively closed (checked as
// |<S>| == |S| on an incrementally grown stabilizer chain).
bool is_p_nilpotent(const PermGroup& g, std::uint64_t p,
                    const Limits& limits = {});

// Elementary divisors of an abelian group: prime powers, ascending, whose
// direct product is isomorphic to g (empty for the trivial group). Derived
// from element-order counts. Throws std::invalid_argument on nonabelian g.
std::vector<std::uint64_t> abelian_invariants(const PermGroup& g,
                                              const Limits& limits = {});

}  // namespace dsgrp

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsgrp/iso.hpp"
#include "dsgrp/subgroups.hpp"

namespace dsgrp {

// Isomorphism classes among the derived subgroups of all subgroups, computed
// from conjugacy-class representatives (conjugation covariance makes the
// restriction exact). rep_labels has one structural name per class, ordered
// by the class invariants (ascending subgroup order first).
struct DerivedClasses {
  std::uint64_t d = 0;
  std::vector<std::string> rep_labels;
};
DerivedClasses d_invariant(const PermGroup& g, const Lattice& lat,
                           const Limits& limits = {});

// Number of distinct element sets among the derived subgroups of all
// subgroups (set-level distinctness, finer than isomorphism).
std::uint64_t gr_invariant(const PermGroup& g, const Lattice& lat,
                           const Limits& limits = {});

enum class BoundVerdict { equals_pi_plus_2, exceeds, below, not_applicable };

// d versus |pi(G)| + 2. Small groups are settled exhaustively; larger ones
// by a witness family (derived subgroups realized by targeted subgroups)
// that certifies a lower bound — exceeds is only reported when the certified
// count strictly passes the bound.
struct BoundCheck {
  BoundVerdict verdict = BoundVerdict::not_applicable;
  std::uint64_t pi_count = 0;
  std::uint64_t d_value = 0;  // exact when exhaustive, else certified lower bound
  bool exhaustive = false;
  std::string detail;
};
BoundCheck bound_check(const PermGroup& g, const Limits& limits = {},
                       par::ExecMode mode = par::ExecMode::parallel,
                       bool allow_slow_exhaustive = false);

const char* to_string(BoundVerdict v);

// d(AxB) against d(A)*d(B). Exact equality is expected for coprime orders;
// other cases are reported, not judged. diagonal_perfect is set when A and B
// are abstractly isomorphic (the diagonal subgroup of AxB, checked perfect).
struct ProductProbe {
  std::uint64_t d_a = 0;
  std::uint64_t d_b = 0;
  std::uint64_t d_product = 0;
  bool coprime = false;
  bool multiplicative = false;  // d_product == d_a * d_b
  std::optional<bool> diagonal_perfect;
};
ProductProbe product_probe(const PermGroup& a, const PermGroup& b,
                           const Limits& limits = {});

// The diagonal subgroup {(x, x)} of A x A, acting on 2 * degree(A) points.
PermGroup diagonal_double(const PermGroup& a);

// For a Frobenius-shaped G = K x| H (K normal, H malnormal, |K||H| = |G|):
// whether the derived subgroup of G equals <K, derived(H)> as element sets.
// Precondition violations throw std::invalid_argument.
bool frobenius_derived_check(const PermGroup& g, const PermGroup& kernel,
                             const PermGroup& complement,
                             const Limits& limits = {});

// Equal-order probe: over a curated list of groups of the given order,
// report non-isomorphic pairs with matching (d, gr). Orders without a
// curated list (no simple group of that order) give an empty probe.
struct ProbePair {
  std::string left;
  std::string right;
  std::uint64_t d = 0;
  std::uint64_t gr = 0;
  bool involves_simple = false;
};
struct ConjectureProbe {
  std::vector<std::string> candidates;
  std::vector<ProbePair> matches;
};
ConjectureProbe conjecture_probe(std::uint64_t order, const Limits& limits = {});

// Everything the CLI prints for one group. Optional fields are absent when
// not requested or not computable at the active tier.
struct InvariantReport {
  std::string label;
  std::uint64_t order = 0;
  std::vector<std::uint64_t> pi;
  std::optional<std::uint64_t> d_value;
  std::vector<std::string> d_class_reps;
  std::optional<std::uint64_t> gr_value;
  std::optional<BoundCheck> bound;
  std::map<std::uint64_t, std::string> witnesses;  // prime -> summary
  std::string tier;                                // "fast" | "slow"
};

struct ReportOptions {
  bool want_d = true;
  bool want_gr = true;
  bool want_pi = true;
  bool want_bound = true;
  bool want_witnesses = false;
  bool allow_slow = false;  // permit lattices past the fast bound
};

// Assembles a report, enforcing the lattice tier: d/gr need a full lattice,
// which requires order <= fast_lattice_bound (or allow_slow and order <=
// lattice_threshold); violations throw TooLargeError naming the threshold.
InvariantReport make_report(const PermGroup& g, const ReportOptions& opt,
                            const Limits& limits = {},
                            par::ExecMode mode = par::ExecMode::parallel);

}  // namespace dsgrp

#include "dsgrp/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "dsgrp/catalog.hpp"

namespace dsgrp {
namespace {

std::vector<PermGroup> class_rep_derived(const PermGroup& g,
                                         const Lattice& lat) {
  std::vector<PermGroup> out;
  out.reserve(lat.class_count());
  for (std::size_t cid = 0; cid < lat.class_count(); ++cid) {
    out.push_back(derived_subgroup(subgroup_group(g, lat.subs[lat.class_rep[cid]])));
  }
  return out;
}

}  // namespace

DerivedClasses d_invariant(const PermGroup& g, const Lattice& lat,
                           const Limits& limits) {
  std::vector<PermGroup> deriveds = class_rep_derived(g, lat);
  // Canonical input order so class representatives are the smallest members.
  std::vector<std::size_t> idx(deriveds.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<IsoFingerprint> fps;
  fps.reserve(deriveds.size());
  for (const PermGroup& d : deriveds) fps.push_back(iso_fingerprint(d, limits));
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return fps[a] < fps[b];
  });
  std::vector<PermGroup> ordered;
  ordered.reserve(deriveds.size());
  for (std::size_t i : idx) ordered.push_back(deriveds[i]);
  IsoClasses classes = classify_groups(ordered, limits);
  DerivedClasses out;
  out.d = classes.count();
  for (std::size_t c = 0; c < classes.count(); ++c) {
    out.rep_labels.push_back(describe_group(ordered[classes.rep[c]], limits));
  }
  return out;
}

std::uint64_t gr_invariant(const PermGroup& g, const Lattice& lat,
                           const Limits& limits) {
  const ElementTable& table = g.elements(limits);
  std::set<std::vector<std::uint32_t>> derived_sets;
  for (const SubgroupRecord& rec : lat.subs) {
    PermGroup d = derived_subgroup(subgroup_group(g, rec));
    derived_sets.insert(closure_indices(table, d.generators()));
  }
  return derived_sets.size();
}

const char* to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::equals_pi_plus_2:
      return "equals_pi_plus_2";
    case BoundVerdict::exceeds:
      return "exceeds";
    case BoundVerdict::below:
      return "below";
    case BoundVerdict::not_applicable:
      return "not_applicable";
  }
  return "not_applicable";
}

namespace {

// Derived subgroups realized by targeted subgroups, for lower-bounding d on
// groups too large to enumerate: the trivial group (derived of any cyclic
// subgroup), the pi-witness derived subgroups, the whole group when perfect,
// derived subgroups of dihedral witnesses for every available rotation
// order, the 2-local chain of the order-29120 group, and derived subgroups
// of two-generator subgroups over conjugacy class representatives.
std::vector<PermGroup> witness_derived_family(const PermGroup& g,
                                              const Limits& limits,
                                              par::ExecMode mode) {
  std::vector<PermGroup> family;
  auto add = [&](const PermGroup& cand) {
    if (cand.order() == g.order()) {
      // Any full-order subgroup IS the group; share its representation.
      for (const PermGroup& have : family) {
        if (have.order() == g.order()) return;
      }
      family.push_back(g);
      return;
    }
    for (const PermGroup& have : family) {
      if (have.order() == cand.order() && same_subgroup(have, cand)) return;
    }
    family.push_back(cand);
  };

  add(PermGroup(g.degree(), std::vector<Perm>{}));
  PiWitnessReport pw = pi_witnesses(g, limits, mode);
  for (const PiWitness& w : pw.witnesses) add(w.derived);
  if (is_perfect(g)) add(g);

  const ElementTable& table = g.elements(limits);
  std::set<std::uint64_t> orders(table.order_of.begin(), table.order_of.end());
  for (std::uint64_t z : orders) {
    if (z < 2) continue;
    if (auto w = dihedral_witness(g, z, limits)) {
      add(derived_subgroup(w->subgroup));
    }
  }
  if (g.order() == 29120 && g.degree() == 65) {
    SuzukiWitnesses sw = suzuki_witnesses(g, limits, mode);
    add(sw.s_derived);
    add(sw.t_derived);
  }
  ConjClasses cc = conjugacy_classes(g, limits);
  for (std::size_t i = 0; i < cc.count(); ++i) {
    for (std::size_t j = i; j < cc.count(); ++j) {
      PermGroup h(g.degree(),
                  {table.elems[cc.rep[i]], table.elems[cc.rep[j]]});
      add(derived_subgroup(h));
    }
  }
  return family;
}

}  // namespace

BoundCheck bound_check(const PermGroup& g, const Limits& limits,
                       par::ExecMode mode, bool allow_slow_exhaustive) {
  BoundCheck out;
  out.pi_count = prime_spectrum(g.order()).size();
  if (is_abelian(g)) {
    out.verdict = BoundVerdict::not_applicable;
    out.detail = "abelian group; the comparison concerns nonabelian groups";
    return out;
  }
  const std::uint64_t target = out.pi_count + 2;
  const bool can_exhaust =
      g.order() <= limits.fast_lattice_bound ||
      (allow_slow_exhaustive && g.order() <= limits.lattice_threshold);
  if (can_exhaust) {
    Lattice lat = all_subgroups(g, limits, mode);
    out.d_value = d_invariant(g, lat, limits).d;
    out.exhaustive = true;
    if (out.d_value == target) {
      out.verdict = BoundVerdict::equals_pi_plus_2;
      out.detail = "equals |pi|+2 (exhaustive)";
    } else if (out.d_value > target) {
      out.verdict = BoundVerdict::exceeds;
      out.detail = "exceeds (exhaustive)";
    } else {
      out.verdict = BoundVerdict::below;
      out.detail = "below |pi|+2 (exhaustive)";
    }
    return out;
  }
  std::vector<PermGroup> family = witness_derived_family(g, limits, mode);
  IsoClasses classes = classify_groups(family, limits);
  out.d_value = classes.count();  // certified lower bound only
  out.exhaustive = false;
  if (out.d_value > target) {
    out.verdict = BoundVerdict::exceeds;
    out.detail = "exceeds (witness-based): " + std::to_string(out.d_value) +
                 " classes realized against bound " + std::to_string(target);
  } else {
    out.verdict = BoundVerdict::below;
    out.detail = "witness family realizes only " + std::to_string(out.d_value) +
                 " classes; the strict bound " + std::to_string(target) +
                 " is not established";
  }
  return out;
}

ProductProbe product_probe(const PermGroup& a, const PermGroup& b,
                           const Limits& limits) {
  ProductProbe out;
  Lattice la = all_subgroups(a, limits);
  Lattice lb = all_subgroups(b, limits);
  PermGroup ab = direct_product(a, b);
  Lattice lab = all_subgroups(ab, limits);
  out.d_a = d_invariant(a, la, limits).d;
  out.d_b = d_invariant(b, lb, limits).d;
  out.d_product = d_invariant(ab, lab, limits).d;
  out.coprime = std::gcd(a.order(), b.order()) == 1;
  out.multiplicative = out.d_product == out.d_a * out.d_b;
  if (is_isomorphic(a, b, limits)) {
    out.diagonal_perfect = is_perfect(diagonal_double(a));
  }
  return out;
}

PermGroup diagonal_double(const PermGroup& a) {
  const unsigned n = a.degree();
  std::vector<Perm> gens;
  for (const Perm& p : a.generators()) {
    std::vector<Point> img(2 * static_cast<std::size_t>(n));
    for (unsigned i = 0; i < n; ++i) {
      img[i] = p[i];
      img[n + i] = static_cast<Point>(n + p[i]);
    }
    gens.emplace_back(std::move(img));
  }
  std::string label = a.label().empty() ? "diagonal" : "diag(" + a.label() + ")";
  return PermGroup(2 * n, gens, label);
}

bool frobenius_derived_check(const PermGroup& g, const PermGroup& kernel,
                             const PermGroup& complement,
                             const Limits& limits) {
  if (!subgroup_of(kernel, g)) {
    throw std::invalid_argument("kernel is not a subgroup");
  }
  if (checked_mul(kernel.order(), complement.order(), "kernel-complement") !=
      g.order()) {
    throw std::invalid_argument(
        "kernel and complement orders do not multiply to the group order");
  }
  if (normal_closure(g, kernel.generators()).order() != kernel.order()) {
    throw std::invalid_argument("kernel is not normal");
  }
  if (!frobenius_complement_check(g, complement, limits)) {
    throw std::invalid_argument("complement fails the malnormality condition");
  }
  PermGroup lhs = derived_subgroup(g);
  std::vector<Perm> span = kernel.generators();
  for (const Perm& p : derived_subgroup(complement).generators()) {
    span.push_back(p);
  }
  PermGroup rhs(g.degree(), span);
  return same_subgroup(lhs, rhs);
}

ConjectureProbe conjecture_probe(std::uint64_t order, const Limits& limits) {
  ConjectureProbe out;
  if (order != 60) return out;  // curated list exists only at order 60
  out.candidates = {"A5",
                    "C60",
                    "prod(C2,C30)",
                    "D60",
                    "prod(A4,C5)",
                    "prod(S3,D10)",
                    "prod(frob(5,4),C3)",
                    "prod(D12,C5)",
                    "prod(C15,prod(C2,C2))"};
  struct Entry {
    PermGroup g;
    std::uint64_t d;
    std::uint64_t gr;
    bool simple;
  };
  std::vector<Entry> entries;
  entries.reserve(out.candidates.size());
  for (const std::string& expr : out.candidates) {
    PermGroup g = make_group(expr);
    if (g.order() != order) {
      throw std::logic_error("curated candidate " + expr +
                             " does not have the probed order");
    }
    Lattice lat = all_subgroups(g, limits);
    const std::uint64_t d = d_invariant(g, lat, limits).d;
    const std::uint64_t gr = gr_invariant(g, lat, limits);
    entries.push_back({std::move(g), d, gr, false});
    entries.back().simple = is_simple(entries.back().g, limits);
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i].d != entries[j].d || entries[i].gr != entries[j].gr) {
        continue;
      }
      if (is_isomorphic(entries[i].g, entries[j].g, limits)) continue;
      out.matches.push_back({out.candidates[i], out.candidates[j], entries[i].d,
                             entries[i].gr,
                             entries[i].simple || entries[j].simple});
    }
  }
  return out;
}

InvariantReport make_report(const PermGroup& g, const ReportOptions& opt,
                            const Limits& limits, par::ExecMode mode) {
  InvariantReport rep;
  rep.label = g.label();
  rep.order = g.order();
  rep.tier = g.order() <= limits.fast_lattice_bound ? "fast" : "slow";
  if (opt.want_pi) {
    for (const auto& [p, e] : prime_spectrum(g.order())) {
      (void)e;
      rep.pi.push_back(p);
    }
  }
  if (opt.want_d || opt.want_gr) {
    if (g.order() > limits.fast_lattice_bound && !opt.allow_slow) {
      throw TooLargeError(
          "group of order " + std::to_string(g.order()) +
          " is past the fast lattice tier (fast_lattice_bound = " +
          std::to_string(limits.fast_lattice_bound) +
          "); pass the slow-tier flag to enumerate up to lattice_threshold = " +
          std::to_string(limits.lattice_threshold));
    }
    Lattice lat = all_subgroups(g, limits, mode);
    if (opt.want_d) {
      DerivedClasses dc = d_invariant(g, lat, limits);
      rep.d_value = dc.d;
      rep.d_class_reps = std::move(dc.rep_labels);
    }
    if (opt.want_gr) rep.gr_value = gr_invariant(g, lat, limits);
  }
  if (opt.want_bound) {
    rep.bound = bound_check(g, limits, mode, opt.allow_slow);
  }
  if (opt.want_witnesses) {
    PiWitnessReport pw = pi_witnesses(g, limits, mode);
    for (const PiWitness& w : pw.witnesses) {
      rep.witnesses[w.prime] =
          "subgroup of order " + std::to_string(w.subgroup.order()) +
          " with derived subgroup " + describe_group(w.derived, limits) +
          " (order " + std::to_string(w.derived.order()) + ")";
    }
    for (std::uint64_t p : pw.p_nilpotent) {
      rep.witnesses[p] = "not applicable: normal p-complement present";
    }
  }
  return rep;
}

}  // namespace dsgrp

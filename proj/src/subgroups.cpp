#include "dsgrp/subgroups.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace dsgrp {
namespace {

std::uint64_t set_fingerprint(const std::vector<std::uint32_t>& elems) {
  return fnv1a64(elems.data(), elems.size() * sizeof(std::uint32_t));
}

}  // namespace

// Orbit of the identity index under right multiplication by `gens`:
// the element-index set of the subgroup they generate.
std::vector<std::uint32_t> closure_indices(const ElementTable& table,
                                           const std::vector<Perm>& gens) {
  std::vector<std::uint32_t> out{0};
  std::vector<bool> seen(table.size(), false);
  seen[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Perm& cur = table.elems[out[head]];
    for (const Perm& g : gens) {
      std::uint32_t next = table.at(compose(cur, g));
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Incremental builder: holds the records discovered so far plus an exact
// dedup structure (fingerprint buckets checked element-by-element).
class LatticeBuilder {
 public:
  explicit LatticeBuilder(const ElementTable& table) : table_(table) {}

  // Returns the record index if this element set is already present.
  std::optional<std::uint32_t> find(const std::vector<std::uint32_t>& elems,
                                    std::uint64_t fp) const {
    auto it = by_fp_.find(fp);
    if (it == by_fp_.end()) return std::nullopt;
    for (std::uint32_t idx : it->second) {
      if (records_[idx].elems == elems) return idx;
    }
    return std::nullopt;
  }

  std::uint32_t add(std::vector<std::uint32_t> elems, std::vector<Perm> gens,
                    std::uint64_t fp, std::uint32_t class_id) {
    SubgroupRecord rec;
    rec.order = elems.size();
    rec.elems = std::move(elems);
    rec.gens = std::move(gens);
    rec.fingerprint = fp;
    rec.class_id = class_id;
    records_.push_back(std::move(rec));
    auto idx = static_cast<std::uint32_t>(records_.size() - 1);
    by_fp_[fp].push_back(idx);
    return idx;
  }

  const SubgroupRecord& at(std::uint32_t idx) const { return records_[idx]; }
  std::size_t size() const { return records_.size(); }
  std::uint32_t next_class() { return class_counter_++; }
  std::vector<SubgroupRecord> take() { return std::move(records_); }

 private:
  const ElementTable& table_;
  std::vector<SubgroupRecord> records_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_fp_;
  std::uint32_t class_counter_ = 0;
};

}  // namespace

Lattice all_subgroups(const PermGroup& g, const Limits& limits,
                      par::ExecMode mode) {
  if (g.order() > limits.lattice_threshold) {
    throw TooLargeError(
        "group of order " + std::to_string(g.order()) +
        " is too large for full subgroup enumeration (lattice_threshold = " +
        std::to_string(limits.lattice_threshold) +
        "); restrict to conjugacy-class representatives of known shapes or "
        "use targeted witness searches instead");
  }
  const ElementTable& table = g.elements(limits);
  const std::size_t n = table.size();
  const unsigned degree = g.degree();
  const std::vector<Perm>& ggens = g.generators();

  // conj[k][e] = index of gens[k]^-1 * elems[e] * gens[k].
  std::vector<std::vector<std::uint32_t>> conj(ggens.size());
  for (std::size_t k = 0; k < ggens.size(); ++k) {
    conj[k] = par::map_indices<std::uint32_t>(
        n,
        [&](std::size_t e) {
          return table.at(table.elems[e].conjugated_by(ggens[k]));
        },
        mode);
  }

  LatticeBuilder builder(table);
  std::deque<std::uint32_t> rep_queue;  // class representatives to extend

  // Expands a freshly added record to its whole conjugacy class. A new
  // subgroup always brings a whole new class: if one conjugate were already
  // present, the expansion that added it would have added this one too.
  auto expand_class = [&](std::uint32_t fresh) {
    std::vector<std::uint32_t> pending{fresh};
    const std::uint32_t cid = builder.at(fresh).class_id;
    for (std::size_t head = 0; head < pending.size(); ++head) {
      // Copy: builder.add below may reallocate the record storage.
      const SubgroupRecord cur = builder.at(pending[head]);
      for (std::size_t k = 0; k < ggens.size(); ++k) {
        std::vector<std::uint32_t> mapped(cur.elems.size());
        for (std::size_t i = 0; i < cur.elems.size(); ++i) {
          mapped[i] = conj[k][cur.elems[i]];
        }
        std::sort(mapped.begin(), mapped.end());
        std::uint64_t fp = set_fingerprint(mapped);
        if (builder.find(mapped, fp)) continue;
        std::vector<Perm> cgens;
        cgens.reserve(cur.gens.size());
        for (const Perm& p : cur.gens) cgens.push_back(p.conjugated_by(ggens[k]));
        pending.push_back(builder.add(std::move(mapped), std::move(cgens), fp, cid));
      }
    }
    return pending.size();
  };

  // Seed with every cyclic subgroup.
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<std::uint32_t> cyc{0};
    std::uint32_t cur = static_cast<std::uint32_t>(e);
    while (cur != 0) {
      cyc.push_back(cur);
      cur = table.at(compose(table.elems[cur], table.elems[e]));
    }
    std::sort(cyc.begin(), cyc.end());
    std::uint64_t fp = set_fingerprint(cyc);
    if (builder.find(cyc, fp)) continue;
    std::vector<Perm> gens;
    if (e != 0) gens.push_back(table.elems[e]);
    std::uint32_t idx = builder.add(std::move(cyc), std::move(gens), fp,
                                    builder.next_class());
    expand_class(idx);
    rep_queue.push_back(idx);
  }

  // One-element extensions of each class representative, one coset
  // representative per right coset Hg (hg generates the same extension).
  struct Extension {
    std::vector<std::uint32_t> elems;
    std::vector<Perm> gens;
    std::uint64_t fp = 0;
  };
  while (!rep_queue.empty()) {
    const SubgroupRecord rep = builder.at(rep_queue.front());
    rep_queue.pop_front();
    if (rep.order == n) continue;

    std::vector<bool> covered(n, false);
    for (std::uint32_t h : rep.elems) covered[h] = true;
    std::vector<std::uint32_t> coset_reps;
    for (std::uint32_t e = 0; e < n; ++e) {
      if (covered[e]) continue;
      coset_reps.push_back(e);
      for (std::uint32_t h : rep.elems) {
        covered[table.at(compose(table.elems[h], table.elems[e]))] = true;
      }
    }

    std::vector<Extension> batch = par::map_indices<Extension>(
        coset_reps.size(),
        [&](std::size_t i) {
          Extension ext;
          ext.gens = rep.gens;
          ext.gens.push_back(table.elems[coset_reps[i]]);
          StabChain chain(degree, ext.gens);
          ext.elems = closure_indices(table, ext.gens);
          if (chain.order() != ext.elems.size()) {
            throw std::logic_error(
                "stabilizer-chain order disagrees with closure size");
          }
          ext.fp = set_fingerprint(ext.elems);
          return ext;
        },
        mode);

    for (Extension& ext : batch) {  // serial merge, coset order: deterministic
      if (builder.find(ext.elems, ext.fp)) continue;
      std::uint32_t idx = builder.add(std::move(ext.elems), std::move(ext.gens),
                                      ext.fp, builder.next_class());
      expand_class(idx);
      rep_queue.push_back(idx);
    }
  }

  // Canonical order and class numbering.
  std::vector<SubgroupRecord> records = builder.take();
  std::sort(records.begin(), records.end(),
            [](const SubgroupRecord& a, const SubgroupRecord& b) {
              if (a.order != b.order) return a.order < b.order;
              if (a.fingerprint != b.fingerprint)
                return a.fingerprint < b.fingerprint;
              return a.elems < b.elems;
            });
  Lattice out;
  std::unordered_map<std::uint32_t, std::uint32_t> remap;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto it = remap.find(records[i].class_id);
    if (it == remap.end()) {
      std::uint32_t fresh = static_cast<std::uint32_t>(remap.size());
      remap.emplace(records[i].class_id, fresh);
      records[i].class_id = fresh;
      out.class_rep.push_back(static_cast<std::uint32_t>(i));
      out.class_size.push_back(1);
    } else {
      records[i].class_id = it->second;
      out.class_size[it->second] += 1;
    }
  }
  out.subs = std::move(records);
  return out;
}

PermGroup subgroup_group(const PermGroup& parent, const SubgroupRecord& rec) {
  return PermGroup(parent.degree(), rec.gens);
}

PiWitnessReport pi_witnesses(const PermGroup& g, const Limits& limits,
                             par::ExecMode mode) {
  PiWitnessReport report;
  const ElementTable& table = g.elements(limits);
  for (const auto& [p, mult] : prime_spectrum(g.order())) {
    (void)mult;
    if (is_p_nilpotent(g, p, limits)) {
      report.p_nilpotent.push_back(p);
      continue;
    }
    PermGroup syl = sylow_subgroup(g, p, limits, mode);
    std::vector<std::uint32_t> normalizing =
        normalizer_indices(g, syl, limits, mode);
    std::vector<std::uint32_t> centralizing =
        centralizer_indices(g, syl, limits, mode);
    // Both index lists are ascending; pick the first normalizer element
    // outside the centralizer (one exists: N(P) = C(P) would force a normal
    // p-complement, contradicting the check above).
    std::optional<std::uint32_t> pick;
    std::size_t ci = 0;
    for (std::uint32_t e : normalizing) {
      while (ci < centralizing.size() && centralizing[ci] < e) ++ci;
      if (ci < centralizing.size() && centralizing[ci] == e) continue;
      pick = e;
      break;
    }
    if (!pick) {
      throw std::logic_error("Sylow normalizer equals centralizer for a prime "
                             "without a normal p-complement");
    }
    Perm x = table.elems[*pick];
    std::vector<Perm> hgens = syl.generators();
    hgens.push_back(x);
    PermGroup h(g.degree(), hgens);
    PermGroup d = derived_subgroup(h);
    // <x, P> lies in N(P), so its derived subgroup lands inside P and is
    // nontrivial because x fails to centralize P. Anything else is a bug.
    if (d.is_trivial() || !subgroup_of(d, syl) ||
        p_part(d.order(), p) != d.order()) {
      throw std::logic_error("derived subgroup of a Sylow-normalizing witness "
                             "is not a nontrivial p-group");
    }
    report.witnesses.push_back(
        PiWitness{p, std::move(x), std::move(syl), std::move(h), std::move(d)});
  }
  return report;
}

std::optional<DihedralWitness> dihedral_witness(const PermGroup& g,
                                                std::uint64_t z,
                                                const Limits& limits) {
  if (z < 2) {
    throw std::invalid_argument("dihedral witness needs rotation order >= 2");
  }
  const ElementTable& table = g.elements(limits);
  std::vector<std::uint32_t> involutions;
  for (std::size_t e = 0; e < table.size(); ++e) {
    if (table.order_of[e] == 2) involutions.push_back(static_cast<std::uint32_t>(e));
  }
  for (std::size_t e = 0; e < table.size(); ++e) {
    if (table.order_of[e] != z) continue;
    const Perm& r = table.elems[e];
    const Perm r_inv = r.inverse();
    for (std::uint32_t s_idx : involutions) {
      const Perm& s = table.elems[s_idx];
      if (r.conjugated_by(s) != r_inv) continue;
      PermGroup sub(g.degree(), {r, s});
      if (sub.order() != 2 * z) continue;  // z = 2 can pick s inside <r>
      return DihedralWitness{r, s, std::move(sub)};
    }
  }
  return std::nullopt;
}

SuzukiWitnesses suzuki_witnesses(const PermGroup& g, const Limits& limits,
                                 par::ExecMode mode) {
  if (g.order() != 29120 || g.degree() != 65) {
    throw std::invalid_argument(
        "suzuki witness chain is defined for the order-29120 group on 65 "
        "points");
  }
  PermGroup f = sylow_subgroup(g, 2, limits, mode);
  PermGroup zf = center(f, limits, mode);
  PermGroup t = normalizer(g, f, limits, mode);
  auto fail = [](const char* what) {
    throw std::logic_error(std::string("suzuki witness chain: ") + what);
  };
  if (f.order() != 64) fail("Sylow 2-subgroup does not have order 64");
  if (zf.order() != 8) fail("center of the Sylow 2-subgroup is not order 8");
  for (const Perm& p : zf.generators()) {
    if (!p.is_identity() && p.order() != 2) fail("center is not elementary abelian");
  }
  if (t.order() != 448) fail("Sylow-2 normalizer does not have order 448");
  const ElementTable& ttab = t.elements(limits);
  std::optional<Perm> gen7;
  for (std::size_t e = 0; e < ttab.size(); ++e) {
    if (ttab.order_of[e] == 7) {
      gen7 = ttab.elems[e];
      break;
    }
  }
  if (!gen7) fail("no order-7 complement generator in the normalizer");
  PermGroup h(g.degree(), {*gen7});
  std::vector<Perm> sgens = zf.generators();
  sgens.push_back(*gen7);
  PermGroup s(g.degree(), sgens);
  PermGroup s_derived = derived_subgroup(s);
  PermGroup t_derived = derived_subgroup(t);
  if (s.order() != 56) fail("<Z(F), H> does not have order 56");
  if (!same_subgroup(s_derived, zf)) fail("derived subgroup of <Z(F), H> is not Z(F)");
  if (!same_subgroup(t_derived, f)) fail("derived subgroup of the normalizer is not F");
  return SuzukiWitnesses{std::move(f),         std::move(zf), std::move(t),
                         std::move(h),         std::move(s),  std::move(s_derived),
                         std::move(t_derived)};
}

bool frobenius_complement_check(const PermGroup& g, const PermGroup& h,
                                const Limits& limits, par::ExecMode mode) {
  if (!subgroup_of(h, g)) {
    throw std::invalid_argument("complement candidate is not a subgroup");
  }
  if (h.is_trivial() || h.order() >= g.order()) {
    throw std::invalid_argument(
        "complement candidate must be proper and nontrivial");
  }
  const ElementTable& table = g.elements(limits);
  std::vector<std::uint32_t> h_idx = closure_indices(table, h.generators());
  std::vector<bool> in_h(table.size(), false);
  for (std::uint32_t e : h_idx) in_h[e] = true;
  std::vector<std::uint32_t> violations = par::filter_indices(
      static_cast<std::uint32_t>(table.size()),
      [&](std::uint32_t e) {
        if (in_h[e]) return false;
        const Perm& conj = table.elems[e];
        for (std::uint32_t hi : h_idx) {
          if (hi == 0) continue;
          if (in_h[table.at(table.elems[hi].conjugated_by(conj))]) return true;
        }
        return false;
      },
      mode);
  return violations.empty();
}

}  // namespace dsgrp

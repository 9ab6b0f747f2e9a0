#include "dsgrp/iso.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace dsgrp {
namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> order_histogram(
    const ElementTable& table) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint64_t o : table.order_of) hist[o] += 1;
  return {hist.begin(), hist.end()};
}

// Everything the generator-mapping search needs about one side.
struct SearchSide {
  const ElementTable* table = nullptr;
  ConjClasses classes;
};

// Greedy minimal generating sequence: each step adds the element giving the
// largest extension, so the sequence length is at most log2 |g|. Ties break
// toward the smallest element index; fully deterministic.
std::vector<std::uint32_t> greedy_generating_sequence(const PermGroup& g,
                                                      const Limits& limits) {
  const ElementTable& table = g.elements(limits);
  std::vector<std::uint32_t> seq;
  std::vector<Perm> gens;
  std::uint64_t cur_order = 1;
  while (cur_order < g.order()) {
    std::uint32_t best = 0;
    std::uint64_t best_order = 0;
    for (std::uint32_t e = 1; e < table.size(); ++e) {
      gens.push_back(table.elems[e]);
      std::uint64_t ext = StabChain(g.degree(), gens).order();
      gens.pop_back();
      if (ext > best_order) {
        best_order = ext;
        best = e;
      }
    }
    if (best_order <= cur_order) {
      throw std::logic_error("generating sequence stalled");
    }
    seq.push_back(best);
    gens.push_back(table.elems[best]);
    cur_order = best_order;
  }
  return seq;
}

enum class MapState { conflict, partial, complete };

// Tries to extend g_i -> h_i (element indices on each side) to a
// homomorphism on <g_0..g_k>: breadth-first closure mapping x*g_i to
// phi(x)*h_i. A collision or ill-defined edge is a conflict; covering every
// (element, generator) edge makes a conflict-free complete bijection an
// isomorphism.
MapState mapping_state(const SearchSide& a, const SearchSide& b,
                       const std::vector<std::uint32_t>& gens_a,
                       const std::vector<std::uint32_t>& gens_b) {
  const std::size_t n = a.table->size();
  std::vector<std::int64_t> image(n, -1);
  std::vector<bool> used(b.table->size(), false);
  image[0] = 0;
  used[0] = true;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t x = queue[head];
    const auto y = static_cast<std::uint32_t>(image[x]);
    for (std::size_t k = 0; k < gens_a.size(); ++k) {
      std::uint32_t xa = a.table->at(
          compose(a.table->elems[x], a.table->elems[gens_a[k]]));
      std::uint32_t yb = b.table->at(
          compose(b.table->elems[y], b.table->elems[gens_b[k]]));
      if (image[xa] == -1) {
        if (used[yb]) return MapState::conflict;  // not injective
        image[xa] = yb;
        used[yb] = true;
        queue.push_back(xa);
      } else if (image[xa] != yb) {
        return MapState::conflict;  // not well defined
      }
    }
  }
  return queue.size() == n ? MapState::complete : MapState::partial;
}

bool search_isomorphism(const SearchSide& a, const SearchSide& b,
                        const std::vector<std::uint32_t>& seq,
                        std::vector<std::uint32_t>& gens_a,
                        std::vector<std::uint32_t>& gens_b, std::size_t k) {
  const std::uint32_t ga = seq[k];
  const std::uint64_t want_order = a.table->order_of[ga];
  const std::uint32_t want_size = a.classes.size[a.classes.class_of[ga]];
  for (std::uint32_t y = 0; y < b.table->size(); ++y) {
    if (b.table->order_of[y] != want_order) continue;
    const std::uint32_t ycls = b.classes.class_of[y];
    if (b.classes.size[ycls] != want_size) continue;
    // Any isomorphism can be composed with an inner automorphism, so the
    // first generator may be pinned to a class representative.
    if (k == 0 && b.classes.rep[ycls] != y) continue;
    gens_a.push_back(ga);
    gens_b.push_back(y);
    MapState state = mapping_state(a, b, gens_a, gens_b);
    // The greedy sequence grows strictly, so "complete" can only happen at
    // the last position; a consistent partial map recurses deeper.
    bool ok = state == MapState::complete ||
              (state == MapState::partial && k + 1 < seq.size() &&
               search_isomorphism(a, b, seq, gens_a, gens_b, k + 1));
    gens_a.pop_back();
    gens_b.pop_back();
    if (ok) return true;
  }
  return false;
}

}  // namespace

IsoFingerprint iso_fingerprint(const PermGroup& g, const Limits& limits) {
  IsoFingerprint fp;
  fp.order = g.order();
  fp.abelian = is_abelian(g);
  fp.center_order = fp.abelian ? fp.order : center(g, limits).order();
  for (const PermGroup& d : derived_series(g)) {
    fp.derived_orders.push_back(d.order());
  }
  fp.element_orders = order_histogram(g.elements(limits));
  if (fp.abelian) fp.abelian_inv = abelian_invariants(g, limits);
  return fp;
}

bool is_isomorphic(const PermGroup& a, const PermGroup& b,
                   const Limits& limits) {
  if (a.order() != b.order()) return false;
  IsoFingerprint fa = iso_fingerprint(a, limits);
  IsoFingerprint fb = iso_fingerprint(b, limits);
  if (fa != fb) return false;
  if (fa.abelian) return true;  // equal elementary divisors decide
  if (is_perfect(a) && is_perfect(b)) {
    // Sylow separation: an isomorphism carries Sylow p-subgroups to Sylow
    // p-subgroups, so differing Sylow fingerprints rule the pair out before
    // the backtracking search (the expensive case is same-order perfect
    // groups, whose searches explore the most candidates).
    for (const auto& [p, e] : prime_spectrum(a.order())) {
      (void)e;
      if (iso_fingerprint(sylow_subgroup(a, p, limits), limits) !=
          iso_fingerprint(sylow_subgroup(b, p, limits), limits)) {
        return false;
      }
    }
  }
  SearchSide sa{&a.elements(limits), conjugacy_classes(a, limits)};
  SearchSide sb{&b.elements(limits), conjugacy_classes(b, limits)};
  std::vector<std::uint32_t> seq = greedy_generating_sequence(a, limits);
  std::vector<std::uint32_t> gens_a;
  std::vector<std::uint32_t> gens_b;
  return search_isomorphism(sa, sb, seq, gens_a, gens_b, 0);
}

IsoClasses classify_groups(const std::vector<PermGroup>& groups,
                           const Limits& limits) {
  IsoClasses out;
  std::vector<IsoFingerprint> rep_fp;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    IsoFingerprint fp = iso_fingerprint(groups[i], limits);
    std::optional<std::size_t> hit;
    for (std::size_t c = 0; c < out.rep.size() && !hit; ++c) {
      if (rep_fp[c] != fp) continue;
      if (fp.abelian || is_isomorphic(groups[out.rep[c]], groups[i], limits)) {
        hit = c;
      }
    }
    if (!hit) {
      hit = out.rep.size();
      out.rep.push_back(i);
      rep_fp.push_back(std::move(fp));
    }
    out.class_of.push_back(*hit);
  }
  return out;
}

bool is_simple(const PermGroup& g, const Limits& limits) {
  if (g.order() == 1) return false;
  const ElementTable& table = g.elements(limits);
  ConjClasses classes = conjugacy_classes(g, limits);
  for (std::size_t c = 0; c < classes.count(); ++c) {
    const Perm& x = table.elems[classes.rep[c]];
    if (x.is_identity()) continue;
    if (normal_closure(g, {x}).order() != g.order()) return false;
  }
  return true;
}

namespace {

// Elementary divisors -> invariant factors (each dividing the next), e.g.
// [2,2,3] -> [2,6] and a "C2xC6" display.
std::vector<std::uint64_t> invariant_factors(std::vector<std::uint64_t> el) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
  for (std::uint64_t d : el) {
    by_prime[prime_spectrum(d)[0].first].push_back(d);
  }
  std::size_t rank = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    rank = std::max(rank, powers.size());
  }
  std::vector<std::uint64_t> factors(rank, 1);
  for (auto& [p, powers] : by_prime) {
    for (std::size_t i = 0; i < powers.size(); ++i) factors[i] *= powers[i];
  }
  std::reverse(factors.begin(), factors.end());  // ascending, d1 | d2 | ...
  return factors;
}

const std::map<std::uint64_t, const char*> kSimpleNames = {
    {60, "A5"},           {168, "PSL(2,7)"},  {360, "A6"},
    {504, "PSL(2,8)"},    {660, "PSL(2,11)"}, {1092, "PSL(2,13)"},
    {2448, "PSL(2,17)"},  {2520, "A7"},       {4080, "PSL(2,16)"},
    {5616, "PSL(3,3)"},   {6048, "U(3,3)"},   {7800, "PSL(2,25)"},
    {9828, "PSL(2,27)"},  {25920, "U(4,2)"},  {29120, "Sz(8)"},
    {34440, "PSL(2,41)"},
};

}  // namespace

std::string describe_group(const PermGroup& g, const Limits& limits) {
  const std::uint64_t n = g.order();
  if (n == 1) return "1";
  if (is_abelian(g)) {
    std::string out;
    for (std::uint64_t f : invariant_factors(abelian_invariants(g, limits))) {
      if (!out.empty()) out += "x";
      out += "C" + std::to_string(f);
    }
    return out;
  }
  // Dihedral: a cyclic half inverted by an outside involution.
  if (n % 2 == 0 && n >= 6) {
    const ElementTable& table = g.elements(limits);
    for (std::size_t e = 0; e < table.size(); ++e) {
      if (table.order_of[e] != n / 2) continue;
      const Perm& r = table.elems[e];
      const Perm r_inv = r.inverse();
      for (std::size_t s = 0; s < table.size(); ++s) {
        if (table.order_of[s] == 2 &&
            r.conjugated_by(table.elems[s]) == r_inv) {
          return "D" + std::to_string(n);
        }
      }
      break;  // all cyclic halves are conjugate-equivalent for this purpose
    }
  }
  if (n == 8) {  // nonabelian with a single involution
    const ElementTable& table = g.elements(limits);
    std::size_t involutions = 0;
    for (std::uint64_t o : table.order_of) involutions += (o == 2);
    if (involutions == 1) return "Q8";
  }
  std::vector<PermGroup> series = derived_series(g);
  const std::uint64_t derived_order = series.size() > 1 ? series[1].order() : n;
  if (n == 12 && derived_order == 4) return "A4";
  if (n == 24 && derived_order == 12 && series.size() > 2 &&
      series[2].order() == 4) {
    return "S4";
  }
  if (is_perfect(g)) {
    auto it = kSimpleNames.find(n);
    if (it != kSimpleNames.end() && is_simple(g, limits)) return it->second;
    return "perfect group of order " + std::to_string(n);
  }
  return "order " + std::to_string(n) + " (derived order " +
         std::to_string(derived_order) + ")";
}

}  // namespace dsgrp

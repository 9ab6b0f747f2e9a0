#include "dsgrp/group_ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dsgrp {

Perm commutator(const Perm& a, const Perm& b) {
  return compose(compose(compose(a.inverse(), b.inverse()), a), b);
}

std::vector<Perm> reduce_generators(unsigned degree,
                                    const std::vector<Perm>& span) {
  std::vector<Perm> kept;
  StabChain chain(degree, {});
  for (const Perm& p : span) {
    if (chain.extend(p)) kept.push_back(p);
  }
  return kept;
}

PermGroup normal_closure(const PermGroup& g, std::vector<Perm> seed) {
  StabChain chain(g.degree(), {});
  std::vector<Perm> closure_gens;
  std::vector<Perm> queue = std::move(seed);
  while (!queue.empty()) {
    Perm t = std::move(queue.back());
    queue.pop_back();
    if (!chain.extend(t)) continue;
    for (const Perm& c : g.generators()) {
      queue.push_back(t.conjugated_by(c));
    }
    closure_gens.push_back(std::move(t));
  }
  return PermGroup(g.degree(), std::move(closure_gens));
}

PermGroup derived_subgroup(const PermGroup& g) {
  const auto& gens = g.generators();
  std::vector<Perm> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  return normal_closure(g, std::move(comms));
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup d = derived_subgroup(series.back());
    if (d.order() == series.back().order()) break;
    bool trivial = d.is_trivial();
    series.push_back(std::move(d));
    if (trivial) break;
  }
  return series;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commutator(gens[i], gens[j]).is_identity()) return false;
    }
  }
  return true;
}

bool is_perfect(const PermGroup& g) {
  return derived_subgroup(g).order() == g.order();
}

std::vector<std::uint32_t> centralizer_indices(const PermGroup& g,
                                               const PermGroup& h,
                                               const Limits& limits,
                                               par::ExecMode mode) {
  const ElementTable& tb = g.elements(limits);
  const auto& hgens = h.generators();
  return par::filter_indices(
      static_cast<std::uint32_t>(tb.size()),
      [&](std::uint32_t i) {
        const Perm& x = tb.elems[i];
        for (const Perm& hg : hgens) {
          if (compose(x, hg) != compose(hg, x)) return false;
        }
        return true;
      },
      mode);
}

std::vector<std::uint32_t> normalizer_indices(const PermGroup& g,
                                              const PermGroup& h,
                                              const Limits& limits,
                                              par::ExecMode mode) {
  const ElementTable& tb = g.elements(limits);
  const auto& hgens = h.generators();
  h.order();  // force the chain before threads share it
  return par::filter_indices(
      static_cast<std::uint32_t>(tb.size()),
      [&](std::uint32_t i) {
        const Perm& x = tb.elems[i];
        for (const Perm& hg : hgens) {
          if (!h.contains(hg.conjugated_by(x))) return false;
        }
        return true;
      },
      mode);
}

namespace {

PermGroup group_from_indices(const PermGroup& g,
                             const std::vector<std::uint32_t>& idx,
                             const Limits& limits) {
  const ElementTable& tb = g.elements(limits);
  std::vector<Perm> span;
  span.reserve(idx.size());
  for (std::uint32_t i : idx) span.push_back(tb.elems[i]);
  return PermGroup(g.degree(), reduce_generators(g.degree(), span));
}

}  // namespace

PermGroup centralizer(const PermGroup& g, const Perm& x, const Limits& limits,
                      par::ExecMode mode) {
  PermGroup h(g.degree(), {x});
  return group_from_indices(g, centralizer_indices(g, h, limits, mode),
                            limits);
}

PermGroup centralizer(const PermGroup& g, const PermGroup& h,
                      const Limits& limits, par::ExecMode mode) {
  return group_from_indices(g, centralizer_indices(g, h, limits, mode),
                            limits);
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                     const Limits& limits, par::ExecMode mode) {
  return group_from_indices(g, normalizer_indices(g, h, limits, mode),
                            limits);
}

PermGroup center(const PermGroup& g, const Limits& limits,
                 par::ExecMode mode) {
  return group_from_indices(g, centralizer_indices(g, g, limits, mode),
                            limits);
}

ConjClasses conjugacy_classes(const PermGroup& g, const Limits& limits) {
  const ElementTable& tb = g.elements(limits);
  const auto& gens = g.generators();
  auto n = static_cast<std::uint32_t>(tb.size());
  constexpr std::uint32_t kUnassigned = 0xffffffffu;

  ConjClasses cc;
  cc.class_of.assign(n, kUnassigned);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (cc.class_of[i] != kUnassigned) continue;
    auto id = static_cast<std::uint32_t>(cc.rep.size());
    cc.rep.push_back(i);
    cc.class_of[i] = id;
    std::uint32_t members = 1;
    stack.assign(1, i);
    while (!stack.empty()) {
      std::uint32_t j = stack.back();
      stack.pop_back();
      for (const Perm& c : gens) {
        std::uint32_t k = tb.at(tb.elems[j].conjugated_by(c));
        if (cc.class_of[k] == kUnassigned) {
          cc.class_of[k] = id;
          ++members;
          stack.push_back(k);
        }
      }
    }
    cc.size.push_back(members);
  }
  return cc;
}

std::vector<std::pair<std::uint64_t, unsigned>> prime_spectrum(
    std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p,
                         const Limits& limits, par::ExecMode mode) {
  std::uint64_t target = p_part(g.order(), p);
  if (target == 1) return PermGroup(g.degree(), {});
  const ElementTable& tb = g.elements(limits);

  // Seed: cyclic group on the p-part of an element of maximal p-power order.
  std::uint64_t best_pp = 1;
  std::uint32_t best_i = 0;
  for (std::uint32_t i = 0; i < tb.size(); ++i) {
    std::uint64_t pp = p_part(tb.order_of[i], p);
    if (pp > best_pp) {
      best_pp = pp;
      best_i = i;
    }
  }
  PermGroup sub(g.degree(),
                {perm_pow(tb.elems[best_i], tb.order_of[best_i] / best_pp)});

  // While |sub| is short of the full p-part, its normalizer holds an element
  // whose p-part falls outside sub; adjoining that p-part grows sub by a
  // factor of at least p (sub stays a p-group because it is normalized).
  while (sub.order() < target) {
    bool grown = false;
    for (std::uint32_t j : normalizer_indices(g, sub, limits, mode)) {
      std::uint64_t pp = p_part(tb.order_of[j], p);
      if (pp == 1) continue;
      Perm zp = perm_pow(tb.elems[j], tb.order_of[j] / pp);
      if (sub.contains(zp)) continue;
      std::vector<Perm> next_gens = sub.generators();
      next_gens.push_back(std::move(zp));
      sub = PermGroup(g.degree(), std::move(next_gens));
      grown = true;
      break;
    }
    if (!grown) {
      throw std::logic_error("sylow ascent stalled below the full p-part");
    }
  }
  if (sub.order() != target) {
    throw std::logic_error("sylow ascent overshot the p-part");
  }
  return sub;
}

bool is_p_nilpotent(const PermGroup& g, std::uint64_t p,
                    const Limits& limits) {
  const ElementTable& tb = g.elements(limits);
  std::vector<std::uint32_t> coprime;
  for (std::uint32_t i = 0; i < tb.size(); ++i) {
    if (tb.order_of[i] % p != 0) coprime.push_back(i);
  }
  auto target = static_cast<std::uint64_t>(coprime.size());
  StabChain chain(g.degree(), {});
  for (std::uint32_t i : coprime) {
    chain.extend(tb.elems[i]);
    if (chain.order() > target) return false;
  }
  return chain.order() == target;
}

std::vector<std::uint64_t> abelian_invariants(const PermGroup& g,
                                              const Limits& limits) {
  if (!is_abelian(g)) {
    throw std::invalid_argument("abelian_invariants: group is not abelian");
  }
  const ElementTable& tb = g.elements(limits);
  std::vector<std::uint64_t> divisors;
  for (auto [p, e] : prime_spectrum(g.order())) {
    // s[k] = log_p #{x : x^(p^k) == 1}; the differences s[k] - s[k-1] list,
    // for each k, how many cyclic factors have order at least p^k.
    std::vector<unsigned> s(e + 1, 0);
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      std::uint64_t count = 0;
      for (std::uint32_t i = 0; i < tb.size(); ++i) {
        if (pk % tb.order_of[i] == 0) ++count;
      }
      unsigned log = 0;
      std::uint64_t acc = 1;
      while (acc < count) {
        acc *= p;
        ++log;
      }
      if (acc != count) {
        throw std::logic_error("abelian_invariants: non-p-power point count");
      }
      s[k] = log;
    }
    // factor f has order p^len where len = #{k : s[k]-s[k-1] >= rank of f}
    unsigned factors = s[1];  // every nontrivial cyclic factor reaches k = 1
    for (unsigned f = 1; f <= factors; ++f) {
      unsigned len = 0;
      for (unsigned k = 1; k <= e; ++k) {
        if (s[k] - s[k - 1] >= f) ++len;
      }
      std::uint64_t val = 1;
      for (unsigned t = 0; t < len; ++t) val *= p;
      divisors.push_back(val);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace dsgrp

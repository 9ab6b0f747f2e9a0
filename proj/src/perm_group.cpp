#include "dsgrp/perm_group.hpp"

#include <algorithm>
#include <mutex>

namespace dsgrp {

// ---------------------------------------------------------------------------
// StabChain

StabChain::StabChain(unsigned degree, const std::vector<Perm>& generators)
    : degree_(degree) {
  for (const Perm& g : generators) {
    if (g.degree() != degree_) {
      throw std::invalid_argument("stabilizer chain: generator degree mismatch");
    }
    extend(g);
  }
}

std::vector<const Perm*> StabChain::level_gens(std::size_t level) const {
  // generators of the level-th stabilizer: everything stored at this level
  // or deeper (deeper generators fix a longer base prefix)
  std::vector<const Perm*> out;
  for (std::size_t j = level; j < levels_.size(); ++j) {
    for (const Perm& g : levels_[j].gens) out.push_back(&g);
  }
  return out;
}

void StabChain::recompute_orbit(std::size_t level) {
  Level& lv = levels_[level];
  auto gens = level_gens(level);
  lv.orbit.clear();
  lv.where.assign(degree_, -1);
  lv.transversal.clear();
  lv.orbit.push_back(lv.base);
  lv.where[lv.base] = 0;
  lv.transversal.push_back(Perm::identity(degree_));
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    Point x = lv.orbit[i];
    for (const Perm* g : gens) {
      Point y = (*g)[x];
      if (lv.where[y] < 0) {
        lv.where[y] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(y);
        lv.transversal.push_back(compose(lv.transversal[i], *g));
      }
    }
  }
}

std::pair<Perm, std::size_t> StabChain::sift(const Perm& p,
                                             std::size_t from) const {
  Perm cur = p;
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    Point x = cur[lv.base];
    if (lv.where[x] < 0) return {cur, i};
    cur = compose(cur, lv.transversal[lv.where[x]].inverse());
  }
  return {cur, levels_.size()};
}

void StabChain::insert_generator(const Perm& g, std::size_t level) {
  if (level == levels_.size()) {
    Level lv;
    Point base = 0;
    for (unsigned i = 0; i < degree_; ++i) {
      if (g[static_cast<Point>(i)] != i) {
        base = static_cast<Point>(i);
        break;
      }
    }
    lv.base = base;
    levels_.push_back(std::move(lv));
  }
  levels_[level].gens.push_back(g);
}

void StabChain::complete(std::size_t level) {
  // Establishes: every level >= `level` has its full orbit and all of its
  // Schreier generators sift to the identity through the deeper levels.
  // A residue inserted at level `at` enlarges the generating sets of every
  // level in (level, at], so those are re-completed deepest-first and the
  // scan of this level restarts with fresh orbit and generator snapshots.
  for (;;) {
    recompute_orbit(level);
    std::vector<Perm> gens;  // value snapshot: inserts reallocate storage
    for (const Perm* g : level_gens(level)) gens.push_back(*g);
    bool dirty = false;
    const std::size_t orbit_n = levels_[level].orbit.size();
    for (std::size_t oi = 0; oi < orbit_n && !dirty; ++oi) {
      for (const Perm& g : gens) {
        const Level& lv = levels_[level];  // re-fetch: levels_ may have grown
        Point y = g[lv.orbit[oi]];
        Perm schreier = compose(compose(lv.transversal[oi], g),
                                lv.transversal[lv.where[y]].inverse());
        if (schreier.is_identity()) continue;
        auto [res, at] = sift(schreier, level + 1);
        if (res.is_identity()) continue;
        insert_generator(res, at);
        for (std::size_t i = at; i > level; --i) complete(i);
        dirty = true;
        break;
      }
    }
    if (!dirty) return;
  }
}

bool StabChain::extend(const Perm& g) {
  if (g.is_identity()) return false;
  auto [res, at] = sift(g, 0);
  if (res.is_identity()) return false;
  insert_generator(res, at);
  for (std::size_t i = at + 1; i-- > 0;) {
    // complete from the insertion level upward; shallower levels may gain
    // new orbit points now that a deeper stabilizer grew
    complete(i);
  }
  return true;
}

std::uint64_t StabChain::order() const {
  std::uint64_t n = 1;
  for (const Level& lv : levels_) {
    n = checked_mul(n, lv.orbit.size(), "group order");
  }
  return n;
}

bool StabChain::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [res, at] = sift(p, 0);
  (void)at;
  return res.is_identity();
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const Level& lv : levels_) b.push_back(lv.base);
  return b;
}

// ---------------------------------------------------------------------------
// ElementTable

std::uint32_t ElementTable::at(const Perm& p) const {
  auto it = index.find(p);
  if (it == index.end()) {
    throw std::invalid_argument("element table: permutation not in group");
  }
  return it->second;
}

std::optional<std::uint32_t> ElementTable::find(const Perm& p) const {
  auto it = index.find(p);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::Impl {
  unsigned degree;
  std::vector<Perm> gens;
  std::string label;

  std::mutex mu;
  std::shared_ptr<const StabChain> chain;
  std::shared_ptr<const ElementTable> table;
};

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators,
                     std::string label)
    : impl_(std::make_shared<Impl>()) {
  if (degree == 0 || degree > kMaxDegree) {
    throw std::invalid_argument("group degree must be in [1, " +
                                std::to_string(kMaxDegree) + "]");
  }
  impl_->degree = degree;
  impl_->label = std::move(label);
  for (Perm& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generator degree mismatch");
    }
    if (!g.is_identity()) impl_->gens.push_back(std::move(g));
  }
}

unsigned PermGroup::degree() const { return impl_->degree; }
const std::vector<Perm>& PermGroup::generators() const { return impl_->gens; }
const std::string& PermGroup::label() const { return impl_->label; }
void PermGroup::set_label(std::string label) { impl_->label = std::move(label); }

const StabChain& PermGroup::chain() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (!impl_->chain) {
    impl_->chain = std::make_shared<StabChain>(impl_->degree, impl_->gens);
  }
  return *impl_->chain;
}

std::uint64_t PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != impl_->degree) return false;
  return chain().contains(p);
}

const ElementTable& PermGroup::elements(const Limits& limits) const {
  std::uint64_t n = order();
  if (n > limits.elements_threshold) {
    throw TooLargeError(
        "element enumeration needs order <= " +
        std::to_string(limits.elements_threshold) +
        " (elements_threshold); group has order " + std::to_string(n));
  }
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (!impl_->table) {
    auto table = std::make_shared<ElementTable>();
    std::vector<Perm> frontier{Perm::identity(impl_->degree)};
    std::unordered_map<Perm, std::uint32_t, PermHash> seen;
    seen.reserve(static_cast<std::size_t>(n) * 2);
    seen.emplace(frontier[0], 0);
    std::vector<Perm> all{frontier[0]};
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const Perm& x : frontier) {
        for (const Perm& g : impl_->gens) {
          Perm y = compose(x, g);
          if (seen.emplace(y, 0).second) {
            all.push_back(y);
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    table->elems = std::move(all);
    table->index.reserve(table->elems.size() * 2);
    table->order_of.resize(table->elems.size());
    for (std::uint32_t i = 0; i < table->elems.size(); ++i) {
      table->index.emplace(table->elems[i], i);
      table->order_of[i] = static_cast<std::uint32_t>(table->elems[i].order());
    }
    impl_->table = std::move(table);
  }
  return *impl_->table;
}

bool subgroup_of(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) return false;
  for (const Perm& g : a.generators()) {
    if (!b.contains(g)) return false;
  }
  return true;
}

bool same_subgroup(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() &&
         subgroup_of(a, b);
}

}  // namespace dsgrp

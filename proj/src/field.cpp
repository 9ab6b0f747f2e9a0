#include "dsgrp/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace dsgrp {

namespace {

// One fixed monic irreducible polynomial per extension field, stored as the
// coefficients c0..c_{k-1} of x^k + c_{k-1} x^{k-1} + ... + c0.
struct FieldShape {
  unsigned p, k;
  std::vector<unsigned> modulus;
};

const std::map<unsigned, FieldShape>& shapes() {
  static const std::map<unsigned, FieldShape> table = {
      {4, {2, 2, {1, 1}}},        // x^2 + x + 1
      {5, {5, 1, {}}},
      {7, {7, 1, {}}},
      {8, {2, 3, {1, 1, 0}}},     // x^3 + x + 1
      {9, {3, 2, {1, 0}}},        // x^2 + 1
      {11, {11, 1, {}}},
      {13, {13, 1, {}}},
      {16, {2, 4, {1, 1, 0, 0}}},  // x^4 + x + 1
      {17, {17, 1, {}}},
      {25, {5, 2, {2, 0}}},       // x^2 + 2
      {27, {3, 3, {1, 2, 0}}},    // x^3 + 2x + 1
      {41, {41, 1, {}}},
  };
  return table;
}

std::vector<unsigned> digits_of(unsigned e, unsigned p, unsigned k) {
  std::vector<unsigned> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = e % p;
    e /= p;
  }
  return d;
}

unsigned index_of(const std::vector<unsigned>& d, unsigned p) {
  unsigned e = 0;
  for (unsigned i = d.size(); i-- > 0;) e = e * p + d[i];
  return e;
}

unsigned add_elems(unsigned a, unsigned b, unsigned p, unsigned k) {
  auto da = digits_of(a, p, k);
  auto db = digits_of(b, p, k);
  for (unsigned i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
  return index_of(da, p);
}

unsigned mul_elems(unsigned a, unsigned b, const FieldShape& s) {
  auto da = digits_of(a, s.p, s.k);
  auto db = digits_of(b, s.p, s.k);
  std::vector<unsigned> prod(2 * s.k - 1, 0);
  for (unsigned i = 0; i < s.k; ++i) {
    for (unsigned j = 0; j < s.k; ++j) {
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % s.p;
    }
  }
  // x^k = -(c_{k-1} x^{k-1} + ... + c0), applied from the top degree down
  for (unsigned d = 2 * s.k - 2; d >= s.k; --d) {
    unsigned c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned t = 0; t < s.k; ++t) {
      prod[d - s.k + t] =
          (prod[d - s.k + t] + c * (s.p - s.modulus[t])) % s.p;
    }
  }
  prod.resize(s.k);
  return index_of(prod, s.p);
}

std::unique_ptr<FieldTable> build(unsigned q, const FieldShape& s) {
  auto f = std::make_unique<FieldTable>();
  f->q = q;
  f->p = s.p;
  f->k = s.k;
  f->modulus = s.modulus;
  f->add.assign(q, std::vector<unsigned>(q));
  f->mul.assign(q, std::vector<unsigned>(q));
  f->neg.assign(q, 0);
  f->inv.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      f->add[a][b] = add_elems(a, b, s.p, s.k);
      f->mul[a][b] = mul_elems(a, b, s);
    }
  }
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (f->add[a][b] == 0) f->neg[a] = b;
      if (a != 0 && f->mul[a][b] == 1) f->inv[a] = b;
    }
    if (a != 0 && f->inv[a] == 0) {
      throw std::logic_error("field table: missing inverse");
    }
  }
  for (unsigned a = 2; a < q; ++a) {
    unsigned ord = 1;
    unsigned x = a;
    while (x != 1) {
      x = f->mul[x][a];
      ++ord;
    }
    if (ord == q - 1) {
      f->primitive = a;
      break;
    }
  }
  if (q > 2 && f->primitive == 0) {
    throw std::logic_error("field table: no primitive element");
  }
  return f;
}

}  // namespace

unsigned FieldTable::pow(unsigned a, std::uint64_t e) const {
  unsigned acc = 1;
  unsigned base = a;
  while (e > 0) {
    if (e & 1) acc = mul[acc][base];
    e >>= 1;
    base = mul[base][base];
  }
  return acc;
}

const std::vector<unsigned>& FieldTable::supported() {
  static const std::vector<unsigned> qs = [] {
    std::vector<unsigned> v;
    for (const auto& [q, s] : shapes()) {
      (void)s;
      v.push_back(q);
    }
    return v;
  }();
  return qs;
}

const FieldTable& FieldTable::get(unsigned q) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<FieldTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;
  auto sh = shapes().find(q);
  if (sh == shapes().end()) {
    std::string msg = "unsupported field size " + std::to_string(q) +
                      "; supported sizes:";
    for (unsigned s : supported()) msg += " " + std::to_string(s);
    throw std::invalid_argument(msg);
  }
  auto [pos, inserted] = cache.emplace(q, build(q, sh->second));
  (void)inserted;
  return *pos->second;
}

}  // namespace dsgrp

#include "dsgrp/perm.hpp"

#include <algorithm>
#include <numeric>

namespace dsgrp {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b,
                          const char* context) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw TooLargeError(std::string(context) + ": value exceeds 64 bits");
  }
  return r;
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) {
    throw TooLargeError("permutation degree exceeds " + std::to_string(kMaxDegree));
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("image array is not a permutation");
    }
    seen[v] = true;
  }
}

Perm Perm::identity(unsigned degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> img(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) {
    img[images_[i]] = static_cast<Point>(i);
  }
  return Perm(std::move(img));
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<Point> img(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) {
    img[i] = b[a[static_cast<Point>(i)]];
  }
  return Perm(std::move(img));
}

Perm perm_pow(const Perm& p, std::uint64_t e) {
  Perm acc = Perm::identity(p.degree());
  Perm base = p;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return acc;
}

Perm Perm::conjugated_by(const Perm& g) const {
  if (g.degree() != degree()) {
    throw std::invalid_argument("conjugated_by: degree mismatch");
  }
  // result[g[i]] = g[p[i]]
  std::vector<Point> img(degree());
  for (unsigned i = 0; i < degree(); ++i) {
    img[g[static_cast<Point>(i)]] = g[images_[i]];
  }
  return Perm(std::move(img));
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    Point j = static_cast<Point>(i);
    do {
      seen[j] = true;
      j = images_[j];
      ++len;
    } while (j != i);
    ord = checked_mul(ord / std::gcd(ord, len), len, "element order");
  }
  return ord;
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    Point j = static_cast<Point>(i);
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(j);
      seen[j] = true;
      j = images_[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  return out;
}

Perm Perm::parse_cycles(std::string_view text, unsigned degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw std::invalid_argument("parse_cycles: bad degree");
  }
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("cycle parse error: " + msg, pos);
  };

  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<Point> cyc;
    while (true) {
      std::size_t start = pos;
      if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') {
        fail("expected a point number");
      }
      unsigned long v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
        if (v > kMaxDegree) { pos = start; fail("point out of range"); }
        ++pos;
      }
      if (v >= degree) { pos = start; fail("point out of range"); }
      if (used[v]) { pos = start; fail("repeated point"); }
      used[v] = true;
      cyc.push_back(static_cast<Point>(v));
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ',') { ++pos; continue; }
      if (text[pos] == ')') { ++pos; break; }
      fail("expected ',' or ')'");
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
  }
  return Perm(std::move(img));
}

}  // namespace dsgrp

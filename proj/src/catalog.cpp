#include "dsgrp/catalog.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

#include "dsgrp/field.hpp"

namespace dsgrp {

namespace {

constexpr std::uint64_t kMaxFactorialArg = 20;  // 21! overflows 64 bits

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void check_order(const PermGroup& g, std::uint64_t expected,
                 const std::string& what) {
  if (g.order() != expected) {
    throw std::logic_error(what + ": construction self-check failed (order " +
                           std::to_string(g.order()) + ", expected " +
                           std::to_string(expected) + ")");
  }
}

Perm full_cycle(unsigned degree, unsigned from, unsigned len) {
  std::vector<Point> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  for (unsigned i = 0; i < len; ++i) {
    img[from + i] = static_cast<Point>(from + (i + 1) % len);
  }
  return Perm(std::move(img));
}

}  // namespace

PermGroup cyclic(std::uint64_t n) {
  if (n == 0 || n > kMaxDegree) {
    throw std::invalid_argument("cyclic: order must be in [1, " +
                                std::to_string(kMaxDegree) + "]");
  }
  std::string label = "C" + std::to_string(n);
  if (n == 1) return PermGroup(1, {}, label);
  auto deg = static_cast<unsigned>(n);
  PermGroup g(deg, {full_cycle(deg, 0, deg)}, label);
  check_order(g, n, label);
  return g;
}

PermGroup dihedral(std::uint64_t order) {
  if (order < 2 || order % 2 != 0 || order / 2 > kMaxDegree) {
    throw std::invalid_argument(
        "dihedral: order must be even, at least 2, and at most " +
        std::to_string(2 * static_cast<std::uint64_t>(kMaxDegree)));
  }
  std::string label = "D" + std::to_string(order);
  if (order == 2) {
    PermGroup g(2, {Perm::parse_cycles("(0,1)", 2)}, label);
    check_order(g, 2, label);
    return g;
  }
  if (order == 4) {
    PermGroup g(4,
                {Perm::parse_cycles("(0,1)", 4), Perm::parse_cycles("(2,3)", 4)},
                label);
    check_order(g, 4, label);
    return g;
  }
  auto n = static_cast<unsigned>(order / 2);
  std::vector<Point> refl(n);
  for (unsigned i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  PermGroup g(n, {full_cycle(n, 0, n), Perm(std::move(refl))}, label);
  check_order(g, order, label);
  return g;
}

PermGroup symmetric(std::uint64_t n) {
  if (n == 0 || n > kMaxFactorialArg) {
    throw std::invalid_argument("symmetric: letters must be in [1, " +
                                std::to_string(kMaxFactorialArg) + "]");
  }
  std::string label = "S" + std::to_string(n);
  if (n == 1) return PermGroup(1, {}, label);
  auto deg = static_cast<unsigned>(n);
  std::vector<Perm> gens{Perm::parse_cycles("(0,1)", deg)};
  if (n > 2) gens.push_back(full_cycle(deg, 0, deg));
  PermGroup g(deg, std::move(gens), label);
  std::uint64_t fact = 1;
  for (std::uint64_t i = 2; i <= n; ++i) fact = checked_mul(fact, i, "factorial");
  check_order(g, fact, label);
  return g;
}

PermGroup alternating(std::uint64_t n) {
  if (n == 0 || n > kMaxFactorialArg) {
    throw std::invalid_argument("alternating: letters must be in [1, " +
                                std::to_string(kMaxFactorialArg) + "]");
  }
  std::string label = "A" + std::to_string(n);
  auto deg = static_cast<unsigned>(n);
  if (n <= 2) return PermGroup(deg, {}, label);
  std::vector<Perm> gens{Perm::parse_cycles("(0,1,2)", deg)};
  if (n > 3) {
    // the even full-support cycle: all letters when n is odd, all but the
    // first when n is even
    gens.push_back(n % 2 == 1 ? full_cycle(deg, 0, deg)
                              : full_cycle(deg, 1, deg - 1));
  }
  PermGroup g(deg, std::move(gens), label);
  std::uint64_t fact = 1;
  for (std::uint64_t i = 2; i <= n; ++i) fact = checked_mul(fact, i, "factorial");
  check_order(g, fact / 2, label);
  return g;
}

PermGroup psl2(unsigned q) {
  const FieldTable& f = FieldTable::get(q);
  std::string label = "PSL2_" + std::to_string(q);
  unsigned deg = q + 1;
  // point 0 is the point at infinity; point 1+e is the field element e
  std::vector<Point> shift(deg), scale(deg), invert(deg);
  unsigned alpha =
      (q % 2 == 0) ? f.primitive : f.mul[f.primitive][f.primitive];
  shift[0] = 0;
  scale[0] = 0;
  invert[0] = 1;  // -1/x sends infinity to 0
  invert[1] = 0;  // ... and 0 to infinity
  for (unsigned e = 0; e < q; ++e) {
    shift[1 + e] = static_cast<Point>(1 + f.add[e][1]);
    scale[1 + e] = static_cast<Point>(1 + f.mul[e][alpha]);
    if (e != 0) invert[1 + e] = static_cast<Point>(1 + f.neg[f.inv[e]]);
  }
  PermGroup g(deg,
              {Perm(std::move(shift)), Perm(std::move(scale)),
               Perm(std::move(invert))},
              label);
  std::uint64_t expected = checked_mul(q, static_cast<std::uint64_t>(q) * q - 1,
                                       "projective group order") /
                           (q % 2 == 0 ? 1 : 2);
  check_order(g, expected, label);
  return g;
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  unsigned da = a.degree();
  unsigned db = b.degree();
  if (da + db > kMaxDegree) {
    throw TooLargeError("direct product degree exceeds " +
                        std::to_string(kMaxDegree));
  }
  unsigned deg = da + db;
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<Point> img(deg);
    for (unsigned i = 0; i < da; ++i) img[i] = g[static_cast<Point>(i)];
    for (unsigned i = da; i < deg; ++i) img[i] = static_cast<Point>(i);
    gens.emplace_back(std::move(img));
  }
  for (const Perm& g : b.generators()) {
    std::vector<Point> img(deg);
    for (unsigned i = 0; i < da; ++i) img[i] = static_cast<Point>(i);
    for (unsigned i = 0; i < db; ++i) {
      img[da + i] = static_cast<Point>(da + g[static_cast<Point>(i)]);
    }
    gens.emplace_back(std::move(img));
  }
  std::string label;
  if (!a.label().empty() && !b.label().empty()) {
    label = "prod(" + a.label() + "," + b.label() + ")";
  }
  PermGroup g(deg, std::move(gens), label);
  check_order(g, checked_mul(a.order(), b.order(), "product order"),
              label.empty() ? "direct product" : label);
  return g;
}

PermGroup metacyclic_frobenius(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p) || p > kMaxDegree) {
    throw std::invalid_argument(
        "frob: first parameter must be a prime at most " +
        std::to_string(kMaxDegree));
  }
  if (k <= 1 || (p - 1) % k != 0) {
    throw std::invalid_argument(
        "frob: second parameter must exceed 1 and divide p-1");
  }
  // find a generator of the multiplicative group mod p, then take the power
  // of exact order k
  std::uint64_t gen = 0;
  for (std::uint64_t c = 2; c < p; ++c) {
    std::uint64_t x = c % p;
    std::uint64_t ord = 1;
    while (x != 1) {
      x = x * c % p;
      ++ord;
    }
    if (ord == p - 1) {
      gen = c;
      break;
    }
  }
  std::uint64_t a = 1;
  for (std::uint64_t i = 0; i < (p - 1) / k; ++i) a = a * gen % p;

  auto deg = static_cast<unsigned>(p);
  std::vector<Point> trans(deg), scale(deg);
  for (unsigned x = 0; x < deg; ++x) {
    trans[x] = static_cast<Point>((x + 1) % p);
    scale[x] = static_cast<Point>(a * x % p);
  }
  std::string label = "frob(" + std::to_string(p) + "," + std::to_string(k) + ")";
  PermGroup g(deg, {Perm(std::move(trans)), Perm(std::move(scale))}, label);
  check_order(g, checked_mul(p, k, "affine group order"), label);
  return g;
}

PermGroup load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open group file: " + path);
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  auto fail = [&](std::size_t lineno, const std::string& msg) -> void {
    throw ParseError("group file " + path + " line " +
                     std::to_string(lineno) + ": " + msg,
                     lineno);
  };
  auto field_on = [&](std::size_t idx, const std::string& key) {
    if (idx >= lines.size() || lines[idx].rfind(key + " ", 0) != 0 ||
        lines[idx].size() <= key.size() + 1) {
      fail(idx + 1, "expected '" + key + " <value>'");
    }
    return lines[idx].substr(key.size() + 1);
  };

  std::string name = field_on(0, "name");
  std::string degree_text = field_on(1, "degree");
  std::string order_text = field_on(2, "order");

  auto parse_uint = [&](const std::string& text, std::size_t lineno,
                        const char* what) -> std::uint64_t {
    std::uint64_t v = 0;
    if (text.empty()) fail(lineno, std::string(what) + " is not a number");
    for (char c : text) {
      if (c < '0' || c > '9') {
        fail(lineno, std::string(what) + " is not a number");
      }
      if (v > (std::uint64_t{1} << 60)) {
        fail(lineno, std::string(what) + " is too large");
      }
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
  };
  std::uint64_t degree = parse_uint(degree_text, 2, "degree");
  if (degree == 0 || degree > kMaxDegree) {
    fail(2, "degree must be in [1, " + std::to_string(kMaxDegree) + "]");
  }
  std::uint64_t order = parse_uint(order_text, 3, "order");
  if (order == 0) fail(3, "order must be positive");

  std::vector<Perm> gens;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    if (lines[i].empty()) fail(i + 1, "unexpected blank line");
    std::string cycles = field_on(i, "gen");
    try {
      gens.push_back(
          Perm::parse_cycles(cycles, static_cast<unsigned>(degree)));
    } catch (const ParseError& e) {
      fail(i + 1, std::string("bad generator: ") + e.what());
    }
  }

  PermGroup g(static_cast<unsigned>(degree), std::move(gens), name);
  if (g.order() != order) {
    throw std::runtime_error(
        "corrupt data in " + path + ": declared order " +
        std::to_string(order) + " but the generators produce order " +
        std::to_string(g.order()));
  }
  return g;
}

// ---------------------------------------------------------------------------
// expression grammar

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_expr();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("group expression error: " + msg, pos_);
  }

  bool take(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::uint64_t number() {
    if (pos_ >= text_.size() || !std::isdigit(
                                    static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a number");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("number too large");
      ++pos_;
    }
    return v;
  }

  GroupSpec parse_expr() {
    GroupSpec spec;
    if (take("prod(")) {
      spec.family = GroupSpec::Family::direct_product;
      spec.parts.push_back(parse_expr());
      expect(',');
      spec.parts.push_back(parse_expr());
      expect(')');
      return spec;
    }
    if (take("frob(")) {
      spec.family = GroupSpec::Family::metacyclic_frobenius;
      spec.a = number();
      expect(',');
      spec.b = number();
      expect(')');
      return spec;
    }
    if (take("PSL2_")) {
      spec.family = GroupSpec::Family::psl2;
      spec.a = number();
      return spec;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view word = text_.substr(start, pos_ - start);
    if (word.empty()) fail("expected a group expression");

    if (pos_ < text_.size() && text_[pos_] == '@') {
      if (!std::isalpha(static_cast<unsigned char>(word[0]))) {
        pos_ = start;
        fail("file alias must start with a letter");
      }
      ++pos_;  // consume '@'
      std::size_t path_start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') {
        ++pos_;
      }
      if (pos_ == path_start) fail("expected a file path after '@'");
      GroupSpec spec_file;
      spec_file.family = GroupSpec::Family::from_file;
      spec_file.label = std::string(word);
      spec_file.path = std::string(text_.substr(path_start, pos_ - path_start));
      return spec_file;
    }

    if (word.size() >= 2 && std::isdigit(static_cast<unsigned char>(word[1]))) {
      std::uint64_t v = 0;
      for (std::size_t i = 1; i < word.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(word[i]))) {
          pos_ = start + i;
          fail("expected digits after the family letter");
        }
        v = v * 10 + static_cast<std::uint64_t>(word[i] - '0');
        if (v > (std::uint64_t{1} << 40)) {
          pos_ = start + 1;
          fail("number too large");
        }
      }
      spec.a = v;
      switch (word[0]) {
        case 'C': spec.family = GroupSpec::Family::cyclic; return spec;
        case 'D': spec.family = GroupSpec::Family::dihedral; return spec;
        case 'S': spec.family = GroupSpec::Family::symmetric; return spec;
        case 'A': spec.family = GroupSpec::Family::alternating; return spec;
        default: break;
      }
    }
    pos_ = start;
    fail("unknown group expression '" + std::string(word) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  return ExprParser(text).parse();
}

std::string GroupSpec::to_string() const {
  switch (family) {
    case Family::cyclic: return "C" + std::to_string(a);
    case Family::dihedral: return "D" + std::to_string(a);
    case Family::symmetric: return "S" + std::to_string(a);
    case Family::alternating: return "A" + std::to_string(a);
    case Family::psl2: return "PSL2_" + std::to_string(a);
    case Family::direct_product:
      return "prod(" + parts.at(0).to_string() + "," +
             parts.at(1).to_string() + ")";
    case Family::metacyclic_frobenius:
      return "frob(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Family::from_file: return label + "@" + path;
  }
  throw std::logic_error("unreachable group family");
}

PermGroup make_group(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupSpec::Family::cyclic: return cyclic(spec.a);
    case GroupSpec::Family::dihedral: return dihedral(spec.a);
    case GroupSpec::Family::symmetric: return symmetric(spec.a);
    case GroupSpec::Family::alternating: return alternating(spec.a);
    case GroupSpec::Family::psl2: {
      if (spec.a > 1u << 20) {
        throw std::invalid_argument("psl2: parameter out of range");
      }
      return psl2(static_cast<unsigned>(spec.a));
    }
    case GroupSpec::Family::direct_product: {
      PermGroup left = make_group(spec.parts.at(0));
      PermGroup right = make_group(spec.parts.at(1));
      PermGroup g = direct_product(left, right);
      g.set_label(spec.to_string());
      return g;
    }
    case GroupSpec::Family::metacyclic_frobenius:
      return metacyclic_frobenius(spec.a, spec.b);
    case GroupSpec::Family::from_file: {
      PermGroup g = load_group(spec.path);
      g.set_label(spec.to_string());
      return g;
    }
  }
  throw std::logic_error("unreachable group family");
}

PermGroup make_group(std::string_view expr) {
  return make_group(GroupSpec::parse(expr));
}

std::vector<std::string> catalog_lines() {
  std::vector<std::string> out = {
      "C<n>        cyclic group of order n",
      "D<n>        dihedral group of order n (n even, e.g. D64)",
      "S<n>        symmetric group on n letters (n <= 20)",
      "A<n>        alternating group on n letters (n <= 20)",
      "PSL2_<q>    projective special linear group over GF(q), q in:",
  };
  std::string qs = "            ";
  for (unsigned q : FieldTable::supported()) qs += " " + std::to_string(q);
  out.push_back(qs);
  out.push_back("prod(a,b)   direct product of two expressions");
  out.push_back("frob(p,k)   metacyclic group C_p x| C_k (k | p-1, k > 1)");
  out.push_back("NAME@PATH   group data file (see data/*.grp)");
  return out;
}

}  // namespace dsgrp

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "dsgrp/catalog.hpp"
#include "dsgrp/field.hpp"
#include "dsgrp/group_ops.hpp"
#include "test_util.hpp"

using namespace dsgrp;

namespace {

// writes a temporary group file and cleans it up on scope exit
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content)
      : path("test_tmp_group_file.grp") {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("field axioms hold in every table") {
  for (unsigned q : FieldTable::supported()) {
    CAPTURE(q);
    const FieldTable& f = FieldTable::get(q);
    REQUIRE(f.q == q);
    unsigned stride = q > 16 ? 3 : 1;  // sample triples for the larger fields
    for (unsigned a = 0; a < q; a += stride) {
      for (unsigned b = 0; b < q; b += stride) {
        CHECK(f.add[a][b] == f.add[b][a]);
        CHECK(f.mul[a][b] == f.mul[b][a]);
        CHECK(f.add[a][f.neg[a]] == 0);
        if (a != 0) CHECK(f.mul[a][f.inv[a]] == 1);
        for (unsigned c = 0; c < q; c += stride) {
          CHECK(f.add[f.add[a][b]][c] == f.add[a][f.add[b][c]]);
          CHECK(f.mul[f.mul[a][b]][c] == f.mul[a][f.mul[b][c]]);
          CHECK(f.mul[a][f.add[b][c]] == f.add[f.mul[a][b]][f.mul[a][c]]);
        }
      }
    }
    // identity rows
    for (unsigned a = 0; a < q; ++a) {
      CHECK(f.add[a][0] == a);
      CHECK(f.mul[a][1] == a);
      CHECK(f.mul[a][0] == 0);
    }
  }
}

TEST_CASE("multiplicative groups are cyclic with the found primitive") {
  for (unsigned q : FieldTable::supported()) {
    CAPTURE(q);
    const FieldTable& f = FieldTable::get(q);
    unsigned x = f.primitive;
    unsigned ord = 1;
    while (x != 1) {
      x = f.mul[x][f.primitive];
      ++ord;
    }
    CHECK(ord == q - 1);
  }
}

TEST_CASE("the p-power map is additive (Frobenius endomorphism)") {
  for (unsigned q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    CAPTURE(q);
    const FieldTable& f = FieldTable::get(q);
    for (unsigned a = 0; a < q; ++a) {
      for (unsigned b = 0; b < q; ++b) {
        CHECK(f.pow(f.add[a][b], f.p) == f.add[f.pow(a, f.p)][f.pow(b, f.p)]);
      }
    }
  }
}

TEST_CASE("unsupported field sizes are refused with the supported list") {
  for (unsigned q : {2u, 3u, 6u, 10u, 12u, 49u}) {
    CAPTURE(q);
    try {
      FieldTable::get(q);
      FAIL("expected a refusal");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("supported sizes") !=
            std::string::npos);
      CHECK(std::string(e.what()).find("41") != std::string::npos);
    }
  }
}

TEST_CASE("cyclic groups") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(12).order() == 12);
  CHECK(cyclic(12).degree() == 12);
  CHECK(cyclic(12).label() == "C12");
  CHECK(is_abelian(cyclic(97)));
  CHECK(abelian_invariants(cyclic(12)) == std::vector<std::uint64_t>{3, 4});
  CHECK_THROWS_AS(cyclic(0), std::invalid_argument);
}

TEST_CASE("dihedral groups") {
  CHECK(dihedral(2).order() == 2);
  CHECK(dihedral(4).order() == 4);
  CHECK(abelian_invariants(dihedral(4)) == std::vector<std::uint64_t>{2, 2});
  PermGroup d64 = dihedral(64);
  CHECK(d64.order() == 64);
  CHECK(d64.degree() == 32);
  CHECK(d64.label() == "D64");
  PermGroup derived = derived_subgroup(d64);
  CHECK(derived.order() == 16);
  CHECK(is_abelian(derived));
  CHECK(abelian_invariants(derived) == std::vector<std::uint64_t>{16});
  CHECK_FALSE(is_abelian(dihedral(10)));
  CHECK_THROWS_AS(dihedral(63), std::invalid_argument);
  CHECK_THROWS_AS(dihedral(0), std::invalid_argument);
}

TEST_CASE("symmetric and alternating groups") {
  CHECK(symmetric(1).order() == 1);
  CHECK(symmetric(2).order() == 2);
  CHECK(symmetric(6).order() == 720);
  CHECK(alternating(2).order() == 1);
  CHECK(alternating(3).order() == 3);
  CHECK(alternating(5).order() == 60);
  CHECK(alternating(6).order() == 360);
  CHECK(alternating(8).order() == 20160);  // even-letter generator variant
  CHECK(symmetric(10).order() == 3628800);
  // A_n really is the even subgroup: no transposition is a member
  CHECK_FALSE(alternating(5).contains(Perm::parse_cycles("(0,1)", 5)));
  CHECK(subgroup_of(alternating(6), symmetric(6)));
  CHECK_THROWS_AS(symmetric(21), std::invalid_argument);
  CHECK_THROWS_AS(alternating(21), std::invalid_argument);
}

TEST_CASE("projective groups over every supported field") {
  struct Case {
    unsigned q;
    std::uint64_t order;
  };
  for (const auto& c : std::vector<Case>{{4, 60},
                                         {5, 60},
                                         {7, 168},
                                         {8, 504},
                                         {9, 360},
                                         {11, 660},
                                         {13, 1092},
                                         {16, 4080},
                                         {17, 2448},
                                         {25, 7800},
                                         {27, 9828},
                                         {41, 34440}}) {
    CAPTURE(c.q);
    PermGroup g = psl2(c.q);
    CHECK(g.order() == c.order);
    CHECK(g.degree() == c.q + 1);
    CHECK(is_perfect(g));
  }
  CHECK_THROWS_AS(psl2(6), std::invalid_argument);
  CHECK_THROWS_AS(psl2(3), std::invalid_argument);
}

TEST_CASE("direct products") {
  PermGroup g = direct_product(alternating(5), cyclic(7));
  CHECK(g.order() == 420);
  CHECK(g.degree() == 12);
  CHECK(g.label() == "prod(A5,C7)");

  // the derived subgroup of a product is the product of derived subgroups
  for (const char* expr : {"prod(S3,C4)", "prod(D8,S3)", "prod(A4,C2)"}) {
    CAPTURE(expr);
    GroupSpec spec = GroupSpec::parse(expr);
    PermGroup left = make_group(spec.parts.at(0));
    PermGroup right = make_group(spec.parts.at(1));
    PermGroup whole = direct_product(left, right);
    PermGroup factorwise =
        direct_product(derived_subgroup(left), derived_subgroup(right));
    CHECK(same_subgroup(derived_subgroup(whole), factorwise));
  }

  PermGroup with_trivial = direct_product(cyclic(1), symmetric(3));
  CHECK(with_trivial.order() == 6);
}

TEST_CASE("metacyclic groups") {
  PermGroup f73 = metacyclic_frobenius(7, 3);
  CHECK(f73.order() == 21);
  CHECK(f73.degree() == 7);
  CHECK(derived_subgroup(f73).order() == 7);
  PermGroup f54 = metacyclic_frobenius(5, 4);
  CHECK(f54.order() == 20);
  CHECK(derived_subgroup(f54).order() == 5);
  CHECK_THROWS_AS(metacyclic_frobenius(7, 1), std::invalid_argument);
  CHECK_THROWS_AS(metacyclic_frobenius(7, 4), std::invalid_argument);
  CHECK_THROWS_AS(metacyclic_frobenius(8, 7), std::invalid_argument);
}

TEST_CASE("group files load with order self-check") {
  struct Case {
    const char* path;
    unsigned degree;
    std::uint64_t order;
  };
  for (const auto& c : std::vector<Case>{{"data/psl33.grp", 13, 5616},
                                         {"data/u33.grp", 28, 6048},
                                         {"data/sz8.grp", 65, 29120},
                                         {"data/u42.grp", 45, 25920}}) {
    CAPTURE(c.path);
    PermGroup g = load_group(c.path);
    CHECK(g.degree() == c.degree);
    CHECK(g.order() == c.order);
  }
  CHECK(load_group("data/sz8.grp").label() == "Sz(8)");
}

TEST_CASE("group file errors") {
  CHECK_THROWS_AS(load_group("data/no_such_file.grp"), std::runtime_error);

  {
    TempFile f("name X\ndegree 3\norder 6\ngen (0,1)\ngen (0,1,2)\n");
    CHECK(load_group(f.path).order() == 6);
  }
  {
    TempFile f("degree 3\norder 6\ngen (0,1)\n");
    try {
      load_group(f.path);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position == 1);
      CHECK(std::string(e.what()).find("name") != std::string::npos);
    }
  }
  {
    TempFile f("name X\ndegree zero\norder 6\ngen (0,1)\n");
    CHECK_THROWS_AS(load_group(f.path), ParseError);
  }
  {
    TempFile f("name X\ndegree 3\norder 6\ngen (0,1)(0,2)\n");
    try {
      load_group(f.path);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position == 4);  // the offending line
      CHECK(std::string(e.what()).find("bad generator") != std::string::npos);
    }
  }
  {
    // declared order does not match the generators
    TempFile f("name X\ndegree 3\norder 5\ngen (0,1)\ngen (0,1,2)\n");
    try {
      load_group(f.path);
      FAIL("expected a corrupt-data error");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("corrupt data") != std::string::npos);
    }
  }
}

TEST_CASE("expressions parse and print losslessly") {
  for (const char* expr :
       {"A5", "S6", "C12", "D64", "PSL2_9", "SZ8@data/sz8.grp",
        "prod(A5,C7)", "frob(7,3)", "prod(prod(A5,C7),C2)",
        "prod(SZ8@data/sz8.grp,C2)"}) {
    CAPTURE(expr);
    CHECK(GroupSpec::parse(expr).to_string() == expr);
  }
}

TEST_CASE("expressions build the right groups") {
  CHECK(make_group("A5").order() == 60);
  CHECK(make_group("S6").order() == 720);
  CHECK(make_group("C12").order() == 12);
  CHECK(make_group("D64").order() == 64);
  CHECK(make_group("PSL2_9").order() == 360);
  CHECK(make_group("prod(A5,C7)").order() == 420);
  CHECK(make_group("frob(7,3)").order() == 21);
  PermGroup sz8 = make_group("SZ8@data/sz8.grp");
  CHECK(sz8.order() == 29120);
  CHECK(sz8.label() == "SZ8@data/sz8.grp");
}

TEST_CASE("expression errors carry positions") {
  auto expect_fail = [](const char* text) {
    CAPTURE(text);
    CHECK_THROWS_AS(GroupSpec::parse(text), ParseError);
  };
  expect_fail("");
  expect_fail("Q5");
  expect_fail("A");
  expect_fail("prod(A5");
  expect_fail("prod(A5,)");
  expect_fail("frob(7)");
  expect_fail("A5 ");
  expect_fail("A5,C2");
  expect_fail("@data/x.grp");
  expect_fail("X@");
  try {
    GroupSpec::parse("prod(A5,Q7)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 8);
  }
}

TEST_CASE("catalog listing covers every grammar form") {
  auto lines = catalog_lines();
  std::string all;
  for (const auto& l : lines) all += l + "\n";
  for (const char* needle :
       {"C<n>", "D<n>", "S<n>", "A<n>", "PSL2_", "prod", "frob", "@"}) {
    CAPTURE(needle);
    CHECK(all.find(needle) != std::string::npos);
  }
}

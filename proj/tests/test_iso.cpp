#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "dsgrp/catalog.hpp"
#include "dsgrp/iso.hpp"
#include "dsgrp/subgroups.hpp"
#include "test_util.hpp"

using namespace dsgrp;

namespace {

PermGroup quaternion8() {
  PermGroup q = testutil::make_group(
      8, {"(0,1,2,3)(4,5,6,7)", "(0,4,2,6)(1,7,3,5)"}, "Q8");
  REQUIRE(q.order() == 8);
  return q;
}

PermGroup dicyclic3() {
  // a^6 = 1, b^2 = a^3, b^-1 a b = a^-1, acting on its own 12 elements
  // (points 0..5 are a^k, points 6..11 are a^k b, both by right translation).
  PermGroup g = testutil::make_group(
      12, {"(0,1,2,3,4,5)(6,11,10,9,8,7)", "(0,6,3,9)(1,7,4,10)(2,8,5,11)"},
      "Dic3");
  REQUIRE(g.order() == 12);
  REQUIRE(!is_abelian(g));
  return g;
}

}  // namespace

TEST_CASE("ground truth partition for groups of order up to 64") {
  // Pairs (group, tag): two entries are isomorphic exactly when tags match.
  std::vector<std::pair<PermGroup, std::string>> cases;
  auto add = [&](const char* expr, const char* tag) {
    cases.emplace_back(make_group(expr), tag);
  };
  add("C1", "1");
  add("C2", "C2");
  add("C3", "C3");
  add("C4", "C4");
  add("prod(C2,C2)", "V4");
  add("C6", "C6");
  add("prod(C3,C2)", "C6");
  add("S3", "S3");
  add("D6", "S3");
  add("C8", "C8");
  add("prod(C4,C2)", "C4xC2");
  add("prod(C2,prod(C2,C2))", "E8");
  add("D8", "D8");
  cases.emplace_back(quaternion8(), "Q8");
  add("C12", "C12");
  add("prod(C4,C3)", "C12");
  add("prod(C6,C2)", "C6xC2");
  add("D12", "D12");
  add("prod(S3,C2)", "D12");
  add("A4", "A4");
  cases.emplace_back(dicyclic3(), "Dic3");
  add("C16", "C16");
  add("D16", "D16");
  add("frob(5,4)", "F20");
  add("D20", "D20");
  add("prod(D10,C2)", "D20");
  add("frob(7,3)", "F21");
  add("C21", "C21");
  add("prod(C7,C3)", "C21");
  add("S4", "S4");
  add("D24", "D24");
  add("prod(A4,C2)", "A4xC2");
  add("prod(D8,C2)", "D8xC2");
  cases.emplace_back(
      testutil::make_group(9, {"(0,1,2,3)(4,5,6,7)", "(0,4,2,6)(1,7,3,5)"},
                           "Q8pad"),
      "Q8");  // the same group acting on a padded point set
  add("A5", "A5");
  add("PSL2_4", "A5");
  add("PSL2_5", "A5");
  add("C64", "C64");
  add("D64", "D64");

  std::size_t checked = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    for (std::size_t j = i + 1; j < cases.size(); ++j) {
      bool expect = cases[i].second == cases[j].second;
      INFO("pair " << cases[i].first.label() << " / "
                   << cases[j].first.label() << " expect "
                   << (expect ? "iso" : "non-iso"));
      CHECK(is_isomorphic(cases[i].first, cases[j].first) == expect);
      ++checked;
    }
  }
  REQUIRE(checked == cases.size() * (cases.size() - 1) / 2);

  std::vector<PermGroup> groups;
  for (auto& [g, tag] : cases) groups.push_back(g);
  IsoClasses classes = classify_groups(groups);
  std::map<std::string, std::size_t> tag_to_class;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    auto [it, fresh] =
        tag_to_class.emplace(cases[i].second, classes.class_of[i]);
    CHECK(it->second == classes.class_of[i]);
    if (fresh) CHECK(classes.rep[classes.class_of[i]] == i);
  }
  CHECK(classes.count() == tag_to_class.size());
}

TEST_CASE("isomorphism is blind to degree and presentation") {
  PermGroup a5 = make_group("A5");
  PermGroup psl24 = make_group("PSL2_4");  // degree 5
  PermGroup psl25 = make_group("PSL2_5");  // degree 6
  CHECK(a5.degree() != psl25.degree());
  CHECK(is_isomorphic(a5, psl25));
  CHECK(is_isomorphic(psl24, psl25));
  CHECK(!is_isomorphic(a5, make_group("PSL2_9")));
  CHECK(!is_isomorphic(a5, make_group("C60")));
}

TEST_CASE("the two A5 classes inside PSL(2,9) are abstractly isomorphic") {
  PermGroup g = make_group("PSL2_9");
  Lattice lat = all_subgroups(g);
  std::vector<std::size_t> order60_reps;
  for (std::size_t cid = 0; cid < lat.class_count(); ++cid) {
    if (lat.subs[lat.class_rep[cid]].order == 60) {
      order60_reps.push_back(lat.class_rep[cid]);
    }
  }
  REQUIRE(order60_reps.size() == 2);  // two conjugacy classes of A5
  PermGroup h1 = subgroup_group(g, lat.subs[order60_reps[0]]);
  PermGroup h2 = subgroup_group(g, lat.subs[order60_reps[1]]);
  CHECK(lat.subs[order60_reps[0]].elems != lat.subs[order60_reps[1]].elems);
  CHECK(is_isomorphic(h1, h2));
  CHECK(is_isomorphic(h1, make_group("A5")));
}

TEST_CASE("fingerprints order and separate") {
  IsoFingerprint d8 = iso_fingerprint(make_group("D8"));
  IsoFingerprint q8 = iso_fingerprint(quaternion8());
  CHECK(d8 != q8);  // 5 involutions vs 1
  CHECK(d8.order == 8);
  CHECK(!d8.abelian);
  CHECK(d8.center_order == 2);
  CHECK(d8.derived_orders == std::vector<std::uint64_t>{8, 2, 1});
  IsoFingerprint v4 = iso_fingerprint(make_group("prod(C2,C2)"));
  CHECK(v4.abelian);
  CHECK(v4.abelian_inv == std::vector<std::uint64_t>{2, 2});
  CHECK(iso_fingerprint(make_group("C4")) != v4);
}

TEST_CASE("simplicity recognizer") {
  CHECK(is_simple(make_group("A5")));
  CHECK(is_simple(make_group("PSL2_7")));
  CHECK(is_simple(make_group("C7")));  // prime cyclic
  CHECK(!is_simple(make_group("C6")));
  CHECK(!is_simple(make_group("A4")));
  CHECK(!is_simple(make_group("S5")));
  CHECK(!is_simple(make_group("C1")));
  CHECK(!is_simple(make_group("frob(7,3)")));
}

TEST_CASE("structural names for reports") {
  CHECK(describe_group(make_group("C1")) == "1");
  CHECK(describe_group(make_group("C2")) == "C2");
  CHECK(describe_group(make_group("prod(C2,C2)")) == "C2xC2");
  CHECK(describe_group(make_group("prod(C2,C12)")) == "C2xC12");
  CHECK(describe_group(make_group("C12")) == "C12");
  CHECK(describe_group(make_group("S3")) == "D6");
  CHECK(describe_group(make_group("D8")) == "D8");
  CHECK(describe_group(quaternion8()) == "Q8");
  CHECK(describe_group(make_group("A4")) == "A4");
  CHECK(describe_group(make_group("S4")) == "S4");
  CHECK(describe_group(make_group("A5")) == "A5");
  CHECK(describe_group(make_group("PSL2_5")) == "A5");
  CHECK(describe_group(make_group("PSL2_7")) == "PSL(2,7)");
  CHECK(describe_group(make_group("PSL2_9")) == "A6");
  CHECK(describe_group(make_group("frob(5,4)")) ==
        "order 20 (derived order 5)");
  CHECK(describe_group(make_group("D64")) == "D64");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "dsgrp/catalog.hpp"
#include "dsgrp/group_ops.hpp"
#include "dsgrp/subgroups.hpp"
#include "oracles.hpp"

using namespace dsgrp;

namespace {

std::set<std::vector<std::uint32_t>> lattice_sets(const Lattice& lat) {
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& rec : lat.subs) out.insert(rec.elems);
  return out;
}

std::map<std::uint64_t, std::size_t> order_histogram(const Lattice& lat) {
  std::map<std::uint64_t, std::size_t> out;
  for (const auto& rec : lat.subs) out[rec.order] += 1;
  return out;
}

void check_internal_consistency(const PermGroup& g, const Lattice& lat) {
  const ElementTable& table = g.elements();
  std::size_t class_total = 0;
  for (std::size_t cid = 0; cid < lat.class_count(); ++cid) {
    class_total += lat.class_size[cid];
    REQUIRE(lat.subs[lat.class_rep[cid]].class_id == cid);
  }
  REQUIRE(class_total == lat.subs.size());
  for (std::size_t i = 0; i < lat.subs.size(); ++i) {
    const auto& rec = lat.subs[i];
    REQUIRE(rec.order == rec.elems.size());
    REQUIRE(g.order() % rec.order == 0);  // Lagrange
    REQUIRE(std::is_sorted(rec.elems.begin(), rec.elems.end()));
    REQUIRE(subgroup_group(g, rec).order() == rec.order);
    if (i > 0) {
      const auto& prev = lat.subs[i - 1];
      bool ordered = prev.order < rec.order ||
                     (prev.order == rec.order &&
                      (prev.fingerprint < rec.fingerprint ||
                       (prev.fingerprint == rec.fingerprint &&
                        prev.elems < rec.elems)));
      REQUIRE(ordered);
    }
  }
  // Product closure of every small subgroup, element by element.
  for (const auto& rec : lat.subs) {
    if (rec.order > 500) continue;
    std::set<std::uint32_t> in(rec.elems.begin(), rec.elems.end());
    for (std::uint32_t a : rec.elems) {
      for (std::uint32_t b : rec.elems) {
        std::uint32_t ab = table.at(compose(table.elems[a], table.elems[b]));
        REQUIRE(in.count(ab) == 1);
      }
    }
  }
}

void check_against_oracle(const PermGroup& g, bool with_triples) {
  INFO("group " << g.label() << " order " << g.order());
  Lattice lat = all_subgroups(g);
  check_internal_consistency(g, lat);
  auto naive = oracles::naive_subgroup_sets(g, with_triples);
  REQUIRE(lattice_sets(lat) == naive);
  REQUIRE(oracles::brute_subgroup_class_count(g, naive) == lat.class_count());
}

}  // namespace

TEST_CASE("full enumeration matches the naive pair/triple oracle") {
  check_against_oracle(make_group("S3"), true);
  check_against_oracle(make_group("C12"), true);
  check_against_oracle(make_group("D8"), true);
  check_against_oracle(make_group("D12"), true);
  check_against_oracle(make_group("frob(7,3)"), true);
  check_against_oracle(make_group("frob(5,4)"), true);
  check_against_oracle(make_group("S4"), true);
  check_against_oracle(make_group("A5"), true);
  check_against_oracle(make_group("D64"), false);
  check_against_oracle(make_group("S5"), false);
}

TEST_CASE("subgroup counts and class counts of standard groups") {
  Lattice s3 = all_subgroups(make_group("S3"));
  CHECK(s3.subs.size() == 6);
  CHECK(s3.class_count() == 4);

  Lattice c12 = all_subgroups(make_group("C12"));
  CHECK(c12.subs.size() == 6);  // one per divisor
  CHECK(c12.class_count() == 6);

  Lattice d64 = all_subgroups(make_group("D64"));
  CHECK(d64.subs.size() == 69);
  CHECK(d64.class_count() == 17);

  Lattice a5 = all_subgroups(make_group("A5"));
  CHECK(a5.subs.size() == 59);
  CHECK(a5.class_count() == 9);
  std::map<std::uint64_t, std::size_t> expected{{1, 1},  {2, 15}, {3, 10},
                                                {4, 5},  {5, 6},  {6, 10},
                                                {10, 6}, {12, 5}, {60, 1}};
  CHECK(order_histogram(a5) == expected);

  Lattice s5 = all_subgroups(make_group("S5"));
  CHECK(s5.subs.size() == 156);
  CHECK(s5.class_count() == 19);
}

TEST_CASE("serial and parallel enumeration produce identical lattices") {
  for (const char* name : {"A5", "S5", "D64"}) {
    PermGroup g = make_group(name);
    Lattice a = all_subgroups(g, Limits{}, par::ExecMode::serial);
    Lattice b = all_subgroups(g, Limits{}, par::ExecMode::parallel);
    REQUIRE(a.subs.size() == b.subs.size());
    for (std::size_t i = 0; i < a.subs.size(); ++i) {
      REQUIRE(a.subs[i].elems == b.subs[i].elems);
      REQUIRE(a.subs[i].fingerprint == b.subs[i].fingerprint);
      REQUIRE(a.subs[i].class_id == b.subs[i].class_id);
    }
    REQUIRE(a.class_rep == b.class_rep);
    REQUIRE(a.class_size == b.class_size);
  }
}

TEST_CASE("class members are genuinely conjugate and covariant under derived") {
  PermGroup a5 = make_group("A5");
  const ElementTable& table = a5.elements();
  Lattice lat = all_subgroups(a5);
  for (std::size_t cid = 0; cid < lat.class_count(); ++cid) {
    const SubgroupRecord& rep = lat.subs[lat.class_rep[cid]];
    for (const auto& rec : lat.subs) {
      if (rec.class_id != cid || rec.elems == rep.elems) continue;
      // find a conjugator by scanning the parent
      const Perm* conjugator = nullptr;
      for (std::size_t e = 0; e < table.size() && !conjugator; ++e) {
        std::vector<std::uint32_t> image(rep.elems.size());
        for (std::size_t i = 0; i < rep.elems.size(); ++i) {
          image[i] =
              table.at(table.elems[rep.elems[i]].conjugated_by(table.elems[e]));
        }
        std::sort(image.begin(), image.end());
        if (image == rec.elems) conjugator = &table.elems[e];
      }
      REQUIRE(conjugator != nullptr);
      // derived(H^c) == derived(H)^c
      PermGroup h = subgroup_group(a5, rep);
      PermGroup k = subgroup_group(a5, rec);
      PermGroup dh = derived_subgroup(h);
      PermGroup dk = derived_subgroup(k);
      std::vector<Perm> mapped;
      for (const Perm& p : dh.generators()) {
        mapped.push_back(p.conjugated_by(*conjugator));
      }
      PermGroup dh_conj(a5.degree(), mapped);
      REQUIRE(same_subgroup(dh_conj, dk));
    }
  }
}

TEST_CASE("pi witnesses: normalizer elements produce nontrivial p-group derived") {
  PermGroup a5 = make_group("A5");
  PiWitnessReport rep = pi_witnesses(a5);
  REQUIRE(rep.p_nilpotent.empty());
  REQUIRE(rep.witnesses.size() == 3);
  std::map<std::uint64_t, std::uint64_t> derived_orders;
  for (const auto& w : rep.witnesses) {
    derived_orders[w.prime] = w.derived.order();
    CHECK(!w.derived.is_trivial());
    CHECK(p_part(w.derived.order(), w.prime) == w.derived.order());
    CHECK(subgroup_of(w.derived, w.sylow));
    CHECK(subgroup_of(w.sylow, w.subgroup));
    CHECK(w.subgroup.contains(w.x));
  }
  CHECK(derived_orders[2] == 4);  // V4
  CHECK(derived_orders[3] == 3);
  CHECK(derived_orders[5] == 5);
  CHECK(abelian_invariants(rep.witnesses[0].derived) ==
        std::vector<std::uint64_t>{2, 2});

  PermGroup s4 = make_group("S4");
  PiWitnessReport s4rep = pi_witnesses(s4);
  CHECK(s4rep.p_nilpotent.empty());
  CHECK(s4rep.witnesses.size() == 2);

  PermGroup c6 = make_group("C6");
  PiWitnessReport c6rep = pi_witnesses(c6);
  CHECK(c6rep.witnesses.empty());
  CHECK(c6rep.p_nilpotent == std::vector<std::uint64_t>{2, 3});

  PermGroup d10 = make_group("D10");
  PiWitnessReport d10rep = pi_witnesses(d10);
  CHECK(d10rep.p_nilpotent == std::vector<std::uint64_t>{2});
  REQUIRE(d10rep.witnesses.size() == 1);
  CHECK(d10rep.witnesses[0].prime == 5);
  CHECK(d10rep.witnesses[0].derived.order() == 5);
}

TEST_CASE("dihedral witness search") {
  PermGroup a5 = make_group("A5");
  auto d10 = dihedral_witness(a5, 5);
  REQUIRE(d10.has_value());
  CHECK(d10->rotation.order() == 5);
  CHECK(d10->reflection.order() == 2);
  CHECK(d10->rotation.conjugated_by(d10->reflection) ==
        d10->rotation.inverse());
  CHECK(d10->subgroup.order() == 10);

  auto v4 = dihedral_witness(a5, 2);
  REQUIRE(v4.has_value());
  CHECK(v4->subgroup.order() == 4);

  CHECK(!dihedral_witness(a5, 4).has_value());   // no order-4 elements
  CHECK(!dihedral_witness(make_group("C12"), 3).has_value());  // abelian

  auto d8 = dihedral_witness(make_group("S4"), 4);
  REQUIRE(d8.has_value());
  CHECK(d8->subgroup.order() == 8);

  CHECK_THROWS_AS(dihedral_witness(a5, 1), std::invalid_argument);
}

TEST_CASE("frobenius complement check: malnormality") {
  PermGroup f21 = make_group("frob(7,3)");
  PermGroup h3(f21.degree(), {f21.generators()[1]});
  REQUIRE(h3.order() == 3);
  CHECK(frobenius_complement_check(f21, h3));

  PermGroup f20 = make_group("frob(5,4)");
  PermGroup h4(f20.degree(), {f20.generators()[1]});
  REQUIRE(h4.order() == 4);
  CHECK(frobenius_complement_check(f20, h4));

  // D8 inside S4 contains a normal V4 of S4: badly non-malnormal.
  PermGroup s4 = make_group("S4");
  auto d8 = dihedral_witness(s4, 4);
  REQUIRE(d8.has_value());
  CHECK(!frobenius_complement_check(s4, d8->subgroup));

  // A D10 in A5 shares involutions with some conjugate.
  PermGroup a5 = make_group("A5");
  auto d10 = dihedral_witness(a5, 5);
  REQUIRE(d10.has_value());
  CHECK(!frobenius_complement_check(a5, d10->subgroup));

  CHECK_THROWS_AS(frobenius_complement_check(a5, a5), std::invalid_argument);
  PermGroup triv(a5.degree(), std::vector<Perm>{});
  CHECK_THROWS_AS(frobenius_complement_check(a5, triv), std::invalid_argument);
}

TEST_CASE("suzuki witness chain on the order-29120 group") {
  PermGroup sz8 = load_group("data/sz8.grp");
  SuzukiWitnesses w = suzuki_witnesses(sz8);
  CHECK(w.f.order() == 64);
  CHECK(w.zf.order() == 8);
  CHECK(w.t.order() == 448);
  CHECK(w.h.order() == 7);
  CHECK(w.s.order() == 56);
  CHECK(w.s_derived.order() == 8);
  CHECK(w.t_derived.order() == 64);
  CHECK(same_subgroup(w.s_derived, w.zf));
  CHECK(same_subgroup(w.t_derived, w.f));
  CHECK(abelian_invariants(w.zf) == std::vector<std::uint64_t>{2, 2, 2});
  CHECK(subgroup_of(w.zf, w.f));
  CHECK(subgroup_of(w.h, w.t));
  CHECK(frobenius_complement_check(w.t, w.h));

  CHECK_THROWS_AS(suzuki_witnesses(make_group("A5")), std::invalid_argument);
}

TEST_CASE("enumeration refuses oversized groups by naming the threshold") {
  PermGroup s8 = make_group("S8");  // order 40320
  try {
    all_subgroups(s8);
    FAIL("expected a size refusal");
  } catch (const TooLargeError& e) {
    std::string msg = e.what();
    CHECK(msg.find("lattice_threshold") != std::string::npos);
    CHECK(msg.find("witness") != std::string::npos);
  }
}

TEST_CASE("trivial group has exactly one subgroup") {
  PermGroup c1 = make_group("C1");
  Lattice lat = all_subgroups(c1);
  REQUIRE(lat.subs.size() == 1);
  CHECK(lat.subs[0].order == 1);
  CHECK(lat.class_count() == 1);
}

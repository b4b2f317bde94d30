#include <catch_amalgamated.hpp>

#include "oracle/naive.hpp"
#include "sbp/catalog.hpp"
#include "sbp/census.hpp"
#include "sbp/monoid.hpp"
#include "sbp/pointed_map.hpp"

using namespace sbp;

TEST_CASE("validate_monoid accepts a semilattice and keeps labels") {
  auto m = validate_monoid(RawMonoid{"X", {"0", "s"}, 0, {{0, 1}, {1, 1}}});
  REQUIRE(m);
  CHECK(m->size() == 2);
  CHECK(m->label(1) == "s");
  CHECK(m->op(1, 1) == 1);
  CHECK(m->find("s") == std::optional<index_t>(1));
  CHECK(m->is_commutative());
  CHECK_FALSE(m->is_group());
}

TEST_CASE("validate_monoid reports the first defect") {
  SECTION("empty") {
    auto m = validate_monoid(RawMonoid{"E", {}, 0, {}});
    CHECK(m.error().kind == "MalformedTable");
  }
  SECTION("ragged") {
    auto m = validate_monoid(RawMonoid{"R", {}, 0, {{0, 1}, {1}}});
    CHECK(m.error().kind == "MalformedTable");
  }
  SECTION("entry out of range") {
    auto m = validate_monoid(RawMonoid{"R", {}, 0, {{0, 1}, {1, 2}}});
    CHECK(m.error().kind == "IndexOutOfRange");
  }
  SECTION("negative entry") {
    auto m = validate_monoid(RawMonoid{"R", {}, 0, {{0, 1}, {1, -1}}});
    CHECK(m.error().kind == "IndexOutOfRange");
  }
  SECTION("identity out of range") {
    auto m = validate_monoid(RawMonoid{"R", {}, 5, {{0, 1}, {1, 0}}});
    CHECK(m.error().kind == "IndexOutOfRange");
    CHECK(m.error().which == "identity");
  }
  SECTION("identity law") {
    auto m = validate_monoid(RawMonoid{"R", {}, 0, {{0, 0}, {1, 1}}});
    CHECK(m.error().kind == "IdentityLawFails");
  }
  SECTION("associativity, first triple in scan order") {
    // 1+1 = 2, 2+1 = 0, but 1+(1+1) = 1+2 = 1.
    auto m = validate_monoid(
        RawMonoid{"R", {}, 0, {{0, 1, 2}, {1, 2, 1}, {2, 0, 2}}});
    REQUIRE_FALSE(m);
    CHECK(m.error().kind == "NonAssociative");
    CHECK(m.error().witness == std::vector<index_t>{1, 1, 1});
  }
  SECTION("duplicate labels") {
    auto m = validate_monoid(RawMonoid{"R", {"a", "a"}, 0, {{0, 1}, {1, 0}}});
    CHECK(m.error().kind == "MalformedTable");
  }
}

TEST_CASE("identity need not sit at index 0") {
  auto m = validate_monoid(RawMonoid{"Y", {"a", "e"}, 1, {{1, 0}, {0, 1}}});
  REQUIRE(m);
  CHECK(m->identity() == 1);
  CHECK(m->is_group());
}

TEST_CASE("cyclic groups and direct products") {
  auto Z4 = cyclic_group(4);
  CHECK(Z4.name() == "Z4");
  CHECK(Z4.op(3, 2) == 1);
  CHECK(Z4.is_group());
  auto P = direct_product(cyclic_group(2), cyclic_group(3));
  REQUIRE(P.size() == 6);
  // (x, b) at b * |X| + x: (1, 2) + (1, 2) = (0, 1)
  CHECK(P.op(2 * 2 + 1, 2 * 2 + 1) == 1 * 2 + 0);
  CHECK(are_isomorphic(P, cyclic_group(6)));
}

TEST_CASE("monoids up to isomorphism by order") {
  // Counts of monoids of order n up to isomorphism (not anti-isomorphism).
  std::vector<std::size_t> const expected{1, 2, 7, 35};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    auto ms = enumerate_monoids(n);
    CHECK(ms.size() == expected[n - 1]);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        CHECK_FALSE(are_isomorphic(ms[i], ms[j]));
      }
    }
  }
}

TEST_CASE("census agrees with brute force at order 3") {
  // Every labelled monoid with identity 0 is isomorphic to exactly one
  // census entry.
  auto census = enumerate_monoids(3);
  for (auto const& t : oracle::all_monoid_tables(3)) {
    std::vector<std::vector<std::int64_t>> rows;
    for (auto const& r : t) {
      rows.emplace_back(r.begin(), r.end());
    }
    auto m = make_monoid("T", {"0", "1", "2"}, rows);
    int  hits = 0;
    for (auto const& c : census) {
      hits += oracle::isomorphic(oracle::of(m), oracle::of(c));
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("census at order 5 has 228 entries", "[slow]") {
  CHECK(enumerate_monoids(5).size() == 228);
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(cyclic_group(2)).size() == 1);
  CHECK(automorphisms(cyclic_group(3)).size() == 2);
  CHECK(automorphisms(cyclic_group(5)).size() == 4);
  auto V = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(automorphisms(V).size() == 6);
  CHECK(automorphisms(V).front() == identity_hom(V));
}

TEST_CASE("pointed maps and homomorphisms") {
  auto Z2 = cyclic_group(2);
  auto Z4 = cyclic_group(4);
  SECTION("construction checks") {
    CHECK(PointedMap::make(Z2, Z4, {0}).error().kind == "MalformedMap");
    CHECK(PointedMap::make(Z2, Z4, {0, 4}).error().kind == "IndexOutOfRange");
    CHECK(PointedMap::make(Z2, Z4, {1, 0}).error().kind
          == "NotZeroPreserving");
  }
  SECTION("homomorphism check with witness") {
    auto f = PointedMap::make(Z2, Z4, {0, 1}).value();
    auto h = is_homomorphism(f);
    CHECK_FALSE(h);
    CHECK(h.witness == std::pair<index_t, index_t>{1, 1});
    CHECK(is_homomorphism(PointedMap::make(Z2, Z4, {0, 2}).value()));
  }
  SECTION("enumeration") {
    CHECK(all_pointed_maps(Z2, Z4).size() == 4);
    CHECK(all_homomorphisms(Z2, Z4).size() == 2);
    CHECK(all_homomorphisms(Z4, Z4).size() == 4);
  }
  SECTION("algebra of maps") {
    auto f = PointedMap::make(Z4, Z2, {0, 1, 0, 1}).value();
    auto g = PointedMap::make(Z2, Z4, {0, 2}).value();
    CHECK(compose(f, g).values() == std::vector<index_t>{0, 0});
    CHECK(is_zero(compose(f, g)));
    CHECK(pointwise_add(g, g).values() == std::vector<index_t>{0, 0});
    CHECK(is_surjective(f));
    CHECK(is_injective(g));
    CHECK_FALSE(is_bijective(g));
    auto n = PointedMap::make(Z4, Z4, {0, 3, 2, 1}).value();
    CHECK(inverse(n) == n);
  }
  SECTION("kernel") {
    auto p = Homomorphism::make(Z4, Z2, {0, 1, 0, 1}).value();
    auto K = kernel(p);
    CHECK(K.monoid.size() == 2);
    CHECK(K.inclusion.values() == std::vector<index_t>{0, 2});
  }
}

TEST_CASE("built-in monoid names") {
  CHECK(catalog::builtin("Z7")->size() == 7);
  CHECK(catalog::builtin("L2")->op(1, 1) == 1);
  CHECK(catalog::builtin("trivial")->size() == 1);
  CHECK(catalog::builtin("M3.2")->name() == "M3.2");
  CHECK_FALSE(catalog::builtin("Z0"));
  CHECK_FALSE(catalog::builtin("Z3x"));
  CHECK_FALSE(catalog::builtin("M9.1"));
  CHECK_FALSE(catalog::builtin("C"));
}

TEST_CASE("rendering uses labels and the notation hint") {
  std::ostringstream os;
  os << catalog::semilattice_b();
  CHECK(os.str().find("·") != std::string::npos);
  CHECK(os.str().find("t") != std::string::npos);
}

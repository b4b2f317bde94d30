#include <map>
#include <random>

#include <catch_amalgamated.hpp>

#include "seed.hpp"
#include "oracle/naive.hpp"
#include "sbp/catalog.hpp"
#include "sbp/census.hpp"
#include "sbp/enumeration.hpp"
#include "sbp/pseudo_action.hpp"
#include "sbp/synthesis.hpp"

using namespace sbp;

namespace {

  using V    = std::vector<index_t>;
  using Rows = std::vector<std::vector<std::int64_t>>;

  RawPseudoAction raw(FiniteMonoid X, FiniteMonoid B, oracle::Action const& a) {
    auto conv = [](oracle::Table const& t) {
      Rows out;
      for (auto const& r : t) {
        out.emplace_back(r.begin(), r.end());
      }
      return out;
    };
    return {std::move(X), std::move(B), conv(a.phi), conv(a.rho),
            conv(a.gamma)};
  }

  PseudoAction e1_action() {
    return extract_pseudo_action(catalog::chain_bundle().verify().value());
  }

}  // namespace

TEST_CASE("shape and range errors come before the laws") {
  auto Z2 = cyclic_group(2);
  SECTION("wrong row count") {
    auto r = validate_pseudo_action({Z2, Z2, {{0, 1}}, {{0, 0}, {1, 1}},
                                     {{0, 0}, {0, 0}}});
    CHECK(r.error().kind == "MalformedTable");
    CHECK(r.error().which == "phi");
  }
  SECTION("wrong row length") {
    auto r = validate_pseudo_action({Z2, Z2, {{0, 1}, {0, 1}},
                                     {{0, 0}, {1}}, {{0, 0}, {0, 0}}});
    CHECK(r.error().kind == "MalformedTable");
    CHECK(r.error().which == "rho");
  }
  SECTION("entry out of range") {
    auto r = validate_pseudo_action({Z2, Z2, {{0, 1}, {0, 1}},
                                     {{0, 0}, {1, 1}}, {{0, 0}, {0, 7}}});
    CHECK(r.error().kind == "IndexOutOfRange");
    CHECK(r.error().which == "gamma");
  }
}

TEST_CASE("unit laws") {
  auto Z2 = cyclic_group(2);
  Rows const id{{0, 1}, {0, 1}}, triv{{0, 0}, {1, 1}}, zero{{0, 0}, {0, 0}};
  CHECK(validate_pseudo_action({Z2, Z2, id, triv, zero}));
  CHECK(validate_pseudo_action({Z2, Z2, {{0, 0}, {0, 1}}, triv, zero})
            .error()
            .which
        == "1·x=x");
  CHECK(validate_pseudo_action({Z2, Z2, {{0, 1}, {1, 1}}, triv, zero})
            .error()
            .which
        == "b·0=0");
  CHECK(validate_pseudo_action({Z2, Z2, id, {{0, 0}, {0, 1}}, zero})
            .error()
            .which
        == "x^1=x");
  CHECK(validate_pseudo_action({Z2, Z2, id, {{0, 1}, {1, 1}}, zero})
            .error()
            .which
        == "0^b=0");
  CHECK(validate_pseudo_action({Z2, Z2, id, triv, {{0, 1}, {0, 0}}})
            .error()
            .kind
        == "UnitLawFails");
}

TEST_CASE("coherence failure for a non-action") {
  // The generator acts as the zero map: 1·(1·x) ≠ (1+1)·x.
  auto Z2 = cyclic_group(2);
  auto r  = validate_pseudo_action(
      {Z2, Z2, {{0, 1}, {0, 0}}, {{0, 0}, {1, 1}}, {{0, 0}, {0, 0}}});
  REQUIRE_FALSE(r);
  CHECK(r.error().kind == "FactorEquationFails");
  CHECK(r.error().witness.size() == 6);
}

TEST_CASE("validation agrees with the naive coherence check") {
  auto rng = sbp_test::rng(1);
  auto const   monoids = enumerate_monoids_up_to(3);
  int          valid   = 0;
  std::map<std::pair<std::string, std::string>, std::vector<oracle::Action>>
      pools;
  for (int trial = 0; trial < 3000; ++trial) {
    auto const& X = monoids[rng() % monoids.size()];
    auto const& B = monoids[rng() % monoids.size()];
    auto const  oX = oracle::of(X), oB = oracle::of(B);
    oracle::Action a;
    if (X.size() * B.size() <= 6 && trial % 2 == 0) {
      // Start from a valid action and perturb one non-unit cell.
      auto key = std::pair{X.name(), B.name()};
      auto it  = pools.find(key);
      if (it == pools.end()) {
        it = pools.emplace(key, oracle::all_actions(oX, oB)).first;
      }
      a = it->second[rng() % it->second.size()];
      if (X.size() > 1 && B.size() > 1 && rng() % 2 == 0) {
        int const b = 1 + static_cast<int>(rng() % (B.size() - 1));
        int const x = 1 + static_cast<int>(rng() % (X.size() - 1));
        switch (rng() % 3) {
          case 0: a.phi[b][x] = static_cast<int>(rng() % X.size()); break;
          case 1: a.rho[x][b] = static_cast<int>(rng() % X.size()); break;
          default:
            a.gamma[b][1 + rng() % (B.size() - 1)]
                = static_cast<int>(rng() % X.size());
        }
      }
    } else {
      auto cell = [&] { return static_cast<int>(rng() % X.size()); };
      a.phi.assign(B.size(), std::vector<int>(X.size()));
      a.rho.assign(X.size(), std::vector<int>(B.size()));
      a.gamma.assign(B.size(), std::vector<int>(B.size()));
      for (auto* t : {&a.phi, &a.rho, &a.gamma}) {
        for (auto& row : *t) {
          for (auto& v : row) {
            v = cell();
          }
        }
      }
    }
    bool const expected = oracle::unit_laws(oX, oB, a)
                          && oracle::factor_equation(oX, oB, a);
    auto r = validate_pseudo_action(raw(X, B, a));
    valid += expected;
    REQUIRE(r.has_value() == expected);
  }
  CHECK(valid > 100);
}

TEST_CASE("derived identities hold on every action over small pairs") {
  auto const monoids = enumerate_monoids_up_to(3);
  SearchOptions so;
  so.propagate = true;
  so.budget    = ~std::uint64_t{0};
  std::size_t n = 0;
  for (auto const& X : monoids) {
    for (auto const& B : monoids) {
      if (X.size() * B.size() > 6) {
        continue;
      }
      for (auto const& pa : enumerate_pseudo_actions(X, B, so)) {
        auto rep = check_derived_identities(pa);
        REQUIRE(rep.identities.size() == 7);
        CHECK(rep.all_hold());
        ++n;
      }
    }
  }
  // Total over all pairs with |X||B| ≤ 6, by brute force.
  CHECK(n == 1956);
}

TEST_CASE("E1 action: carrier, round trip and the product off the carrier") {
  auto pa = e1_action();
  REQUIRE(validate_pseudo_action(pa.to_raw()));

  auto syn = synthesize(pa);
  REQUIRE(syn);
  using P = SyntheticSemiBiproduct::Pair;
  CHECK(syn->carrier == std::vector<P>{{0, 0}, {1, 0}, {0, 1}});
  CHECK(syn->find(1, 1) == std::nullopt);
  // Same table as the chain structure, element for element.
  CHECK(syn->monoid().same_structure(catalog::chain_bundle().A));

  auto rt = roundtrip_equivalent(pa);
  CHECK(rt.holds());

  auto laws = search_product_laws(pa);
  CHECK(laws.pairs_outside_carrier == 1);
  // (0, 1) + (s, t) = (s^t, t) = (0, t)
  REQUIRE(laws.left_unit_failure);
  CHECK(*laws.left_unit_failure == V{1, 1});
  CHECK_FALSE(laws.non_associative);
}

TEST_CASE("trivial pseudo-action gives the direct product") {
  auto X  = cyclic_group(3);
  auto B  = catalog::semilattice_b();
  auto pa = trivial_pseudo_action(X, B);
  auto s  = synthesize(pa).value();
  CHECK(s.carrier.size() == 6);
  CHECK(is_schreier(s.semibiproduct));
  CHECK(are_isomorphic(s.monoid(), direct_product(X, B)));
}

TEST_CASE("round trip changes b·x to (b·x)^b and keeps the rest") {
  // An action with a non-trivial correction system and b·x outside the
  // image of ^b would not be fixed by the round trip; check the formula on
  // every action over (L2, L2), where both kinds occur.
  auto L2 = catalog::builtin("L2").value();
  SearchOptions so;
  so.propagate = true;
  for (auto const& pa : enumerate_pseudo_actions(L2, L2, so)) {
    auto rt = roundtrip_equivalent(pa);
    REQUIRE(rt.holds());
    auto const& d = *rt.derived;
    for (index_t b = 0; b < 2; ++b) {
      for (index_t x = 0; x < 2; ++x) {
        CHECK(d.act(b, x) == pa.correction(pa.act(b, x), b));
        CHECK(d.correction(x, b) == pa.correction(x, b));
      }
    }
  }
}

#include <map>
#include <random>
#include <set>

#include <catch_amalgamated.hpp>

#include "seed.hpp"
#include "oracle/naive.hpp"
#include "sbp/catalog.hpp"
#include "sbp/census.hpp"
#include "sbp/enumeration.hpp"
#include "sbp/synthesis.hpp"

using namespace sbp;

namespace {

  using Rows = std::vector<std::vector<std::int64_t>>;

  SearchOptions fast(unsigned jobs = 1) {
    SearchOptions so;
    so.jobs      = jobs;
    so.propagate = true;
    return so;
  }

  oracle::Action as_oracle(PseudoAction const& pa) {
    auto const nx = static_cast<int>(pa.X().size());
    auto const nb = static_cast<int>(pa.B().size());
    oracle::Action a;
    a.phi.assign(nb, std::vector<int>(nx));
    a.rho.assign(nx, std::vector<int>(nb));
    a.gamma.assign(nb, std::vector<int>(nb));
    for (int b = 0; b < nb; ++b) {
      for (int x = 0; x < nx; ++x) {
        a.phi[b][x] = static_cast<int>(pa.act(b, x));
        a.rho[x][b] = static_cast<int>(pa.correction(x, b));
      }
      for (int c = 0; c < nb; ++c) {
        a.gamma[b][c] = static_cast<int>(pa.factor(b, c));
      }
    }
    return a;
  }

  std::vector<SemiBiproduct> synthesized(FiniteMonoid const& X,
                                         FiniteMonoid const& B) {
    std::vector<SemiBiproduct> out;
    for (auto const& pa : enumerate_pseudo_actions(X, B, fast())) {
      out.push_back(synthesize(pa).value().semibiproduct);
    }
    return out;
  }

  SemiBiproduct from_oracle(FiniteMonoid const& X, FiniteMonoid const& B,
                            oracle::Extension const& e) {
    Rows t;
    for (auto const& r : e.A) {
      t.emplace_back(r.begin(), r.end());
    }
    auto A  = make_monoid("A", {}, t);
    auto to = [](std::vector<int> const& v) {
      return std::vector<index_t>(v.begin(), v.end());
    };
    return verify_semibiproduct(X, A, B,
                                Homomorphism::make(A, B, to(e.p)).value(),
                                Homomorphism::make(X, A, to(e.k)).value(),
                                PointedMap::make(A, X, to(e.q)).value(),
                                PointedMap::make(B, A, to(e.s)).value())
        .value();
  }

}  // namespace

TEST_CASE("pseudo-actions agree with the brute-force enumeration") {
  auto const   monoids = enumerate_monoids_up_to(3);
  std::size_t  total   = 0;
  std::map<std::string, std::size_t> counts;
  for (auto const& X : monoids) {
    for (auto const& B : monoids) {
      if (X.size() * B.size() > 6) {
        continue;
      }
      auto got  = enumerate_pseudo_actions(X, B, fast());
      auto want = oracle::all_actions(oracle::of(X), oracle::of(B));
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        // Both sides are in lexicographic order of (phi, rho, gamma).
        CHECK(as_oracle(got[i]) == want[i]);
      }
      counts[X.name() + "," + B.name()] = got.size();
      total += got.size();
    }
  }
  // Frozen from the brute-force run above.
  CHECK(total == 1956);
  CHECK(counts.at("M2.1,M2.1") == 2);
  CHECK(counts.at("M2.2,M2.2") == 8);
  CHECK(counts.at("M3.7,M2.1") == 4);
}

TEST_CASE("propagation and worker count do not change the output") {
  auto L2 = catalog::builtin("L2").value();
  for (auto const& X : enumerate_monoids(3)) {
    auto plain = enumerate_pseudo_actions(X, L2, SearchOptions{});
    CHECK(enumerate_pseudo_actions(X, L2, fast(1)) == plain);
    CHECK(enumerate_pseudo_actions(X, L2, fast(4)) == plain);
  }
}

TEST_CASE("budget is checked before any work") {
  auto Z3 = cyclic_group(3);
  auto M  = enumerate_monoids(3).front();
  SearchOptions so;
  so.budget = 1000;
  try {
    enumerate_pseudo_actions(Z3, M, so);
    FAIL("expected BudgetExceeded");
  } catch (BudgetExceeded const& e) {
    CHECK(e.required() == pseudo_action_search_cost(Z3, M));
    CHECK(e.budget() == 1000);
  }
  // 3×3 needs more than the default.
  CHECK(pseudo_action_search_cost(Z3, M) > DEFAULT_BUDGET);
  CHECK(pseudo_action_search_cost(cyclic_group(2), cyclic_group(2))
        <= DEFAULT_BUDGET);
}

TEST_CASE("groups only carry trivial correction systems") {
  for (std::size_t n : {2u, 3u}) {
    auto X = cyclic_group(n);
    auto B = cyclic_group(2);
    auto all = enumerate_pseudo_actions(X, B, fast());
    REQUIRE_FALSE(all.empty());
    for (auto const& pa : all) {
      CHECK(pa.has_trivial_correction());
    }
  }
  // Z3 by Z2: the trivial action with three factor systems, and inversion.
  CHECK(enumerate_pseudo_actions(cyclic_group(3), cyclic_group(2), fast())
            .size()
        == 4);
}

TEST_CASE("classes of extensions of Z2 by Z2 match brute force") {
  auto Z2  = cyclic_group(2);
  auto ext = oracle::all_extensions(oracle::of(Z2), oracle::of(Z2));
  CHECK(ext.size() == 12);
  CHECK(oracle::count_classes(ext) == 2);

  auto syn     = synthesized(Z2, Z2);
  auto classes = classify_up_to_iso(syn);
  CHECK(classes.size() == 2);
  // Klein four and Z4 are the two classes.
  std::set<std::size_t> orders;
  for (auto const& c : classes) {
    CHECK(c.members.size() == 1);
    orders.insert(automorphisms(syn[c.representative].A()).size());
  }
  CHECK(orders == std::set<std::size_t>{2, 6});

  // Every brute-force extension is isomorphic to exactly one of them.
  for (auto const& e : ext) {
    auto sb   = from_oracle(Z2, Z2, e);
    int  hits = 0;
    for (auto const& s : syn) {
      hits += find_isomorphism(sb, s).has_value();
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("free endpoints merge fixed classes") {
  auto const monoids = enumerate_monoids_up_to(3);
  auto rng = sbp_test::rng(77);
  for (auto const& X : monoids) {
    for (auto const& B : monoids) {
      if (X.size() * B.size() > 6) {
        continue;
      }
      auto syn   = synthesized(X, B);
      auto fixed = classify_up_to_iso(syn, IsoMode::fixed_endpoints);
      auto free  = classify_up_to_iso(syn, IsoMode::free_endpoints);
      CHECK(free.size() <= fixed.size());
      std::map<std::size_t, std::size_t> free_of;
      for (std::size_t c = 0; c < free.size(); ++c) {
        for (auto m : free[c].members) {
          free_of[m] = c;
        }
      }
      for (auto const& c : fixed) {
        for (auto m : c.members) {
          CHECK(free_of.at(m) == free_of.at(c.representative));
        }
      }

      // The partition does not depend on input order.
      std::vector<std::size_t> perm(syn.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<SemiBiproduct> shuffled;
      for (auto i : perm) {
        shuffled.push_back(syn[i]);
      }
      auto again = classify_up_to_iso(shuffled);
      REQUIRE(again.size() == fixed.size());
      std::set<std::set<std::size_t>> a, b;
      for (auto const& c : fixed) {
        a.emplace(c.members.begin(), c.members.end());
      }
      for (auto const& c : again) {
        std::set<std::size_t> s;
        for (auto m : c.members) {
          s.insert(perm[m]);
        }
        b.insert(s);
      }
      CHECK(a == b);
    }
  }
}

TEST_CASE("Z3 by Z2 under automorphisms of the ends") {
  // Four actions: trivial with factor 0, 1 or 2 at (1, 1), and inversion.
  // Negation on Z3 swaps the factors 1 and 2 and fixes the rest.
  auto syn = synthesized(cyclic_group(3), cyclic_group(2));
  REQUIRE(syn.size() == 4);
  CHECK(classify_up_to_iso(syn).size() == 4);
  auto free = classify_up_to_iso(syn, IsoMode::free_endpoints);
  REQUIRE(free.size() == 3);
  CHECK(free[1].members == std::vector<std::size_t>{1, 2});
  for (auto const& s : syn) {
    CHECK(s.A().is_group());
  }
}

TEST_CASE("morphisms and the split five lemma") {
  auto klein = catalog::klein_bundle().verify().value();
  auto z4    = catalog::z4_bundle().verify().value();
  CHECK_FALSE(find_isomorphism(klein, z4));

  auto iso = find_isomorphism(z4, z4);
  REQUIRE(iso);
  auto r = split_five_check(*iso);
  CHECK(r.verdict.holds());
  CHECK(*r.inverse == inverse(iso->f1().map()));

  auto s3  = catalog::s3_bundle().verify().value();
  auto aut = find_isomorphism(s3, s3);
  REQUIRE(aut);
  CHECK(split_five_check(*aut).verdict.holds());

  // f0 = 0 gives a morphism a ↦ s(p(a)) that is not an isomorphism.
  auto Z2   = cyclic_group(2);
  auto zero = Homomorphism::make(Z2, Z2, {0, 0}).value();
  auto m    = find_morphism(klein, klein, zero, identity_hom(Z2));
  REQUIRE(m);
  CHECK(m->f1().map().values() == std::vector<index_t>{0, 0, 2, 2});
  CHECK(split_five_check(*m).verdict.violation->kind == "PreconditionFail");
}

TEST_CASE("classify rejects mixed endpoints") {
  auto a = catalog::klein_bundle().verify().value();
  auto b = catalog::chain_bundle().verify().value();
  CHECK_THROWS_AS(classify_up_to_iso({a, b}), DomainMismatch);
  CHECK(classify_up_to_iso({}).empty());
}

// Named monoids and worked examples: the three-element relation over two
// semilattices (and its rejected sign-multiplication variant), the bounded
// order relation on the naturals, S3 as an extension of Z2 by Z3, and the
// two extensions of Z2 by Z2.

#ifndef SBP_CATALOG_HPP_
#define SBP_CATALOG_HPP_

#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "bounded.hpp"        // for naturals_order_relation
#include "census.hpp"         // for enumerate_monoids
#include "core.hpp"           // for index_t, Error
#include "monoid.hpp"         // for FiniteMonoid, make_monoid
#include "pointed_map.hpp"    // for PointedMap
#include "pseudo_action.hpp"  // for RawPseudoAction
#include "relation.hpp"       // for RelationScheme
#include "semibiproduct.hpp"  // for Bundle
#include "synthesis.hpp"      // for synthesize

namespace sbp::catalog {

  //! {0, s} with s + s = s.
  inline FiniteMonoid semilattice_x() {
    return make_monoid("X", {"0", "s"}, {{0, 1}, {1, 1}});
  }

  //! {1, t} with t·t = t.
  inline FiniteMonoid semilattice_b() {
    return make_monoid(
        "B", {"1", "t"}, {{0, 1}, {1, 1}}, 0, Notation::multiplicative);
  }

  //! Built-in monoids by name: "1" or "trivial", "Z<n>" for 1 ≤ n ≤ 12,
  //! "L2" (two-element semilattice), and census names "M<n>.<i>" for n ≤ 4.
  inline std::optional<FiniteMonoid> builtin(std::string const& name) {
    if (name == "1" || name == "trivial") {
      return trivial_monoid(name);
    }
    if (name == "L2") {
      return make_monoid("L2", {"0", "s"}, {{0, 1}, {1, 1}});
    }
    if (name.size() >= 2 && name[0] == 'Z') {
      try {
        std::size_t pos = 0;
        int const   n   = std::stoi(name.substr(1), &pos);
        if (pos + 1 == name.size() && n >= 1 && n <= 12) {
          return cyclic_group(static_cast<std::size_t>(n));
        }
      } catch (std::exception const&) {
      }
      return std::nullopt;
    }
    if (name.size() >= 4 && name[0] == 'M' && name[2] == '.') {
      int const order = name[1] - '0';
      if (order >= 1 && order <= 4) {
        for (auto const& m : enumerate_monoids(static_cast<std::size_t>(order))) {
          if (m.name() == name) {
            return m;
          }
        }
      }
    }
    return std::nullopt;
  }

  //! R = {(0,1), (s,1), (0,t)} ⊆ X × B with u = 0 and q(x, b) = x.
  inline RelationScheme three_element_scheme() {
    auto const X = semilattice_x();
    auto const B = semilattice_b();
    return projection_scheme(X, B, {{0, 0}, {1, 0}, {0, 1}}).value();
  }

  namespace detail {
    inline Bundle three_element_bundle(std::string                      name,
                                       std::vector<std::vector<std::int64_t>> t) {
      auto const X = semilattice_x();
      auto const B = semilattice_b();
      auto const R = make_monoid("R", {"0R1", "sR1", "0Rt"}, std::move(t));
      return Bundle{std::move(name),
                    X,
                    R,
                    B,
                    PointedMap::make(R, B, {0, 0, 1}).value(),
                    PointedMap::make(X, R, {0, 1}).value(),
                    PointedMap::make(R, X, {0, 1, 0}).value(),
                    PointedMap::make(B, R, {0, 2}).value()};
    }
  }  // namespace detail

  //! R as the chain semilattice 0R1 < sR1 < 0Rt (the accepted structure).
  inline Bundle chain_bundle() {
    return detail::three_element_bundle(
        "chain", {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
  }

  //! R as {1, -1, 0} under multiplication (the rejected structure).
  inline Bundle sign_bundle() {
    return detail::three_element_bundle(
        "sign", {{0, 1, 2}, {1, 0, 2}, {2, 2, 2}});
  }

  //! Z3 with b·x = -x for the generator of Z2.
  inline PseudoAction inversion_action() {
    auto const           X = cyclic_group(3);
    auto const           B = cyclic_group(2);
    RawPseudoAction      raw{X, B, {{0, 1, 2}, {0, 2, 1}},
                        {{0, 0}, {1, 1}, {2, 2}}, {{0, 0}, {0, 0}}};
    return validate_pseudo_action(raw).value();
  }

  //! S3 as the synthetic extension of Z2 by Z3 under inversion.
  inline Bundle s3_bundle() {
    return Bundle::from(synthesize(inversion_action()).value().semibiproduct,
                        "S3");
  }

  //! Z2 × Z2 with projections and injections.
  inline Bundle klein_bundle() {
    auto const Z2 = cyclic_group(2);
    return Bundle::from(product_semibiproduct(Z2, Z2), "klein");
  }

  //! Z2 → Z4 → Z2 with k(1) = 2, p = mod 2, s(1) = 1, q = halving.
  inline Bundle z4_bundle() {
    auto const Z2 = cyclic_group(2);
    auto const Z4 = cyclic_group(4);
    return Bundle{"Z4",
                  Z2,
                  Z4,
                  Z2,
                  PointedMap::make(Z4, Z2, {0, 1, 0, 1}).value(),
                  PointedMap::make(Z2, Z4, {0, 2}).value(),
                  PointedMap::make(Z4, Z2, {0, 0, 1, 1}).value(),
                  PointedMap::make(Z2, Z4, {0, 1}).value()};
  }

  //! The order relation {(x, b) : b ≤ x} on the naturals, truncated.
  inline PartialRelation naturals(std::size_t bound) {
    return naturals_order_relation(bound);
  }

  inline std::vector<std::string> example_names() {
    return {"paper-e1", "paper-e1-reject", "paper-nat", "s3", "klein", "z4"};
  }

}  // namespace sbp::catalog

#endif  // SBP_CATALOG_HPP_

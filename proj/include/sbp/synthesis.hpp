// Reconstruction of a semi-biproduct from a pseudo-action, on the carrier
// {(x^b, b)} ⊆ X × B with
//
//   (x, b) + (x', b') = ((x + b·x' + b×b')^{bb'}, bb'),
//
// and the round trip pseudo-action → semi-biproduct → pseudo-action.

#ifndef SBP_SYNTHESIS_HPP_
#define SBP_SYNTHESIS_HPP_

#include <algorithm>  // for sort, unique, lower_bound
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <string>     // for string
#include <utility>    // for pair, move
#include <vector>     // for vector

#include "core.hpp"           // for index_t, Expected, Violation
#include "monoid.hpp"         // for FiniteMonoid, validate_monoid
#include "pointed_map.hpp"    // for PointedMap
#include "pseudo_action.hpp"  // for PseudoAction
#include "semibiproduct.hpp"  // for SemiBiproduct, verify_semibiproduct

namespace sbp {

  struct SyntheticSemiBiproduct {
    using Pair = std::pair<index_t, index_t>;  // (x, b)

    PseudoAction action;
    //! {(x^b, b)} sorted by (b, x); element i of the monoid is carrier[i].
    std::vector<Pair> carrier;
    SemiBiproduct     semibiproduct;

    FiniteMonoid const& monoid() const noexcept {
      return semibiproduct.A();
    }

    //! Position of (x, b) in the carrier, if present.
    std::optional<index_t> find(index_t x, index_t b) const {
      auto it = std::lower_bound(
          carrier.begin(), carrier.end(), Pair{x, b}, detail::by_b_then_x);
      if (it == carrier.end() || *it != Pair{x, b}) {
        return std::nullopt;
      }
      return static_cast<index_t>(it - carrier.begin());
    }
  };

  //! Builds the carrier and its operation table, checks the monoid laws on
  //! it and assembles p(x, b) = b, k(x) = (x, 1), q(x, b) = x,
  //! s(b) = (0, b). Returns SynthesisIncoherent if any step fails, which
  //! cannot happen for a validated pseudo-action.
  inline Expected<SyntheticSemiBiproduct> synthesize(PseudoAction const& pa) {
    using Pair      = SyntheticSemiBiproduct::Pair;
    auto const&   X = pa.X();
    auto const&   B = pa.B();
    index_t const zero = X.identity(), one = B.identity();

    std::vector<Pair> carrier;
    for (index_t b = 0; b < B.size(); ++b) {
      for (index_t x = 0; x < X.size(); ++x) {
        carrier.emplace_back(pa.correction(x, b), b);
      }
    }
    std::sort(carrier.begin(), carrier.end(), detail::by_b_then_x);
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());

    auto position = [&](Pair const& e) -> std::optional<index_t> {
      auto it = std::lower_bound(
          carrier.begin(), carrier.end(), e, detail::by_b_then_x);
      if (it == carrier.end() || *it != e) {
        return std::nullopt;
      }
      return static_cast<index_t>(it - carrier.begin());
    };

    std::size_t const        n = carrier.size();
    std::vector<index_t>     table(n * n);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      auto [x, b] = carrier[i];
      labels.push_back("(" + X.label(x) + "," + B.label(b) + ")");
      for (std::size_t j = 0; j < n; ++j) {
        auto [x2, b2] = carrier[j];
        Pair sum{pa.product(x, x2, b, b2), B.op(b, b2)};
        auto pos = position(sum);
        if (!pos) {
          return Violation{"SynthesisIncoherent",
                           "closure",
                           {static_cast<index_t>(i), static_cast<index_t>(j)},
                           ""};
        }
        table[i * n + j] = *pos;
      }
    }
    auto neutral = position({zero, one});
    if (!neutral) {
      return Violation{"SynthesisIncoherent", "neutral", {}, ""};
    }
    auto A = validate_monoid(X.name() + "⋊" + B.name(),
                             std::move(labels),
                             *neutral,
                             std::move(table),
                             Notation::additive);
    if (!A) {
      return Violation{"SynthesisIncoherent",
                       A.error().kind,
                       A.error().witness,
                       A.error().message};
    }

    std::vector<index_t> p(n), q(n), k(X.size()), s(B.size());
    for (std::size_t i = 0; i < n; ++i) {
      q[i] = carrier[i].first;
      p[i] = carrier[i].second;
    }
    for (index_t x = 0; x < X.size(); ++x) {
      auto pos = position({x, one});
      if (!pos) {
        return Violation{"SynthesisIncoherent", "k", {x}, ""};
      }
      k[x] = *pos;
    }
    for (index_t b = 0; b < B.size(); ++b) {
      auto pos = position({zero, b});
      if (!pos) {
        return Violation{"SynthesisIncoherent", "s", {b}, ""};
      }
      s[b] = *pos;
    }
    auto const& M  = *A;
    auto        sb = verify_semibiproduct(X,
                                   M,
                                   B,
                                   PointedMap::make(M, B, p).value(),
                                   PointedMap::make(X, M, k).value(),
                                   PointedMap::make(M, X, q).value(),
                                   PointedMap::make(B, M, s).value());
    if (!sb) {
      return Violation{"SynthesisIncoherent",
                       sb.error().kind + ":" + sb.error().which,
                       sb.error().witness,
                       ""};
    }
    return SyntheticSemiBiproduct{pa, std::move(carrier), std::move(sb).value()};
  }

  struct RoundTrip {
    //! extract(synthesize(pa))
    std::optional<PseudoAction> derived;
    //! First identity that failed; empty when the round trip holds.
    std::optional<Violation> violation;

    bool holds() const noexcept {
      return derived.has_value() && !violation.has_value();
    }
  };

  //! Checks that extracting from the synthetic semi-biproduct gives
  //! b·'x = (b·x)^b, x^'b = x^b and b×'b' = (b×b')^{bb'}, and that
  //! (x^b)^b = x^b.
  inline RoundTrip roundtrip_equivalent(PseudoAction const& pa) {
    RoundTrip out;
    auto      syn = synthesize(pa);
    if (!syn) {
      out.violation = syn.error();
      return out;
    }
    out.derived     = extract_pseudo_action(syn->semibiproduct);
    auto const& d   = *out.derived;
    auto const& X   = pa.X();
    auto const& B   = pa.B();
    auto        bad = [&](char const* which, std::vector<index_t> w) {
      out.violation = Violation{"RoundTripFails", which, std::move(w), ""};
      return out;
    };
    for (index_t b = 0; b < B.size(); ++b) {
      for (index_t x = 0; x < X.size(); ++x) {
        if (d.act(b, x) != pa.correction(pa.act(b, x), b)) {
          return bad("phi", {b, x});
        }
      }
    }
    for (index_t x = 0; x < X.size(); ++x) {
      for (index_t b = 0; b < B.size(); ++b) {
        if (d.correction(x, b) != pa.correction(x, b)) {
          return bad("rho", {x, b});
        }
        if (pa.correction(pa.correction(x, b), b) != pa.correction(x, b)) {
          return bad("idempotence", {x, b});
        }
      }
    }
    for (index_t b = 0; b < B.size(); ++b) {
      for (index_t c = 0; c < B.size(); ++c) {
        if (d.factor(b, c) != pa.correction(pa.factor(b, c), B.op(b, c))) {
          return bad("gamma", {b, c});
        }
      }
    }
    return out;
  }

  //! Behaviour of the product formula on all of X × B rather than on the
  //! carrier. Elements are reported as (x, b) index pairs flattened into the
  //! witness.
  struct ProductLawSearch {
    //! First ((x, b), (x', b'), (x'', b'')) with (e + e') + e'' ≠ e + (e' + e'').
    std::optional<std::vector<index_t>> non_associative;
    //! First (x, b) with (0, 1) + (x, b) ≠ (x, b).
    std::optional<std::vector<index_t>> left_unit_failure;
    //! First (x, b) with (x, b) + (0, 1) ≠ (x, b).
    std::optional<std::vector<index_t>> right_unit_failure;
    std::size_t                         pairs_outside_carrier = 0;
  };

  inline ProductLawSearch search_product_laws(PseudoAction const& pa) {
    auto const&      X = pa.X();
    auto const&      B = pa.B();
    index_t const    nx = X.size(), nb = B.size();
    index_t const    zero = X.identity(), one = B.identity();
    ProductLawSearch out;
    detail::ProductMemo const memo(pa);

    for (index_t b = 0; b < nb; ++b) {
      for (index_t x = 0; x < nx; ++x) {
        if (pa.correction(x, b) != x) {
          ++out.pairs_outside_carrier;
        }
        if (!out.left_unit_failure && memo(zero, x, one, b) != x) {
          out.left_unit_failure = std::vector<index_t>{x, b};
        }
        if (!out.right_unit_failure && memo(x, zero, b, one) != x) {
          out.right_unit_failure = std::vector<index_t>{x, b};
        }
      }
    }
    if (auto w = memo.first_failure()) {
      auto const& v = *w;  // (x, x', x'', b, b', b'')
      out.non_associative
          = std::vector<index_t>{v[0], v[3], v[1], v[4], v[2], v[5]};
    }
    return out;
  }

}  // namespace sbp

#endif  // SBP_SYNTHESIS_HPP_

// Semi-biproducts built from a relation R ⊆ X × B.
//
// Given R containing every (x, 1), a pointed map u: B → X with (u(b), b) ∈ R,
// and q: R → X with q(x, 1) = x, q(u(b), b) = 0 and q injective on each
// fibre over B, every monoid structure on R with neutral element (0, 1) and
// homomorphic projection (x, b) ↦ b yields
//
//   x ⊕ x' = q(xR1 + x'R1)        b × b' = q(u(b)Rb + u(b')Rb')
//   b · x  = q(u(b)Rb + xR1)      x^b    = q(xR1 + u(b)Rb)
//
// and, when x ⊕ x' = x + x' and q(xRb)^b = q(xRb) for all xRb, a
// semi-biproduct with p(xRb) = b, k(x) = xR1, s(b) = u(b)Rb.

#ifndef SBP_RELATION_HPP_
#define SBP_RELATION_HPP_

#include <algorithm>  // for sort, find
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <optional>   // for optional
#include <span>       // for span
#include <string>     // for string
#include <utility>    // for pair, move
#include <vector>     // for vector

#include "core.hpp"           // for index_t, Violation, BudgetExceeded
#include "enumeration.hpp"    // for SearchOptions
#include "monoid.hpp"         // for FiniteMonoid
#include "pointed_map.hpp"    // for PointedMap
#include "search.hpp"         // for for_each_monoid_table
#include "semibiproduct.hpp"  // for SemiBiproduct, verify_semibiproduct

namespace sbp {

  //! The data (R, u, q) of the construction. R is kept sorted by (b, x);
  //! `q[i]` is the value of q at `R[i]`.
  struct RelationScheme {
    using Pair = std::pair<index_t, index_t>;  // (x, b)

    FiniteMonoid         X;
    FiniteMonoid         B;
    std::vector<Pair>    R;
    std::vector<index_t> u;
    std::vector<index_t> q;

    std::optional<index_t> find(index_t x, index_t b) const {
      auto it = std::find(R.begin(), R.end(), Pair{x, b});
      if (it == R.end()) {
        return std::nullopt;
      }
      return static_cast<index_t>(it - R.begin());
    }

    //! Labels "xRb" built from the element labels of X and B.
    std::vector<std::string> labels() const {
      std::vector<std::string> out;
      for (auto [x, b] : R) {
        out.push_back(X.label(x) + "R" + B.label(b));
      }
      return out;
    }

    friend bool operator==(RelationScheme const& l, RelationScheme const& r) {
      return l.R == r.R && l.u == r.u && l.q == r.q
             && l.X.same_structure(r.X) && l.B.same_structure(r.B);
    }
  };

  //! Checks the three conditions on (R, u, q), after sorting R by (b, x).
  inline Expected<RelationScheme> make_relation_scheme(
      FiniteMonoid                       X,
      FiniteMonoid                       B,
      std::vector<RelationScheme::Pair>  R,
      std::vector<index_t>               u,
      std::vector<index_t>               q) {
    using Pair = RelationScheme::Pair;
    if (q.size() != R.size() || u.size() != B.size()) {
      return Violation{"MalformedRelation", "sizes", {}, ""};
    }
    std::vector<std::pair<Pair, index_t>> rq;
    for (std::size_t i = 0; i < R.size(); ++i) {
      if (R[i].first >= X.size() || R[i].second >= B.size()
          || q[i] >= X.size()) {
        return Violation{"IndexOutOfRange", "R", {static_cast<index_t>(i)}, ""};
      }
      rq.emplace_back(R[i], q[i]);
    }
    std::sort(rq.begin(), rq.end(), [](auto const& l, auto const& r) {
      return detail::by_b_then_x(l.first, r.first);
    });
    for (std::size_t i = 0; i < rq.size(); ++i) {
      R[i] = rq[i].first;
      q[i] = rq[i].second;
      if (i > 0 && R[i] == R[i - 1]) {
        return Violation{"MalformedRelation", "duplicate", {R[i].first, R[i].second}, ""};
      }
    }
    RelationScheme s{std::move(X), std::move(B), std::move(R), std::move(u),
                     std::move(q)};
    index_t const zero = s.X.identity(), one = s.B.identity();
    if (s.u[one] != zero) {
      return Violation{"RelationConditionFails", "u(1)=0", {one}, ""};
    }
    for (index_t x = 0; x < s.X.size(); ++x) {
      auto i = s.find(x, one);
      if (!i || s.q[*i] != x) {
        return Violation{"RelationConditionFails", "xR1, q(xR1)=x", {x}, ""};
      }
    }
    for (index_t b = 0; b < s.B.size(); ++b) {
      if (s.u[b] >= s.X.size()) {
        return Violation{"IndexOutOfRange", "u", {b}, ""};
      }
      auto i = s.find(s.u[b], b);
      if (!i || s.q[*i] != zero) {
        return Violation{"RelationConditionFails", "u(b)Rb, q(u(b)Rb)=0", {b}, ""};
      }
    }
    for (std::size_t i = 0; i < s.R.size(); ++i) {
      for (std::size_t j = i + 1; j < s.R.size(); ++j) {
        if (s.R[i].second == s.R[j].second && s.q[i] == s.q[j]) {
          return Violation{"RelationConditionFails",
                           "q injective on fibres",
                           {s.R[i].first, s.R[j].first, s.R[i].second},
                           ""};
        }
      }
    }
    return s;
  }

  //! R = X × B (or the given subset) with u = 0 and q(x, b) = x.
  inline Expected<RelationScheme> projection_scheme(
      FiniteMonoid const&                      X,
      FiniteMonoid const&                      B,
      std::vector<RelationScheme::Pair> const& R) {
    std::vector<index_t> q;
    for (auto [x, b] : R) {
      q.push_back(x);
    }
    return make_relation_scheme(
        X, B, R, std::vector<index_t>(B.size(), X.identity()), std::move(q));
  }

  inline Expected<RelationScheme> projection_scheme(FiniteMonoid const& X,
                                                    FiniteMonoid const& B) {
    std::vector<RelationScheme::Pair> R;
    for (index_t b = 0; b < B.size(); ++b) {
      for (index_t x = 0; x < X.size(); ++x) {
        R.emplace_back(x, b);
      }
    }
    return projection_scheme(X, B, R);
  }

  //! One monoid structure on R and what became of it.
  struct RelationCandidate {
    RelationScheme scheme;
    //! R with the candidate operation; elements in the order of scheme.R.
    FiniteMonoid monoid;
    //! Set when a filter rejected the candidate.
    std::optional<Violation> rejection;
    //! Set when the candidate was accepted.
    std::optional<SemiBiproduct> semibiproduct;

    bool accepted() const noexcept {
      return semibiproduct.has_value();
    }
  };

  //! Derived operations of a candidate, as |X|×|X|, |B|×|B|, |B|×|X| and
  //! |X|×|B| tables.
  struct RelationDerived {
    std::vector<index_t> oplus, cross, dot, correction;
  };

  inline RelationDerived relation_derived_operations(
      RelationScheme const& s,
      FiniteMonoid const&   R) {
    std::size_t const nx = s.X.size(), nb = s.B.size();
    index_t const     one = s.B.identity();
    auto xr1  = [&](index_t x) { return *s.find(x, one); };
    auto ubrb = [&](index_t b) { return *s.find(s.u[b], b); };
    RelationDerived d;
    d.oplus.resize(nx * nx);
    d.cross.resize(nb * nb);
    d.dot.resize(nb * nx);
    d.correction.resize(nx * nb);
    for (index_t x = 0; x < nx; ++x) {
      for (index_t y = 0; y < nx; ++y) {
        d.oplus[x * nx + y] = s.q[R.op(xr1(x), xr1(y))];
      }
    }
    for (index_t b = 0; b < nb; ++b) {
      for (index_t c = 0; c < nb; ++c) {
        d.cross[b * nb + c] = s.q[R.op(ubrb(b), ubrb(c))];
      }
      for (index_t x = 0; x < nx; ++x) {
        d.dot[b * nx + x]        = s.q[R.op(ubrb(b), xr1(x))];
        d.correction[x * nb + b] = s.q[R.op(xr1(x), ubrb(b))];
      }
    }
    return d;
  }

  //! Applies the two acceptance filters and, if they pass, assembles and
  //! verifies the semi-biproduct, also checking xRb = q(xRb)R1 + u(b)Rb.
  inline RelationCandidate evaluate_relation_candidate(RelationScheme const& s,
                                                       FiniteMonoid const& R) {
    RelationCandidate c{s, R, std::nullopt, std::nullopt};
    std::size_t const nx = s.X.size(), nb = s.B.size();
    index_t const     one = s.B.identity();
    auto const        d   = relation_derived_operations(s, R);
    for (index_t x = 0; x < nx; ++x) {
      for (index_t y = 0; y < nx; ++y) {
        if (d.oplus[x * nx + y] != s.X.op(x, y)) {
          c.rejection = Violation{"OplusMismatch", "x⊕x'=x+x'", {x, y}, ""};
          return c;
        }
      }
    }
    for (index_t i = 0; i < s.R.size(); ++i) {
      index_t const b = s.R[i].second, y = s.q[i];
      if (d.correction[y * nb + b] != y) {
        c.rejection = Violation{
            "CorrectionMismatch", "q(xRb)^b=q(xRb)", {s.R[i].first, b}, ""};
        return c;
      }
    }
    std::vector<index_t> p(s.R.size()), k(nx), sv(nb);
    for (index_t i = 0; i < s.R.size(); ++i) {
      p[i] = s.R[i].second;
    }
    for (index_t x = 0; x < nx; ++x) {
      k[x] = *s.find(x, one);
    }
    for (index_t b = 0; b < nb; ++b) {
      sv[b] = *s.find(s.u[b], b);
    }
    for (index_t i = 0; i < s.R.size(); ++i) {
      if (R.op(k[s.q[i]], sv[s.R[i].second]) != i) {
        c.rejection = Violation{
            "DecompositionFails", "xRb=q(xRb)R1+u(b)Rb", {s.R[i].first, s.R[i].second}, ""};
        return c;
      }
    }
    auto sb = verify_semibiproduct(s.X,
                                   R,
                                   s.B,
                                   PointedMap::make(R, s.B, p).value(),
                                   PointedMap::make(s.X, R, k).value(),
                                   PointedMap::make(R, s.X, s.q).value(),
                                   PointedMap::make(s.B, R, sv).value());
    if (!sb) {
      c.rejection = sb.error();
      return c;
    }
    c.semibiproduct = std::move(sb).value();
    return c;
  }

  //! Worst-case number of candidate tables for a scheme: each non-neutral
  //! cell ranges over one fibre.
  inline std::uint64_t relation_search_cost(RelationScheme const& s) {
    index_t const one  = s.B.identity();
    auto const    zero = s.find(s.X.identity(), one);
    std::vector<std::uint64_t> fibre(s.B.size(), 0);
    for (auto [x, b] : s.R) {
      ++fibre[b];
    }
    std::uint64_t cost = 1;
    for (index_t i = 0; i < s.R.size(); ++i) {
      for (index_t j = 0; j < s.R.size(); ++j) {
        if (i != *zero && j != *zero) {
          cost = detail::sat_mul(
              cost, fibre[s.B.op(s.R[i].second, s.R[j].second)]);
        }
      }
    }
    return cost;
  }

  //! Every monoid structure on R with neutral element 0R1 and homomorphic
  //! projection, in lexicographic table order, each run through the filters.
  //!
  //! Throws BudgetExceeded if |R| > 6 or the worst-case number of tables
  //! exceeds `opts.budget`.
  inline std::vector<RelationCandidate> enumerate_relation_extensions(
      RelationScheme const& s,
      SearchOptions const&  opts = {}) {
    if (s.R.size() > 6) {
      throw BudgetExceeded("enumerate_relation_extensions: |R|", s.R.size(), 6);
    }
    std::uint64_t const cost = relation_search_cost(s);
    if (cost > opts.budget) {
      throw BudgetExceeded("enumerate_relation_extensions", cost, opts.budget);
    }
    std::size_t const n    = s.R.size();
    index_t const     zero = *s.find(s.X.identity(), s.B.identity());
    std::vector<std::vector<index_t>> by_fibre(s.B.size());
    for (index_t i = 0; i < n; ++i) {
      by_fibre[s.R[i].second].push_back(i);
    }
    auto const labels = s.labels();
    std::vector<RelationCandidate> out;
    detail::for_each_monoid_table(
        n,
        zero,
        [&](index_t i, index_t j) {
          return by_fibre[s.B.op(s.R[i].second, s.R[j].second)];
        },
        opts.propagate,
        [&](std::span<index_t const> t) {
          auto M = validate_monoid("R",
                                   labels,
                                   zero,
                                   std::vector<index_t>(t.begin(), t.end()),
                                   Notation::additive)
                       .value();
          out.push_back(evaluate_relation_candidate(s, M));
        });
    return out;
  }

  //! Runs the search over every admissible (R, u, q) for X and B with
  //! |R| ≤ max_r, in order of R (as a sorted list), then u, then q.
  //! With `projection_only`, only u = 0 and q(x, b) = x are tried.
  inline std::vector<RelationCandidate> enumerate_all_relation_extensions(
      FiniteMonoid const&  X,
      FiniteMonoid const&  B,
      bool                 projection_only,
      std::size_t          max_r,
      SearchOptions const& opts = {}) {
    using Pair               = RelationScheme::Pair;
    index_t const     one    = B.identity();
    std::size_t const nx     = X.size(), nb = B.size();
    std::vector<Pair> optional_pairs;
    for (index_t b = 0; b < nb; ++b) {
      for (index_t x = 0; x < nx; ++x) {
        if (b != one) {
          optional_pairs.emplace_back(x, b);
        }
      }
    }
    if (optional_pairs.size() > 20) {
      throw BudgetExceeded("enumerate_all_relation_extensions: subsets of X×B",
                           detail::sat_pow(2, optional_pairs.size()),
                           std::uint64_t(1) << 20);
    }
    std::vector<std::vector<Pair>> relations;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << optional_pairs.size());
         ++mask) {
      std::vector<Pair> R;
      for (index_t x = 0; x < nx; ++x) {
        R.emplace_back(x, one);
      }
      for (std::size_t i = 0; i < optional_pairs.size(); ++i) {
        if (mask >> i & 1) {
          R.push_back(optional_pairs[i]);
        }
      }
      if (R.size() <= max_r) {
        std::sort(R.begin(), R.end(), detail::by_b_then_x);
        relations.push_back(std::move(R));
      }
    }
    std::sort(relations.begin(), relations.end());

    std::vector<RelationCandidate> out;
    auto run = [&](Expected<RelationScheme> const& s) {
      if (s) {
        auto part = enumerate_relation_extensions(*s, opts);
        out.insert(out.end(), part.begin(), part.end());
      }
    };
    for (auto const& R : relations) {
      if (projection_only) {
        run(projection_scheme(X, B, R));
        continue;
      }
      // u(1) = 0; u(b) ranges over the fibre of b
      std::vector<index_t> u(nb, X.identity());
      auto rec_u = [&](auto& self, index_t b) -> void {
        if (b == nb) {
          // q: fixed on X×{1}; elsewhere fibre-injective with q(u(b)Rb) = 0
          std::vector<index_t> q(R.size(), UNDEFINED);
          std::vector<std::size_t> free;
          for (std::size_t i = 0; i < R.size(); ++i) {
            if (R[i].second == one) {
              q[i] = R[i].first;
            } else if (R[i].first == u[R[i].second]) {
              q[i] = X.identity();
            } else {
              free.push_back(i);
            }
          }
          auto rec_q = [&](auto& qself, std::size_t f) -> void {
            if (f == free.size()) {
              run(make_relation_scheme(X, B, R, u, q));
              return;
            }
            for (index_t v = 0; v < nx; ++v) {
              q[free[f]] = v;
              qself(qself, f + 1);
            }
          };
          rec_q(rec_q, 0);
          return;
        }
        if (b == one) {
          self(self, b + 1);
          return;
        }
        for (auto [x, bb] : R) {
          if (bb == b) {
            u[b] = x;
            self(self, b + 1);
          }
        }
      };
      rec_u(rec_u, 0);
    }
    return out;
  }

}  // namespace sbp

#endif  // SBP_RELATION_HPP_

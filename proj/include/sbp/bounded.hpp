// Partial monoids obtained by truncating infinite ones, and coverage-aware
// checks: an identity is tested on a tuple only if every value it needs is
// defined, and skipped tuples are counted rather than hidden.

#ifndef SBP_BOUNDED_HPP_
#define SBP_BOUNDED_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string, to_string
#include <utility>   // for pair, move
#include <vector>    // for vector

#include "core.hpp"    // for index_t, UNDEFINED, Violation
#include "monoid.hpp"  // for FiniteMonoid

namespace sbp {

  //! A carrier with an identity and an operation that may be undefined on
  //! some pairs. Defined entries are assumed to agree with an ambient monoid.
  class PartialMonoid {
   public:
    PartialMonoid(std::string              name,
                  std::vector<std::string> labels,
                  index_t                  identity,
                  std::vector<index_t>     table)
        : name_(std::move(name)),
          labels_(std::move(labels)),
          identity_(identity),
          table_(std::move(table)) {}

    //! The total monoid viewed as a partial one.
    explicit PartialMonoid(FiniteMonoid const& M)
        : PartialMonoid(M.name(),
                        M.elements(),
                        M.identity(),
                        std::vector<index_t>(M.table().begin(),
                                             M.table().end())) {}

    std::string const& name() const noexcept {
      return name_;
    }
    std::size_t size() const noexcept {
      return labels_.size();
    }
    index_t identity() const noexcept {
      return identity_;
    }
    std::string const& label(index_t i) const {
      return labels_[i];
    }

    //! UNDEFINED when either argument is UNDEFINED or the sum is undefined.
    index_t op(index_t i, index_t j) const noexcept {
      if (i == UNDEFINED || j == UNDEFINED) {
        return UNDEFINED;
      }
      return table_[i * size() + j];
    }

    std::optional<index_t> try_op(index_t i, index_t j) const noexcept {
      index_t v = op(i, j);
      return v == UNDEFINED ? std::nullopt : std::optional<index_t>(v);
    }

    std::size_t defined_pairs() const noexcept {
      std::size_t n = 0;
      for (index_t v : table_) {
        n += v != UNDEFINED;
      }
      return n;
    }

   private:
    std::string              name_;
    std::vector<std::string> labels_;
    index_t                  identity_;
    std::vector<index_t>     table_;
  };

  //! {0, 1, ..., bound} under addition, defined when the sum is ≤ bound.
  inline PartialMonoid truncated_naturals(std::size_t bound) {
    std::size_t const        n = bound + 1;
    std::vector<std::string> labels;
    std::vector<index_t>     table(n * n, UNDEFINED);
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::to_string(i));
      for (std::size_t j = 0; i + j < n; ++j) {
        table[i * n + j] = static_cast<index_t>(i + j);
      }
    }
    return PartialMonoid("N<=" + std::to_string(bound), std::move(labels), 0,
                         std::move(table));
  }

  //! Pass and skip counts for one identity.
  struct CoverageLine {
    std::string              name;
    std::uint64_t            checked = 0;
    std::uint64_t            skipped = 0;
    std::optional<Violation> failure;
  };

  struct CoverageReport {
    std::vector<CoverageLine> lines;

    bool all_hold() const noexcept {
      for (auto const& l : lines) {
        if (l.failure) {
          return false;
        }
      }
      return true;
    }

    CoverageLine const* find(std::string const& name) const {
      for (auto const& l : lines) {
        if (l.name == name) {
          return &l;
        }
      }
      return nullptr;
    }
  };

  namespace detail {
    // Collects results for one identity: `record(lhs, rhs, witness)` skips
    // the tuple if either side is UNDEFINED.
    class CoverageRecorder {
     public:
      explicit CoverageRecorder(std::string name) {
        line_.name = std::move(name);
      }

      void record(index_t lhs, index_t rhs, std::vector<index_t> witness) {
        if (lhs == UNDEFINED || rhs == UNDEFINED) {
          ++line_.skipped;
          return;
        }
        ++line_.checked;
        if (lhs != rhs && !line_.failure) {
          line_.failure
              = Violation{"IdentityFails", line_.name, std::move(witness), ""};
        }
      }

      void fail(std::vector<index_t> witness) {
        ++line_.checked;
        if (!line_.failure) {
          line_.failure
              = Violation{"IdentityFails", line_.name, std::move(witness), ""};
        }
      }

      void pass() {
        ++line_.checked;
      }

      CoverageLine take() {
        return std::move(line_);
      }

     private:
      CoverageLine line_;
    };
  }  // namespace detail

  //! Unit laws and associativity on every triple whose products are defined.
  inline CoverageReport check_partial_monoid(PartialMonoid const& M) {
    CoverageReport            r;
    detail::CoverageRecorder  unit("unit"), assoc("associativity");
    index_t const             e = M.identity();
    for (index_t i = 0; i < M.size(); ++i) {
      unit.record(M.op(e, i), i, {i});
      unit.record(M.op(i, e), i, {i});
      for (index_t j = 0; j < M.size(); ++j) {
        for (index_t k = 0; k < M.size(); ++k) {
          assoc.record(M.op(M.op(i, j), k), M.op(i, M.op(j, k)), {i, j, k});
        }
      }
    }
    r.lines.push_back(unit.take());
    r.lines.push_back(assoc.take());
    return r;
  }

  //! A tuple (X, A, B, p, k, q, s) over partial monoids; maps are total.
  struct PartialSemiBiproduct {
    PartialMonoid        X, A, B;
    std::vector<index_t> p, k, q, s;
  };

  //! The five conditions, homomorphism of p and k (required) and of q and s
  //! (reported), the correction system x^b = q(k(x) + s(b)), injectivity of
  //! a ↦ (q(a), p(a)), its inverse (x, b) ↦ k(x) + s(b), q(a) = q(a)^{p(a)},
  //! and the decomposition a + a' = k(u) + s(p(a + a')).
  //!
  //! Lines: "p hom", "k hom", "ps=1", "qk=1", "kq+sp=1", "pk=0", "qs=0",
  //! "q hom", "s hom", "x^b=x", "beta injective", "alpha beta=1",
  //! "beta alpha=1", "q(a)=q(a)^p(a)", "decomposition".
  inline CoverageReport verify_partial_semibiproduct(
      PartialSemiBiproduct const& t) {
    auto const&    X = t.X;
    auto const&    A = t.A;
    auto const&    B = t.B;
    CoverageReport r;
    auto map = [](std::vector<index_t> const& f, index_t a) {
      return a == UNDEFINED ? UNDEFINED : f[a];
    };
    auto hom = [&](char const* name, std::vector<index_t> const& f,
                   PartialMonoid const& D, PartialMonoid const& C) {
      detail::CoverageRecorder rec(name);
      for (index_t a = 0; a < D.size(); ++a) {
        for (index_t b = 0; b < D.size(); ++b) {
          rec.record(map(f, D.op(a, b)), C.op(f[a], f[b]), {a, b});
        }
      }
      r.lines.push_back(rec.take());
    };
    hom("p hom", t.p, A, B);
    hom("k hom", t.k, X, A);

    auto equation = [&](char const* name, std::size_t n, auto&& lhs,
                        auto&& rhs) {
      detail::CoverageRecorder rec(name);
      for (index_t a = 0; a < n; ++a) {
        rec.record(lhs(a), rhs(a), {a});
      }
      r.lines.push_back(rec.take());
    };
    equation("ps=1", B.size(), [&](index_t b) { return t.p[t.s[b]]; },
             [](index_t b) { return b; });
    equation("qk=1", X.size(), [&](index_t x) { return t.q[t.k[x]]; },
             [](index_t x) { return x; });
    equation("kq+sp=1", A.size(),
             [&](index_t a) { return A.op(t.k[t.q[a]], t.s[t.p[a]]); },
             [](index_t a) { return a; });
    equation("pk=0", X.size(), [&](index_t x) { return t.p[t.k[x]]; },
             [&](index_t) { return B.identity(); });
    equation("qs=0", B.size(), [&](index_t b) { return t.q[t.s[b]]; },
             [&](index_t) { return X.identity(); });

    hom("q hom", t.q, A, X);
    hom("s hom", t.s, B, A);

    auto corr = [&](index_t x, index_t b) {
      return map(t.q, A.op(t.k[x], t.s[b]));
    };
    auto dot = [&](index_t b, index_t x) {
      return map(t.q, A.op(t.s[b], t.k[x]));
    };
    auto cross = [&](index_t b, index_t c) {
      return map(t.q, A.op(t.s[b], t.s[c]));
    };
    {
      detail::CoverageRecorder rec("x^b=x");
      for (index_t x = 0; x < X.size(); ++x) {
        for (index_t b = 0; b < B.size(); ++b) {
          rec.record(corr(x, b), x, {x, b});
        }
      }
      r.lines.push_back(rec.take());
    }
    {
      detail::CoverageRecorder rec("beta injective");
      std::vector<index_t>     seen(X.size() * B.size(), UNDEFINED);
      for (index_t a = 0; a < A.size(); ++a) {
        auto& slot = seen[t.p[a] * X.size() + t.q[a]];
        if (slot != UNDEFINED) {
          rec.fail({slot, a});
        } else {
          rec.pass();
          slot = a;
        }
      }
      r.lines.push_back(rec.take());
    }
    equation("alpha beta=1", A.size(),
             [&](index_t a) { return A.op(t.k[t.q[a]], t.s[t.p[a]]); },
             [](index_t a) { return a; });
    {
      detail::CoverageRecorder rec("beta alpha=1");
      for (index_t x = 0; x < X.size(); ++x) {
        for (index_t b = 0; b < B.size(); ++b) {
          if (corr(x, b) != x) {
            continue;  // (x, b) is not of the form (x^b, b)
          }
          index_t const a = A.op(t.k[x], t.s[b]);
          rec.record(map(t.q, a), x, {x, b});
          rec.record(map(t.p, a), b, {x, b});
        }
      }
      r.lines.push_back(rec.take());
    }
    equation("q(a)=q(a)^p(a)", A.size(),
             [&](index_t a) { return corr(t.q[a], t.p[a]); },
             [&](index_t a) { return t.q[a]; });
    {
      detail::CoverageRecorder rec("decomposition");
      for (index_t a = 0; a < A.size(); ++a) {
        for (index_t a2 = 0; a2 < A.size(); ++a2) {
          index_t const b = t.p[a], b2 = t.p[a2];
          index_t const u
              = X.op(X.op(t.q[a], dot(b, t.q[a2])), cross(b, b2));
          index_t const sum = A.op(a, a2);
          index_t const v   = map(t.p, sum);
          rec.record(A.op(map(t.k, u), map(t.s, v)), sum, {a, a2});
        }
      }
      r.lines.push_back(rec.take());
    }
    return r;
  }

  //! Relation data over partial X and B, with R given by its pairs and its
  //! (partial) operation.
  struct PartialRelation {
    PartialMonoid                           X, B;
    std::vector<std::pair<index_t, index_t>> R;  // (x, b), the elements of M
    PartialMonoid                           M;
    std::vector<index_t>                    u;
    std::vector<index_t>                    q;
  };

  //! The construction conditions and acceptance filters on a partial
  //! relation, and the resulting tuple p(xRb) = b, k(x) = xR1,
  //! s(b) = u(b)Rb. Lines: "xR1", "u(b)Rb", "q injective on fibres",
  //! "neutral 0R1", "p hom", "x⊕x'=x+x'", "q(xRb)^b=q(xRb)",
  //! "xRb=q(xRb)R1+u(b)Rb".
  inline std::pair<CoverageReport, std::optional<PartialSemiBiproduct>>
  check_partial_relation(PartialRelation const& rel) {
    auto const&    X = rel.X;
    auto const&    B = rel.B;
    auto const&    M = rel.M;
    index_t const  zero = X.identity(), one = B.identity();
    CoverageReport r;
    auto find = [&](index_t x, index_t b) -> index_t {
      for (index_t i = 0; i < rel.R.size(); ++i) {
        if (rel.R[i] == std::pair{x, b}) {
          return i;
        }
      }
      return UNDEFINED;
    };
    std::vector<index_t> k(X.size()), s(B.size()), p(rel.R.size());
    {
      detail::CoverageRecorder rec("xR1");
      for (index_t x = 0; x < X.size(); ++x) {
        k[x] = find(x, one);
        if (k[x] == UNDEFINED || rel.q[k[x]] != x) {
          rec.fail({x});
        } else {
          rec.pass();
        }
      }
      r.lines.push_back(rec.take());
    }
    {
      detail::CoverageRecorder rec("u(b)Rb");
      for (index_t b = 0; b < B.size(); ++b) {
        s[b] = find(rel.u[b], b);
        if (s[b] == UNDEFINED || rel.q[s[b]] != zero) {
          rec.fail({b});
        } else {
          rec.pass();
        }
      }
      r.lines.push_back(rec.take());
    }
    {
      detail::CoverageRecorder rec("q injective on fibres");
      for (index_t i = 0; i < rel.R.size(); ++i) {
        for (index_t j = i + 1; j < rel.R.size(); ++j) {
          if (rel.R[i].second == rel.R[j].second) {
            if (rel.q[i] == rel.q[j]) {
              rec.fail({i, j});
            } else {
              rec.pass();
            }
          }
        }
      }
      r.lines.push_back(rec.take());
    }
    if (!r.all_hold()) {
      return {std::move(r), std::nullopt};
    }
    for (index_t i = 0; i < rel.R.size(); ++i) {
      p[i] = rel.R[i].second;
    }
    {
      detail::CoverageRecorder rec("neutral 0R1");
      if (M.identity() != k[zero]) {
        rec.fail({M.identity()});
      } else {
        rec.pass();
      }
      r.lines.push_back(rec.take());
    }
    {
      detail::CoverageRecorder rec("p hom");
      for (index_t a = 0; a < M.size(); ++a) {
        for (index_t c = 0; c < M.size(); ++c) {
          index_t const ac = M.op(a, c);
          rec.record(ac == UNDEFINED ? UNDEFINED : p[ac], B.op(p[a], p[c]),
                     {a, c});
        }
      }
      r.lines.push_back(rec.take());
    }
    auto q = [&](index_t a) { return a == UNDEFINED ? UNDEFINED : rel.q[a]; };
    {
      detail::CoverageRecorder rec("x⊕x'=x+x'");
      for (index_t x = 0; x < X.size(); ++x) {
        for (index_t y = 0; y < X.size(); ++y) {
          rec.record(q(M.op(k[x], k[y])), X.op(x, y), {x, y});
        }
      }
      r.lines.push_back(rec.take());
    }
    {
      detail::CoverageRecorder rec("q(xRb)^b=q(xRb)");
      for (index_t i = 0; i < rel.R.size(); ++i) {
        index_t const y = rel.q[i], b = rel.R[i].second;
        rec.record(q(M.op(k[y], s[b])), y, {rel.R[i].first, b});
      }
      r.lines.push_back(rec.take());
    }
    {
      detail::CoverageRecorder rec("xRb=q(xRb)R1+u(b)Rb");
      for (index_t i = 0; i < rel.R.size(); ++i) {
        rec.record(M.op(k[rel.q[i]], s[rel.R[i].second]), i,
                   {rel.R[i].first, rel.R[i].second});
      }
      r.lines.push_back(rec.take());
    }
    return {std::move(r), PartialSemiBiproduct{X, M, B, p, k, rel.q, s}};
  }

  //! R = {(x, b) : b ≤ x ≤ bound} ⊆ N × N with componentwise addition
  //! (defined when the first component stays ≤ bound), q(x, b) = x - b and
  //! u(b) = b. Elements of R are ordered by (b, x).
  inline PartialRelation naturals_order_relation(std::size_t bound) {
    auto N = truncated_naturals(bound);
    std::vector<std::pair<index_t, index_t>> R;
    std::vector<std::string>                 labels;
    std::vector<index_t>                     q;
    for (index_t b = 0; b <= bound; ++b) {
      for (index_t x = b; x <= bound; ++x) {
        R.emplace_back(x, b);
        labels.push_back(std::to_string(x) + "R" + std::to_string(b));
        q.push_back(x - b);
      }
    }
    std::size_t const    n = R.size();
    std::vector<index_t> table(n * n, UNDEFINED);
    auto index_of = [&](index_t x, index_t b) {
      // position of (x, b) in the (b, x) order
      index_t pos = 0;
      for (index_t c = 0; c < b; ++c) {
        pos += static_cast<index_t>(bound + 1 - c);
      }
      return pos + (x - b);
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        index_t const x = R[i].first + R[j].first;
        index_t const b = R[i].second + R[j].second;
        if (x <= bound) {
          table[i * n + j] = index_of(x, b);
        }
      }
    }
    std::vector<index_t> u(bound + 1);
    for (index_t b = 0; b <= bound; ++b) {
      u[b] = b;
    }
    PartialMonoid M("R<=" + std::to_string(bound), std::move(labels), 0,
                    std::move(table));
    return PartialRelation{N, N, std::move(R), std::move(M), std::move(u),
                           std::move(q)};
  }

}  // namespace sbp

#endif  // SBP_BOUNDED_HPP_

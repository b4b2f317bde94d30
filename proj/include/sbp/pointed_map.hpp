// Zero-preserving maps between finite monoids, homomorphisms, and the monoid
// Map(A, B) of pointed maps under pointwise addition.

#ifndef SBP_POINTED_MAP_HPP_
#define SBP_POINTED_MAP_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair, move
#include <vector>    // for vector

#include "core.hpp"    // for index_t, Expected, DomainMismatch
#include "monoid.hpp"  // for FiniteMonoid

namespace sbp {

  class PointedMap;
  class Homomorphism;

  namespace detail {
    inline PointedMap unchecked_map(FiniteMonoid, FiniteMonoid,
                                    std::vector<index_t>);
    inline Homomorphism unchecked_hom(PointedMap);
  }  // namespace detail

  //! A function between the carriers of two monoids sending the identity to
  //! the identity. It need not preserve the operation.
  class PointedMap {
   public:
    //! Validates lengths, ranges and zero preservation.
    static Expected<PointedMap> make(FiniteMonoid         dom,
                                     FiniteMonoid         cod,
                                     std::vector<index_t> values) {
      if (values.size() != dom.size()) {
        return Violation{"MalformedMap",
                         "",
                         {},
                         "expected " + std::to_string(dom.size())
                             + " values, got "
                             + std::to_string(values.size())};
      }
      for (std::size_t a = 0; a < values.size(); ++a) {
        if (values[a] >= cod.size()) {
          return Violation{"IndexOutOfRange",
                           "values",
                           {static_cast<index_t>(a)},
                           "value " + std::to_string(values[a])};
        }
      }
      if (values[dom.identity()] != cod.identity()) {
        return Violation{"NotZeroPreserving", "", {dom.identity()}, ""};
      }
      return PointedMap(std::move(dom), std::move(cod), std::move(values));
    }

    FiniteMonoid const& domain() const noexcept {
      return dom_;
    }

    FiniteMonoid const& codomain() const noexcept {
      return cod_;
    }

    std::vector<index_t> const& values() const noexcept {
      return values_;
    }

    index_t operator()(index_t a) const noexcept {
      return values_[a];
    }

    //! Equal values over structurally equal endpoints.
    friend bool operator==(PointedMap const& f, PointedMap const& g) {
      return f.values_ == g.values_ && f.dom_.same_structure(g.dom_)
             && f.cod_.same_structure(g.cod_);
    }

   private:
    PointedMap(FiniteMonoid dom, FiniteMonoid cod, std::vector<index_t> v)
        : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(v)) {}

    friend PointedMap detail::unchecked_map(FiniteMonoid,
                                            FiniteMonoid,
                                            std::vector<index_t>);

    FiniteMonoid         dom_;
    FiniteMonoid         cod_;
    std::vector<index_t> values_;
  };

  namespace detail {
    // For values produced by operations that preserve the invariants.
    inline PointedMap unchecked_map(FiniteMonoid         dom,
                                    FiniteMonoid         cod,
                                    std::vector<index_t> values) {
      return PointedMap(std::move(dom), std::move(cod), std::move(values));
    }
  }  // namespace detail

  //! Outcome of `is_homomorphism`.
  struct HomCheck {
    bool                                       holds = true;
    std::optional<std::pair<index_t, index_t>> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  //! True iff `f(a + a') = f(a) + f(a')` for all pairs; otherwise the first
  //! failing pair in lexicographic order.
  inline HomCheck is_homomorphism(PointedMap const& f) {
    auto const& A = f.domain();
    auto const& B = f.codomain();
    for (index_t a = 0; a < A.size(); ++a) {
      for (index_t a2 = 0; a2 < A.size(); ++a2) {
        if (f(A.op(a, a2)) != B.op(f(a), f(a2))) {
          return {false, std::make_pair(a, a2)};
        }
      }
    }
    return {};
  }

  //! A pointed map known to preserve the operation.
  class Homomorphism {
   public:
    static Expected<Homomorphism> make(PointedMap f) {
      if (auto h = is_homomorphism(f); !h) {
        return Violation{"NotHomomorphism",
                         "",
                         {h.witness->first, h.witness->second},
                         ""};
      }
      return Homomorphism(std::move(f));
    }

    static Expected<Homomorphism> make(FiniteMonoid         dom,
                                       FiniteMonoid         cod,
                                       std::vector<index_t> values) {
      auto f = PointedMap::make(std::move(dom), std::move(cod),
                                std::move(values));
      if (!f) {
        return f.error();
      }
      return make(std::move(f).value());
    }

    PointedMap const& map() const noexcept {
      return f_;
    }

    FiniteMonoid const& domain() const noexcept {
      return f_.domain();
    }

    FiniteMonoid const& codomain() const noexcept {
      return f_.codomain();
    }

    std::vector<index_t> const& values() const noexcept {
      return f_.values();
    }

    index_t operator()(index_t a) const noexcept {
      return f_(a);
    }

    operator PointedMap const&() const noexcept {  // NOLINT
      return f_;
    }

    friend bool operator==(Homomorphism const&, Homomorphism const&) = default;

   private:
    explicit Homomorphism(PointedMap f) : f_(std::move(f)) {}

    friend Homomorphism detail::unchecked_hom(PointedMap);

    PointedMap f_;
  };

  namespace detail {
    inline Homomorphism unchecked_hom(PointedMap f) {
      return Homomorphism(std::move(f));
    }
  }  // namespace detail

  //! The constant map onto the identity of `B`.
  inline PointedMap zero_map(FiniteMonoid const& A, FiniteMonoid const& B) {
    return detail::unchecked_map(
        A, B, std::vector<index_t>(A.size(), B.identity()));
  }

  inline PointedMap identity_map(FiniteMonoid const& A) {
    std::vector<index_t> v(A.size());
    for (index_t a = 0; a < A.size(); ++a) {
      v[a] = a;
    }
    return detail::unchecked_map(A, A, std::move(v));
  }

  inline Homomorphism zero_hom(FiniteMonoid const& A, FiniteMonoid const& B) {
    return detail::unchecked_hom(zero_map(A, B));
  }

  inline Homomorphism identity_hom(FiniteMonoid const& A) {
    return detail::unchecked_hom(identity_map(A));
  }

  //! `(f + g)(a) = f(a) + g(a)`.
  inline PointedMap pointwise_add(PointedMap const& f, PointedMap const& g) {
    if (!f.domain().same_structure(g.domain())
        || !f.codomain().same_structure(g.codomain())) {
      throw DomainMismatch("pointwise_add: summands are not parallel");
    }
    auto const&          B = f.codomain();
    std::vector<index_t> v(f.values().size());
    for (std::size_t a = 0; a < v.size(); ++a) {
      v[a] = B.op(f.values()[a], g.values()[a]);
    }
    return detail::unchecked_map(f.domain(), B, std::move(v));
  }

  //! `(g ∘ f)(a) = g(f(a))`.
  inline PointedMap compose(PointedMap const& g, PointedMap const& f) {
    if (!f.codomain().same_structure(g.domain())) {
      throw DomainMismatch("compose: codomain of the right factor is not the "
                           "domain of the left factor");
    }
    std::vector<index_t> v(f.values().size());
    for (std::size_t a = 0; a < v.size(); ++a) {
      v[a] = g.values()[f.values()[a]];
    }
    return detail::unchecked_map(f.domain(), g.codomain(), std::move(v));
  }

  inline Homomorphism compose(Homomorphism const& g, Homomorphism const& f) {
    return detail::unchecked_hom(compose(g.map(), f.map()));
  }

  inline bool is_zero(PointedMap const& f) {
    for (index_t v : f.values()) {
      if (v != f.codomain().identity()) {
        return false;
      }
    }
    return true;
  }

  inline bool is_injective(PointedMap const& f) {
    std::vector<bool> seen(f.codomain().size(), false);
    for (index_t v : f.values()) {
      if (seen[v]) {
        return false;
      }
      seen[v] = true;
    }
    return true;
  }

  inline bool is_surjective(PointedMap const& f) {
    std::vector<bool> seen(f.codomain().size(), false);
    std::size_t       count = 0;
    for (index_t v : f.values()) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
      }
    }
    return count == f.codomain().size();
  }

  inline bool is_bijective(PointedMap const& f) {
    return f.domain().size() == f.codomain().size() && is_injective(f);
  }

  //! Inverse of a bijective pointed map.
  inline PointedMap inverse(PointedMap const& f) {
    if (!is_bijective(f)) {
      throw Error("inverse: map is not bijective");
    }
    std::vector<index_t> v(f.values().size());
    for (index_t a = 0; a < f.values().size(); ++a) {
      v[f.values()[a]] = a;
    }
    return detail::unchecked_map(f.codomain(), f.domain(), std::move(v));
  }

  //! Calls `fn(PointedMap const&)` for every pointed map A → B, in
  //! lexicographic order of the value arrays.
  template <typename Fn>
  void for_each_pointed_map(FiniteMonoid const& A,
                            FiniteMonoid const& B,
                            Fn&&                fn) {
    std::size_t const    n = A.size();
    std::vector<index_t> v(n, 0);
    v[A.identity()] = B.identity();
    std::vector<std::size_t> free;
    for (index_t a = 0; a < n; ++a) {
      if (a != A.identity()) {
        free.push_back(a);
      }
    }
    while (true) {
      fn(detail::unchecked_map(A, B, v));
      // odometer with the last free position varying fastest
      std::size_t i = free.size();
      while (i > 0) {
        --i;
        if (++v[free[i]] < B.size()) {
          break;
        }
        v[free[i]] = 0;
        if (i == 0) {
          return;
        }
      }
      if (free.empty()) {
        return;
      }
    }
  }

  inline std::vector<PointedMap> all_pointed_maps(FiniteMonoid const& A,
                                                  FiniteMonoid const& B) {
    std::vector<PointedMap> out;
    for_each_pointed_map(A, B, [&](PointedMap const& f) { out.push_back(f); });
    return out;
  }

  //! All homomorphisms A → B in lexicographic order of the value arrays,
  //! found by backtracking with pairwise pruning.
  inline std::vector<Homomorphism> all_homomorphisms(FiniteMonoid const& A,
                                                     FiniteMonoid const& B) {
    std::size_t const         n = A.size();
    std::vector<index_t>      v(n, UNDEFINED);
    std::vector<Homomorphism> out;
    v[A.identity()] = B.identity();
    auto consistent = [&](index_t a) {
      // every product involving a and already-assigned elements
      for (index_t c = 0; c < n; ++c) {
        if (v[c] == UNDEFINED) {
          continue;
        }
        for (auto [x, y] : {std::pair{a, c}, std::pair{c, a}}) {
          index_t xy = A.op(x, y);
          if (v[xy] != UNDEFINED && v[xy] != B.op(v[x], v[y])) {
            return false;
          }
        }
      }
      // products whose result is a
      for (index_t x = 0; x < n; ++x) {
        for (index_t y = 0; y < n; ++y) {
          if (A.op(x, y) == a && v[x] != UNDEFINED && v[y] != UNDEFINED
              && v[a] != B.op(v[x], v[y])) {
            return false;
          }
        }
      }
      return true;
    };
    auto rec = [&](auto& self, index_t a) -> void {
      if (a == n) {
        out.push_back(detail::unchecked_hom(detail::unchecked_map(A, B, v)));
        return;
      }
      if (a == A.identity()) {
        if (consistent(a)) {
          self(self, a + 1);
        }
        return;
      }
      for (index_t b = 0; b < B.size(); ++b) {
        v[a] = b;
        if (consistent(a)) {
          self(self, a + 1);
        }
      }
      v[a] = UNDEFINED;
    };
    rec(rec, 0);
    return out;
  }

  //! A submonoid together with its inclusion.
  struct Kernel {
    FiniteMonoid monoid;
    Homomorphism inclusion;
  };

  //! `{a : p(a) = 1}` with the induced operation, in ambient order.
  inline Kernel kernel(Homomorphism const& p) {
    auto const&          A = p.domain();
    index_t const        one = p.codomain().identity();
    std::vector<index_t> members;
    std::vector<index_t> position(A.size(), UNDEFINED);
    for (index_t a = 0; a < A.size(); ++a) {
      if (p(a) == one) {
        position[a] = static_cast<index_t>(members.size());
        members.push_back(a);
      }
    }
    std::size_t const        m = members.size();
    std::vector<index_t>     table(m * m);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
      labels.push_back(A.label(members[i]));
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = position[A.op(members[i], members[j])];
      }
    }
    auto K = validate_monoid("ker(" + A.name() + ")",
                             std::move(labels),
                             position[A.identity()],
                             std::move(table),
                             A.notation())
                 .value();
    return Kernel{K, detail::unchecked_hom(detail::unchecked_map(K, A, members))};
  }

}  // namespace sbp

#endif  // SBP_POINTED_MAP_HPP_

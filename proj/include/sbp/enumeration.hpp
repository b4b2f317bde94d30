// Exhaustive search for pseudo-actions, morphisms of semi-biproducts,
// classification up to isomorphism, and the split short five check.

#ifndef SBP_ENUMERATION_HPP_
#define SBP_ENUMERATION_HPP_

#include <algorithm>  // for sort, min
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <iterator>   // for make_move_iterator
#include <numeric>    // for iota
#include <optional>   // for optional
#include <span>       // for span
#include <string>     // for string
#include <tuple>      // for tuple
#include <utility>    // for move, pair
#include <vector>     // for vector

#include "census.hpp"         // for automorphisms
#include "core.hpp"           // for index_t, BudgetExceeded, Verdict
#include "monoid.hpp"         // for FiniteMonoid
#include "parallel.hpp"       // for parallel_map, resolve_jobs
#include "pointed_map.hpp"    // for PointedMap, Homomorphism
#include "pseudo_action.hpp"  // for PseudoAction
#include "search.hpp"         // for backtrack, Eval
#include "semibiproduct.hpp"  // for SemiBiproduct

namespace sbp {

  inline constexpr std::uint64_t DEFAULT_BUDGET = 100'000'000;

  struct SearchOptions {
    //! Upper bound on the worst-case number of elementary checks.
    std::uint64_t budget = DEFAULT_BUDGET;
    //! 0 means: use SBP_JOBS, falling back to 1.
    unsigned jobs = 0;
    //! Check constraints as soon as their cells are assigned, instead of
    //! only on complete candidates.
    bool propagate = false;
  };

  namespace detail {

    // Cell layout of the pseudo-action search. Each table entry is either
    // fixed by a unit law or is a search cell.
    class ActionLayout {
     public:
      ActionLayout(FiniteMonoid const& X, FiniteMonoid const& B)
          : X_(X), B_(B), nx_(X.size()), nb_(B.size()) {
        index_t const zero = X.identity(), one = B.identity();
        phi_.assign(nb_ * nx_, UNDEFINED);
        rho_.assign(nx_ * nb_, UNDEFINED);
        gamma_.assign(nb_ * nb_, UNDEFINED);
        for (index_t b = 0; b < nb_; ++b) {
          for (index_t x = 0; x < nx_; ++x) {
            if (b == one) {
              phi_[b * nx_ + x] = fixed(x);
            } else if (x == zero) {
              phi_[b * nx_ + x] = fixed(zero);
            } else {
              phi_[b * nx_ + x] = cells_++;
            }
          }
        }
        for (index_t x = 0; x < nx_; ++x) {
          for (index_t b = 0; b < nb_; ++b) {
            if (b == one) {
              rho_[x * nb_ + b] = fixed(x);
            } else if (x == zero) {
              rho_[x * nb_ + b] = fixed(zero);
            } else {
              rho_[x * nb_ + b] = cells_++;
            }
          }
        }
        for (index_t b = 0; b < nb_; ++b) {
          for (index_t c = 0; c < nb_; ++c) {
            if (b == one || c == one) {
              gamma_[b * nb_ + c] = fixed(zero);
            } else {
              gamma_[b * nb_ + c] = cells_++;
            }
          }
        }
      }

      std::size_t num_cells() const noexcept {
        return cells_;
      }

      std::size_t num_tuples() const noexcept {
        return nx_ * nx_ * nx_ * nb_ * nb_ * nb_;
      }

      // Tuple t encodes (b, b', b'', x, x', x'') with x'' fastest.
      Eval evaluate(std::size_t t, std::span<index_t const> cells) const {
        index_t const x2 = t % nx_;
        t /= nx_;
        index_t const x1 = t % nx_;
        t /= nx_;
        index_t const x = t % nx_;
        t /= nx_;
        index_t const b2 = t % nb_;
        t /= nb_;
        index_t const b1 = t % nb_;
        index_t const b  = t / nb_;

        std::size_t blocked = 0;
        index_t     y1, lhs, y2, rhs;
        if ((y1 = inner(x1, x2, b1, b2, cells, blocked)) == UNDEFINED
            || (lhs = inner(x, y1, b, B_.op(b1, b2), cells, blocked))
                   == UNDEFINED
            || (y2 = inner(x, x1, b, b1, cells, blocked)) == UNDEFINED
            || (rhs = inner(y2, x2, B_.op(b, b1), b2, cells, blocked))
                   == UNDEFINED) {
          return Eval::wait(blocked);
        }
        return lhs == rhs ? Eval::ok() : Eval::fail();
      }

      PseudoAction build(std::span<index_t const> cells) const {
        auto resolve = [&](std::vector<index_t> const& layout) {
          std::vector<index_t> out(layout.size());
          for (std::size_t i = 0; i < layout.size(); ++i) {
            out[i] = value(layout[i], cells);
          }
          return out;
        };
        return unchecked_action(X_, B_, resolve(phi_), resolve(rho_),
                                resolve(gamma_));
      }

     private:
      // Fixed entries are stored with the top bit set.
      static constexpr index_t FIXED = index_t(1) << 31;

      static index_t fixed(index_t v) noexcept {
        return v | FIXED;
      }

      static index_t value(index_t e, std::span<index_t const> cells) noexcept {
        return (e & FIXED) ? (e & ~FIXED) : cells[e];
      }

      index_t lookup(index_t                  e,
                     std::span<index_t const> cells,
                     std::size_t&             blocked) const noexcept {
        if (e & FIXED) {
          return e & ~FIXED;
        }
        if (cells[e] == UNDEFINED) {
          blocked = e;
        }
        return cells[e];
      }

      // (x + b·y + b×c)^{bc}
      index_t inner(index_t                  x,
                    index_t                  y,
                    index_t                  b,
                    index_t                  c,
                    std::span<index_t const> cells,
                    std::size_t&             blocked) const noexcept {
        index_t const by = lookup(phi_[b * nx_ + y], cells, blocked);
        if (by == UNDEFINED) {
          return UNDEFINED;
        }
        index_t const g = lookup(gamma_[b * nb_ + c], cells, blocked);
        if (g == UNDEFINED) {
          return UNDEFINED;
        }
        index_t const sum = X_.op(X_.op(x, by), g);
        return lookup(rho_[sum * nb_ + B_.op(b, c)], cells, blocked);
      }

      FiniteMonoid         X_;
      FiniteMonoid         B_;
      std::size_t          nx_;
      std::size_t          nb_;
      index_t              cells_ = 0;
      std::vector<index_t> phi_;
      std::vector<index_t> rho_;
      std::vector<index_t> gamma_;
    };

  }  // namespace detail

  //! Worst-case number of coherence-equation checks needed to enumerate the
  //! pseudo-actions of B on X: candidates × |X|³|B|³.
  inline std::uint64_t pseudo_action_search_cost(FiniteMonoid const& X,
                                                 FiniteMonoid const& B) {
    detail::ActionLayout const layout(X, B);
    return detail::sat_mul(detail::sat_pow(X.size(), layout.num_cells()),
                           layout.num_tuples());
  }

  //! All pseudo-actions of B on X in lexicographic order of (phi, rho, gamma).
  //! Entries forced by the unit laws are fixed; the free entries are filled
  //! pre-action first, then correction system, then factor system.
  //!
  //! Throws BudgetExceeded if the worst-case cost exceeds `opts.budget`.
  inline std::vector<PseudoAction> enumerate_pseudo_actions(
      FiniteMonoid const&  X,
      FiniteMonoid const&  B,
      SearchOptions const& opts = {}) {
    std::uint64_t const cost = pseudo_action_search_cost(X, B);
    if (cost > opts.budget) {
      throw BudgetExceeded("enumerate_pseudo_actions(" + X.name() + ", "
                               + B.name() + ")",
                           cost,
                           opts.budget);
    }
    detail::ActionLayout const layout(X, B);
    std::size_t const          ncells = layout.num_cells();
    std::vector<std::vector<index_t>> domains(ncells);
    for (auto& d : domains) {
      for (index_t x = 0; x < X.size(); ++x) {
        d.push_back(x);
      }
    }
    if (ncells == 0) {
      std::vector<PseudoAction> out;
      detail::backtrack(layout, domains, {}, 0, opts.propagate,
                        [&](std::span<index_t const> c) {
                          out.push_back(layout.build(c));
                        });
      return out;
    }
    // partition on the value of the first cell
    auto parts = parallel_map(
        X.size(), resolve_jobs(opts.jobs), [&](std::size_t first) {
          std::vector<PseudoAction> part;
          std::vector<index_t>      cells(ncells, UNDEFINED);
          cells[0] = static_cast<index_t>(first);
          detail::backtrack(layout, domains, std::move(cells), 1,
                            opts.propagate, [&](std::span<index_t const> c) {
                              part.push_back(layout.build(c));
                            });
          return part;
        });
    std::vector<PseudoAction> out;
    for (auto& p : parts) {
      out.insert(out.end(), std::make_move_iterator(p.begin()),
                 std::make_move_iterator(p.end()));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  //! Homomorphisms (f0, f1, f2) with q'f1 = f0q, p'f1 = f2p, k'f0 = f1k and
  //! f1s = s'f2.
  class SemiBiproductMorphism {
   public:
    static Expected<SemiBiproductMorphism> make(SemiBiproduct source,
                                                SemiBiproduct target,
                                                Homomorphism  f0,
                                                Homomorphism  f1,
                                                Homomorphism  f2) {
      auto typed = [](Homomorphism const& f, FiniteMonoid const& dom,
                      FiniteMonoid const& cod, char const* name) {
        if (!f.domain().same_structure(dom)
            || !f.codomain().same_structure(cod)) {
          throw DomainMismatch(std::string("SemiBiproductMorphism: ") + name
                               + " has the wrong domain or codomain");
        }
      };
      typed(f0, source.X(), target.X(), "f0");
      typed(f1, source.A(), target.A(), "f1");
      typed(f2, source.B(), target.B(), "f2");
      auto square = [](char const* which, PointedMap const& l,
                       PointedMap const& r) -> std::optional<Violation> {
        for (index_t a = 0; a < l.values().size(); ++a) {
          if (l(a) != r(a)) {
            return Violation{"MorphismSquaresFail", which, {a}, ""};
          }
        }
        return std::nullopt;
      };
      if (auto v = square("q'f1=f0q", compose(target.q(), f1.map()),
                          compose(f0.map(), source.q()))) {
        return *v;
      }
      if (auto v = square("p'f1=f2p", compose(target.p().map(), f1.map()),
                          compose(f2.map(), source.p().map()))) {
        return *v;
      }
      if (auto v = square("k'f0=f1k", compose(target.k().map(), f0.map()),
                          compose(f1.map(), source.k().map()))) {
        return *v;
      }
      if (auto v = square("f1s=s'f2", compose(f1.map(), source.s()),
                          compose(target.s(), f2.map()))) {
        return *v;
      }
      return SemiBiproductMorphism(std::move(source), std::move(target),
                                   std::move(f0), std::move(f1),
                                   std::move(f2));
    }

    SemiBiproduct const& source() const noexcept {
      return source_;
    }
    SemiBiproduct const& target() const noexcept {
      return target_;
    }
    Homomorphism const& f0() const noexcept {
      return f0_;
    }
    Homomorphism const& f1() const noexcept {
      return f1_;
    }
    Homomorphism const& f2() const noexcept {
      return f2_;
    }

   private:
    SemiBiproductMorphism(SemiBiproduct source,
                          SemiBiproduct target,
                          Homomorphism  f0,
                          Homomorphism  f1,
                          Homomorphism  f2)
        : source_(std::move(source)),
          target_(std::move(target)),
          f0_(std::move(f0)),
          f1_(std::move(f1)),
          f2_(std::move(f2)) {}

    SemiBiproduct source_;
    SemiBiproduct target_;
    Homomorphism  f0_;
    Homomorphism  f1_;
    Homomorphism  f2_;
  };

  //! The unique candidate for f1 given f0 and f2: since a ↦ (q'(a), p'(a))
  //! is injective on the target, the squares force
  //! f1(a) = the a' with (q'(a'), p'(a')) = (f0(q(a)), f2(p(a))).
  //! Returns a morphism if that candidate exists and is a homomorphism
  //! satisfying all four squares.
  inline std::optional<SemiBiproductMorphism> find_morphism(
      SemiBiproduct const& source,
      SemiBiproduct const& target,
      Homomorphism const&  f0,
      Homomorphism const&  f2) {
    auto const&          A  = source.A();
    auto const&          A2 = target.A();
    std::size_t const    nx = target.X().size();
    std::vector<index_t> lookup(nx * target.B().size(), UNDEFINED);
    for (index_t a = 0; a < A2.size(); ++a) {
      lookup[target.p()(a) * nx + target.q()(a)] = a;
    }
    std::vector<index_t> f1(A.size());
    for (index_t a = 0; a < A.size(); ++a) {
      f1[a] = lookup[f2(source.p()(a)) * nx + f0(source.q()(a))];
      if (f1[a] == UNDEFINED) {
        return std::nullopt;
      }
    }
    auto pm = PointedMap::make(A, A2, std::move(f1));
    if (!pm) {
      return std::nullopt;
    }
    auto h = Homomorphism::make(std::move(pm).value());
    if (!h) {
      return std::nullopt;
    }
    auto m = SemiBiproductMorphism::make(source, target, f0, std::move(h).value(), f2);
    if (!m) {
      return std::nullopt;
    }
    return std::move(m).value();
  }

  //! An isomorphism (id_X, f1, id_B) from source to target, if one exists.
  inline std::optional<SemiBiproductMorphism> find_isomorphism(
      SemiBiproduct const& source,
      SemiBiproduct const& target) {
    if (!source.X().same_structure(target.X())
        || !source.B().same_structure(target.B())
        || source.A().size() != target.A().size()) {
      return std::nullopt;
    }
    auto m = find_morphism(source, target, identity_hom(source.X()),
                           identity_hom(source.B()));
    if (m && is_bijective(m->f1().map())) {
      return m;
    }
    return std::nullopt;
  }

  struct SplitFiveResult {
    Verdict verdict;
    //! k∘f0⁻¹∘q' + s∘f2⁻¹∘p', when computed.
    std::optional<PointedMap> inverse;
  };

  //! For a morphism with f0 and f2 bijective: checks that f1 is bijective and
  //! that k∘f0⁻¹∘q' + s∘f2⁻¹∘p' is a homomorphism equal to f1⁻¹.
  inline SplitFiveResult split_five_check(SemiBiproductMorphism const& m) {
    SplitFiveResult out;
    if (!is_bijective(m.f0().map()) || !is_bijective(m.f2().map())) {
      out.verdict = Verdict::fail(
          {"PreconditionFail", "f0 and f2 must be bijective", {}, ""});
      return out;
    }
    auto const& S = m.source();
    auto const& T = m.target();
    out.inverse   = pointwise_add(
        compose(compose(S.k().map(), inverse(m.f0().map())), T.q()),
        compose(compose(S.s(), inverse(m.f2().map())), T.p().map()));
    if (!is_bijective(m.f1().map())) {
      out.verdict = Verdict::fail({"SplitFiveFails", "f1 bijective", {}, ""});
      return out;
    }
    auto const f1inv = inverse(m.f1().map());
    for (index_t a = 0; a < f1inv.values().size(); ++a) {
      if ((*out.inverse)(a) != f1inv(a)) {
        out.verdict
            = Verdict::fail({"SplitFiveFails", "inverse formula", {a}, ""});
        return out;
      }
    }
    if (auto h = is_homomorphism(*out.inverse); !h) {
      out.verdict = Verdict::fail({"SplitFiveFails",
                                   "inverse homomorphism",
                                   {h.witness->first, h.witness->second},
                                   ""});
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  enum class IsoMode {
    //! (id_X, f1, id_B)
    fixed_endpoints,
    //! (f0, f1, f2) with f0, f2 automorphisms
    free_endpoints
  };

  struct IsoClass {
    //! Index into the input of the lexicographically least member.
    std::size_t representative;
    //! Input indices, ascending.
    std::vector<std::size_t> members;
  };

  namespace detail {
    inline bool table_less(SemiBiproduct const& l, SemiBiproduct const& r) {
      auto key = [](SemiBiproduct const& x) {
        auto t = x.A().table();
        return std::tuple(std::vector<index_t>(t.begin(), t.end()),
                          x.p().values(),
                          x.k().values(),
                          x.q().values(),
                          x.s().values());
      };
      return key(l) < key(r);
    }
  }  // namespace detail

  //! Partitions semi-biproducts sharing X and B into isomorphism classes.
  //! Classes are sorted by representative, which is the member with the
  //! least (table, p, k, q, s); the result does not depend on input order
  //! beyond the indices it reports.
  inline std::vector<IsoClass> classify_up_to_iso(
      std::vector<SemiBiproduct> const& items,
      IsoMode                           mode = IsoMode::fixed_endpoints) {
    std::vector<IsoClass> classes;
    if (items.empty()) {
      return classes;
    }
    auto const& X = items.front().X();
    auto const& B = items.front().B();
    for (auto const& sb : items) {
      if (!sb.X().same_structure(X) || !sb.B().same_structure(B)) {
        throw DomainMismatch("classify_up_to_iso: items must share X and B");
      }
    }
    std::vector<Homomorphism> auts_x{identity_hom(X)}, auts_b{identity_hom(B)};
    if (mode == IsoMode::free_endpoints) {
      auts_x = automorphisms(X);
      auts_b = automorphisms(B);
    }
    auto isomorphic = [&](SemiBiproduct const& s, SemiBiproduct const& t) {
      if (s.A().size() != t.A().size()) {
        return false;
      }
      for (auto const& f0 : auts_x) {
        for (auto const& f2 : auts_b) {
          auto m = find_morphism(s, t, f0, f2);
          if (m && is_bijective(m->f1().map())) {
            return true;
          }
        }
      }
      return false;
    };
    // process in sorted order so the first member of a class is its least
    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) {
      return detail::table_less(items[i], items[j]);
    });
    for (std::size_t i : order) {
      bool placed = false;
      for (auto& c : classes) {
        if (isomorphic(items[i], items[c.representative])) {
          c.members.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) {
        classes.push_back({i, {i}});
      }
    }
    for (auto& c : classes) {
      std::sort(c.members.begin(), c.members.end());
    }
    return classes;
  }

}  // namespace sbp

#endif  // SBP_ENUMERATION_HPP_

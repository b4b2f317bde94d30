// Backtracking over finite cell assignments with watched constraint tuples.
//
// A search problem is a sequence of cells, each with a finite domain, that
// are assigned in index order, plus a family of constraint tuples. Evaluating
// a tuple against a partial assignment either decides it or reports the first
// unassigned cell it needed. A blocked tuple is parked on that cell's watch
// list and re-evaluated exactly when the cell receives a value, so every
// tuple is decided as early as the assignment order allows.
//
// The same engine drives monoid-table enumeration, the search for monoid
// structures on a relation, and the pseudo-action search.

#ifndef SBP_SEARCH_HPP_
#define SBP_SEARCH_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t, uint64_t
#include <span>     // for span
#include <vector>   // for vector

#include "core.hpp"  // for index_t, UNDEFINED

namespace sbp::detail {

  struct Eval {
    enum class Kind : std::uint8_t { satisfied, violated, blocked };
    Kind        kind;
    std::size_t cell = 0;

    static constexpr Eval ok() noexcept {
      return {Kind::satisfied, 0};
    }
    static constexpr Eval fail() noexcept {
      return {Kind::violated, 0};
    }
    static constexpr Eval wait(std::size_t c) noexcept {
      return {Kind::blocked, c};
    }
  };

  // Constraint requirements:
  //   std::size_t num_tuples() const;
  //   Eval evaluate(std::size_t tuple, std::span<index_t const> cells) const;
  // where cells[c] == UNDEFINED means "not yet assigned".

  //! Enumerates every total assignment satisfying all constraint tuples, in
  //! lexicographic order of the cell values (domains are visited in the order
  //! given). Cells `[0, start)` must already be assigned in `cells`.
  //!
  //! With `propagate == false` constraints are only checked on complete
  //! assignments.
  template <typename Constraint, typename Visit>
  void backtrack(Constraint const&                         c,
                 std::vector<std::vector<index_t>> const&  domains,
                 std::vector<index_t>                      cells,
                 std::size_t                               start,
                 bool                                      propagate,
                 Visit&&                                   visit) {
    std::size_t const ncells = domains.size();

    if (!propagate) {
      auto leaf_ok = [&]() {
        std::span<index_t const> view(cells);
        for (std::size_t t = 0; t < c.num_tuples(); ++t) {
          if (c.evaluate(t, view).kind != Eval::Kind::satisfied) {
            return false;
          }
        }
        return true;
      };
      auto rec = [&](auto& self, std::size_t d) -> void {
        if (d == ncells) {
          if (leaf_ok()) {
            visit(std::span<index_t const>(cells));
          }
          return;
        }
        for (index_t v : domains[d]) {
          cells[d] = v;
          self(self, d + 1);
        }
        cells[d] = UNDEFINED;
      };
      rec(rec, start);
      return;
    }

    std::vector<std::vector<std::uint32_t>> watch(ncells);
    std::vector<std::size_t>                trail;
    {
      std::span<index_t const> view(cells);
      for (std::size_t t = 0; t < c.num_tuples(); ++t) {
        Eval e = c.evaluate(t, view);
        if (e.kind == Eval::Kind::violated) {
          return;
        } else if (e.kind == Eval::Kind::blocked) {
          watch[e.cell].push_back(static_cast<std::uint32_t>(t));
        }
      }
    }

    auto rec = [&](auto& self, std::size_t d) -> void {
      if (d == ncells) {
        visit(std::span<index_t const>(cells));
        return;
      }
      for (index_t v : domains[d]) {
        cells[d]             = v;
        std::size_t const mark = trail.size();
        bool              ok   = true;
        std::span<index_t const> view(cells);
        // watch[d] is never appended to while d is being processed: a tuple
        // can only block on a cell that is still unassigned, i.e. > d.
        for (std::uint32_t t : watch[d]) {
          Eval e = c.evaluate(t, view);
          if (e.kind == Eval::Kind::violated) {
            ok = false;
            break;
          } else if (e.kind == Eval::Kind::blocked) {
            watch[e.cell].push_back(t);
            trail.push_back(e.cell);
          }
        }
        if (ok) {
          self(self, d + 1);
        }
        while (trail.size() > mark) {
          watch[trail.back()].pop_back();
          trail.pop_back();
        }
      }
      cells[d] = UNDEFINED;
    };
    rec(rec, start);
  }

  //! Associativity of a binary operation on `[0, n)` whose entries are
  //! either fixed or drawn from search cells.
  //!
  //! `layout[i * n + j]` is the fixed value when `is_cell[i * n + j]` is
  //! false and the cell index otherwise.
  class AssociativityConstraint {
   public:
    AssociativityConstraint(std::size_t                n,
                            std::vector<index_t> const& layout,
                            std::vector<bool> const&    is_cell)
        : n_(n), layout_(layout), is_cell_(is_cell) {}

    std::size_t num_tuples() const noexcept {
      return n_ * n_ * n_;
    }

    Eval evaluate(std::size_t t, std::span<index_t const> cells) const {
      std::size_t const i = t / (n_ * n_);
      std::size_t const j = (t / n_) % n_;
      std::size_t const k = t % n_;
      std::size_t       blocked = 0;
      index_t           ij, jk, l, r;
      if ((ij = get(i, j, cells, blocked)) == UNDEFINED
          || (jk = get(j, k, cells, blocked)) == UNDEFINED
          || (l = get(ij, k, cells, blocked)) == UNDEFINED
          || (r = get(i, jk, cells, blocked)) == UNDEFINED) {
        return Eval::wait(blocked);
      }
      return l == r ? Eval::ok() : Eval::fail();
    }

   private:
    index_t get(std::size_t              i,
                std::size_t              j,
                std::span<index_t const> cells,
                std::size_t&             blocked) const {
      std::size_t const pos = i * n_ + j;
      if (!is_cell_[pos]) {
        return layout_[pos];
      }
      index_t v = cells[layout_[pos]];
      if (v == UNDEFINED) {
        blocked = layout_[pos];
      }
      return v;
    }

    std::size_t          n_;
    std::vector<index_t> layout_;
    std::vector<bool>    is_cell_;
  };

  //! All associative tables on `[0, n)` with two-sided identity `e` whose
  //! non-identity entries `(i, j)` range over `domain(i, j)`. Tables are
  //! produced in lexicographic order of their entries (row-major, identity
  //! row and column skipped).
  template <typename DomainFn, typename Visit>
  void for_each_monoid_table(std::size_t n,
                             index_t     e,
                             DomainFn&&  domain,
                             bool        propagate,
                             Visit&&     visit) {
    std::vector<index_t>              layout(n * n);
    std::vector<bool>                 is_cell(n * n, false);
    std::vector<std::vector<index_t>> domains;
    std::vector<std::size_t>          cell_pos;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t const pos = i * n + j;
        if (i == e) {
          layout[pos] = static_cast<index_t>(j);
        } else if (j == e) {
          layout[pos] = static_cast<index_t>(i);
        } else {
          is_cell[pos] = true;
          layout[pos]  = static_cast<index_t>(domains.size());
          domains.push_back(domain(static_cast<index_t>(i),
                                   static_cast<index_t>(j)));
          cell_pos.push_back(pos);
        }
      }
    }
    AssociativityConstraint c(n, layout, is_cell);
    std::vector<index_t>    table(n * n);
    backtrack(c,
              domains,
              std::vector<index_t>(domains.size(), UNDEFINED),
              0,
              propagate,
              [&](std::span<index_t const> cells) {
                for (std::size_t pos = 0; pos < n * n; ++pos) {
                  table[pos] = is_cell[pos] ? cells[layout[pos]] : layout[pos];
                }
                visit(std::span<index_t const>(table));
              });
  }

}  // namespace sbp::detail

#endif  // SBP_SEARCH_HPP_

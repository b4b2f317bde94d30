// Small monoids up to isomorphism, isomorphism search, and automorphisms.

#ifndef SBP_CENSUS_HPP_
#define SBP_CENSUS_HPP_

#include <algorithm>  // for next_permutation, sort, unique
#include <cstddef>    // for size_t
#include <numeric>    // for iota
#include <optional>   // for optional
#include <span>       // for span
#include <string>     // for string, to_string
#include <utility>    // for pair
#include <vector>     // for vector

#include "core.hpp"         // for index_t, Error
#include "monoid.hpp"       // for FiniteMonoid, validate_monoid
#include "pointed_map.hpp"  // for Homomorphism
#include "search.hpp"       // for for_each_monoid_table

namespace sbp {

  namespace detail {
    // Table of `m` relabelled by `perm` (old index -> new index).
    inline std::vector<index_t> relabel(std::span<index_t const>    table,
                                        std::vector<index_t> const& perm) {
      std::size_t const    n = perm.size();
      std::vector<index_t> out(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          out[perm[i] * n + perm[j]] = perm[table[i * n + j]];
        }
      }
      return out;
    }

    // Lexicographically least relabelling of a table with identity 0 over
    // all permutations fixing 0.
    inline std::vector<index_t> canonical_table(std::span<index_t const> table,
                                                std::size_t              n) {
      std::vector<index_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<index_t> best(table.begin(), table.end());
      if (n <= 2) {
        return best;
      }
      do {
        auto t = relabel(table, perm);
        if (t < best) {
          best = std::move(t);
        }
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
      return best;
    }
  }  // namespace detail

  //! One representative of each isomorphism class of monoids of order `n`,
  //! with identity 0, each in canonical (lexicographically least) form, and
  //! sorted by table. Representatives are named "M<n>.<i>".
  //!
  //! Known counts for n = 1..5 are 1, 2, 7, 35, 228.
  inline std::vector<FiniteMonoid> enumerate_monoids(std::size_t n) {
    if (n == 0) {
      throw Error("enumerate_monoids: order must be positive");
    }
    if (n > 5) {
      throw Error("enumerate_monoids: orders above 5 are not supported");
    }
    std::vector<std::vector<index_t>> tables;
    std::vector<index_t>              all(n);
    std::iota(all.begin(), all.end(), 0);
    detail::for_each_monoid_table(
        n,
        0,
        [&](index_t, index_t) { return all; },
        true,
        [&](std::span<index_t const> t) {
          tables.push_back(detail::canonical_table(t, n));
        });
    std::sort(tables.begin(), tables.end());
    tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
    std::vector<FiniteMonoid> out;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      out.push_back(validate_monoid("M" + std::to_string(n) + "."
                                        + std::to_string(i + 1),
                                    detail::index_labels(n),
                                    0,
                                    tables[i],
                                    Notation::additive)
                        .value());
    }
    return out;
  }

  //! All monoids of order 1..max_order up to isomorphism, by order.
  inline std::vector<FiniteMonoid> enumerate_monoids_up_to(
      std::size_t max_order) {
    std::vector<FiniteMonoid> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto ms = enumerate_monoids(n);
      out.insert(out.end(), ms.begin(), ms.end());
    }
    return out;
  }

  //! Calls `fn(std::vector<index_t> const&)` for every bijection M → N that
  //! preserves identity and operation, in lexicographic order. Stops early if
  //! `fn` returns false.
  template <typename Fn>
  void for_each_isomorphism(FiniteMonoid const& M,
                            FiniteMonoid const& N,
                            Fn&&                fn) {
    std::size_t const n = M.size();
    if (N.size() != n) {
      return;
    }
    std::vector<index_t> f(n, UNDEFINED);
    std::vector<bool>    used(n, false);
    f[M.identity()]    = N.identity();
    used[N.identity()] = true;
    bool stop          = false;
    auto consistent    = [&](index_t a) {
      for (index_t c = 0; c < n; ++c) {
        if (f[c] == UNDEFINED) {
          continue;
        }
        for (auto [x, y] : {std::pair{a, c}, std::pair{c, a}}) {
          index_t const xy = M.op(x, y);
          if (f[xy] != UNDEFINED && f[xy] != N.op(f[x], f[y])) {
            return false;
          }
        }
      }
      for (index_t x = 0; x < n; ++x) {
        for (index_t y = 0; y < n; ++y) {
          if (M.op(x, y) == a && f[x] != UNDEFINED && f[y] != UNDEFINED
              && f[a] != N.op(f[x], f[y])) {
            return false;
          }
        }
      }
      return true;
    };
    auto rec = [&](auto& self, index_t a) -> void {
      if (stop) {
        return;
      }
      if (a == n) {
        // each product was checked when the last of x, y, x + y was placed
        if (!fn(static_cast<std::vector<index_t> const&>(f))) {
          stop = true;
        }
        return;
      }
      if (a == M.identity()) {
        self(self, a + 1);
        return;
      }
      for (index_t v = 0; v < n && !stop; ++v) {
        if (used[v]) {
          continue;
        }
        f[a]    = v;
        used[v] = true;
        if (consistent(a)) {
          self(self, a + 1);
        }
        used[v] = false;
      }
      f[a] = UNDEFINED;
    };
    rec(rec, 0);
  }

  //! The first isomorphism M → N in lexicographic order, if any.
  inline std::optional<Homomorphism> find_isomorphism(FiniteMonoid const& M,
                                                      FiniteMonoid const& N) {
    std::optional<Homomorphism> out;
    for_each_isomorphism(M, N, [&](std::vector<index_t> const& f) {
      out = Homomorphism::make(M, N, f).value();
      return false;
    });
    return out;
  }

  inline bool are_isomorphic(FiniteMonoid const& M, FiniteMonoid const& N) {
    return find_isomorphism(M, N).has_value();
  }

  //! All automorphisms of M, identity first.
  inline std::vector<Homomorphism> automorphisms(FiniteMonoid const& M) {
    std::vector<Homomorphism> out;
    for_each_isomorphism(M, M, [&](std::vector<index_t> const& f) {
      out.push_back(Homomorphism::make(M, M, f).value());
      return true;
    });
    return out;
  }

}  // namespace sbp

#endif  // SBP_CENSUS_HPP_

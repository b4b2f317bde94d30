// Slow reference implementations used to cross-check the library. Nothing
// here shares code with include/sbp beyond reading Cayley tables.

#ifndef SBP_TESTS_ORACLE_NAIVE_HPP_
#define SBP_TESTS_ORACLE_NAIVE_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "sbp/monoid.hpp"

namespace oracle {

  using Table = std::vector<std::vector<int>>;

  struct Mon {
    int   n = 1;
    int   e = 0;
    Table t;

    int op(int a, int b) const {
      return t[a][b];
    }
  };

  inline Mon of(sbp::FiniteMonoid const& M) {
    Mon m;
    m.n = static_cast<int>(M.size());
    m.e = static_cast<int>(M.identity());
    m.t.assign(m.n, std::vector<int>(m.n));
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) {
        m.t[i][j] = static_cast<int>(M.op(i, j));
      }
    }
    return m;
  }

  inline bool is_monoid(Table const& t, int e) {
    int const n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i) {
      if (t[e][i] != i || t[i][e] != i) {
        return false;
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          if (t[t[a][b]][c] != t[a][t[b][c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! Tables phi[b][x], rho[x][b], gamma[b][c].
  struct Action {
    Table phi, rho, gamma;

    friend auto operator<=>(Action const&, Action const&) = default;
  };

  inline bool unit_laws(Mon const& X, Mon const& B, Action const& a) {
    for (int x = 0; x < X.n; ++x) {
      if (a.phi[B.e][x] != x || a.rho[x][B.e] != x) {
        return false;
      }
    }
    for (int b = 0; b < B.n; ++b) {
      if (a.phi[b][X.e] != X.e || a.rho[X.e][b] != X.e
          || a.gamma[B.e][b] != X.e || a.gamma[b][B.e] != X.e) {
        return false;
      }
    }
    return true;
  }

  //! (x, b) + (y, c) on X × B, computed from scratch every time.
  inline std::pair<int, int> add(Mon const& X, Mon const& B, Action const& a,
                                 std::pair<int, int> u, std::pair<int, int> v) {
    auto [x, b] = u;
    auto [y, c] = v;
    int const bc = B.op(b, c);
    return {a.rho[X.op(X.op(x, a.phi[b][y]), a.gamma[b][c])][bc], bc};
  }

  //! The coherence equation for all x, x', x'' and b, b', b'':
  //! ((x,b)+(x',b'))+(x'',b'') = (x,b)+((x',b')+(x'',b'')), each side
  //! evaluated without any caching.
  inline bool factor_equation(Mon const& X, Mon const& B, Action const& a) {
    for (int x = 0; x < X.n; ++x) {
      for (int y = 0; y < X.n; ++y) {
        for (int z = 0; z < X.n; ++z) {
          for (int b = 0; b < B.n; ++b) {
            for (int c = 0; c < B.n; ++c) {
              for (int d = 0; d < B.n; ++d) {
                auto l = add(X, B, a, add(X, B, a, {x, b}, {y, c}), {z, d});
                auto r = add(X, B, a, {x, b}, add(X, B, a, {y, c}, {z, d}));
                if (l != r) {
                  return false;
                }
              }
            }
          }
        }
      }
    }
    return true;
  }

  //! Every table triple obeying the unit laws and the coherence equation,
  //! by plain odometer over all free cells. Sorted.
  inline std::vector<Action> all_actions(Mon const& X, Mon const& B) {
    Action a;
    a.phi.assign(B.n, std::vector<int>(X.n, 0));
    a.rho.assign(X.n, std::vector<int>(B.n, 0));
    a.gamma.assign(B.n, std::vector<int>(B.n, X.e));
    std::vector<int*> cells;
    for (int b = 0; b < B.n; ++b) {
      for (int x = 0; x < X.n; ++x) {
        a.phi[b][x] = b == B.e ? x : X.e;
        if (b != B.e && x != X.e) {
          cells.push_back(&a.phi[b][x]);
        }
      }
    }
    for (int x = 0; x < X.n; ++x) {
      for (int b = 0; b < B.n; ++b) {
        a.rho[x][b] = b == B.e ? x : X.e;
        if (b != B.e && x != X.e) {
          cells.push_back(&a.rho[x][b]);
        }
      }
    }
    for (int b = 0; b < B.n; ++b) {
      for (int c = 0; c < B.n; ++c) {
        if (b != B.e && c != B.e) {
          cells.push_back(&a.gamma[b][c]);
        }
      }
    }
    for (auto* c : cells) {
      *c = 0;
    }
    std::vector<Action> out;
    while (true) {
      if (unit_laws(X, B, a) && factor_equation(X, B, a)) {
        out.push_back(a);
      }
      std::size_t i = 0;
      for (; i < cells.size(); ++i) {
        if (++*cells[i] < X.n) {
          break;
        }
        *cells[i] = 0;
      }
      if (i == cells.size()) {
        break;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // ------------------------------------------------------------- S3

  //! S3 as permutations of {0, 1, 2} under composition (f∘g), elements in
  //! lexicographic order of their images, identity first.
  inline Mon s3_permutations() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3>              p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    Mon m;
    m.n = 6;
    m.e = 0;
    m.t.assign(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        std::array<int, 3> c{};
        for (int k = 0; k < 3; ++k) {
          c[k] = perms[i][perms[j][k]];
        }
        m.t[i][j] = static_cast<int>(
            std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    }
    return m;
  }

  //! Tries all bijections.
  inline bool isomorphic(Mon const& M, Mon const& N) {
    if (M.n != N.n) {
      return false;
    }
    std::vector<int> f(M.n);
    std::iota(f.begin(), f.end(), 0);
    do {
      bool ok = f[M.e] == N.e;
      for (int a = 0; ok && a < M.n; ++a) {
        for (int b = 0; ok && b < M.n; ++b) {
          ok = f[M.op(a, b)] == N.op(f[a], f[b]);
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
  }

  // ------------------------------------------------------- extensions

  //! A semi-biproduct found by brute force: A on {0..n-1} with identity 0
  //! and the four maps.
  struct Extension {
    Table            A;
    std::vector<int> p, k, q, s;
  };

  inline void all_maps(int from, int to, int zero_from, int zero_to,
                       std::vector<std::vector<int>>& out) {
    std::vector<int> v(from, 0);
    while (true) {
      if (v[zero_from] == zero_to) {
        out.push_back(v);
      }
      int i = 0;
      for (; i < from; ++i) {
        if (++v[i] < to) {
          break;
        }
        v[i] = 0;
      }
      if (i == from) {
        break;
      }
    }
  }

  //! All monoid tables on {0..n-1} with identity 0.
  inline std::vector<Table> all_monoid_tables(int n) {
    Table t(n, std::vector<int>(n, 0));
    std::vector<int*> cells;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        t[i][j] = i == 0 ? j : (j == 0 ? i : 0);
        if (i != 0 && j != 0) {
          cells.push_back(&t[i][j]);
        }
      }
    }
    std::vector<Table> out;
    while (true) {
      if (is_monoid(t, 0)) {
        out.push_back(t);
      }
      std::size_t i = 0;
      for (; i < cells.size(); ++i) {
        if (++*cells[i] < n) {
          break;
        }
        *cells[i] = 0;
      }
      if (i == cells.size()) {
        break;
      }
    }
    return out;
  }

  //! Every (A, p, k, q, s) with |A| ≤ |X|·|B| satisfying the five conditions
  //! with p and k homomorphisms, checked directly on the tables.
  inline std::vector<Extension> all_extensions(Mon const& X, Mon const& B) {
    std::vector<Extension> out;
    for (int n = 1; n <= X.n * B.n; ++n) {
      for (auto const& A : all_monoid_tables(n)) {
        Mon const M{n, 0, A};
        std::vector<std::vector<int>> ps, ks, qs, ss;
        all_maps(n, B.n, 0, B.e, ps);
        all_maps(X.n, n, X.e, 0, ks);
        all_maps(n, X.n, 0, X.e, qs);
        all_maps(B.n, n, B.e, 0, ss);
        auto hom = [](Mon const& D, Mon const& C, std::vector<int> const& f) {
          for (int a = 0; a < D.n; ++a) {
            for (int b = 0; b < D.n; ++b) {
              if (f[D.op(a, b)] != C.op(f[a], f[b])) {
                return false;
              }
            }
          }
          return true;
        };
        for (auto const& p : ps) {
          if (!hom(M, B, p)) {
            continue;
          }
          for (auto const& k : ks) {
            if (!hom(X, M, k)) {
              continue;
            }
            bool pk = true;
            for (int x = 0; x < X.n; ++x) {
              pk = pk && p[k[x]] == B.e;
            }
            if (!pk) {
              continue;
            }
            for (auto const& q : qs) {
              bool qk = true;
              for (int x = 0; x < X.n; ++x) {
                qk = qk && q[k[x]] == x;
              }
              if (!qk) {
                continue;
              }
              for (auto const& s : ss) {
                bool ok = true;
                for (int b = 0; ok && b < B.n; ++b) {
                  ok = p[s[b]] == b && q[s[b]] == X.e;
                }
                for (int a = 0; ok && a < n; ++a) {
                  ok = M.op(k[q[a]], s[p[a]]) == a;
                }
                if (ok) {
                  out.push_back({A, p, k, q, s});
                }
              }
            }
          }
        }
      }
    }
    return out;
  }

  //! Isomorphism (id_X, f, id_B) between two extensions: f bijective and
  //! compatible with all four maps and the operation.
  inline bool equivalent(Extension const& e, Extension const& g) {
    int const n = static_cast<int>(e.A.size());
    if (n != static_cast<int>(g.A.size())) {
      return false;
    }
    std::vector<int> f(n);
    std::iota(f.begin(), f.end(), 0);
    do {
      bool ok = f[0] == 0;
      for (int a = 0; ok && a < n; ++a) {
        ok = g.p[f[a]] == e.p[a] && g.q[f[a]] == e.q[a];
        for (int b = 0; ok && b < n; ++b) {
          ok = f[e.A[a][b]] == g.A[f[a]][f[b]];
        }
      }
      for (std::size_t x = 0; ok && x < e.k.size(); ++x) {
        ok = f[e.k[x]] == g.k[x];
      }
      for (std::size_t b = 0; ok && b < e.s.size(); ++b) {
        ok = f[e.s[b]] == g.s[b];
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
  }

  inline std::size_t count_classes(std::vector<Extension> const& all) {
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < all.size(); ++i) {
      bool found = false;
      for (auto r : reps) {
        if (equivalent(all[r], all[i])) {
          found = true;
          break;
        }
      }
      if (!found) {
        reps.push_back(i);
      }
    }
    return reps.size();
  }

}  // namespace oracle

#endif  // SBP_TESTS_ORACLE_NAIVE_HPP_

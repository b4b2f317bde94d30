// Semi-biproducts of monoids
//
//        k        p
//     X ---> A ---> B        ps = 1, qk = 1, kq + sp = 1, pk = 0, qs = 0
//     X <--- A <--- B
//        q        s
//
// with p, k homomorphisms and q, s zero-preserving maps. Also: the embedding
// a ↦ (q(a), p(a)) into X × B, the decomposition of sums, extraction of the
// associated pseudo-action, and Schreier detection.

#ifndef SBP_SEMIBIPRODUCT_HPP_
#define SBP_SEMIBIPRODUCT_HPP_

#include <algorithm>  // for sort, lower_bound
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <string>     // for string
#include <utility>    // for pair, move
#include <vector>     // for vector

#include "core.hpp"           // for index_t, Expected, Verdict, Violation
#include "monoid.hpp"         // for FiniteMonoid
#include "pointed_map.hpp"    // for PointedMap, Homomorphism, compose
#include "pseudo_action.hpp"  // for PseudoAction

namespace sbp {

  class SemiBiproduct;

  inline Expected<SemiBiproduct> verify_semibiproduct(FiniteMonoid X,
                                                      FiniteMonoid A,
                                                      FiniteMonoid B,
                                                      PointedMap   p,
                                                      PointedMap   k,
                                                      PointedMap   q,
                                                      PointedMap   s);

  //! A verified tuple (X, A, B, p, k, q, s).
  class SemiBiproduct {
   public:
    FiniteMonoid const& X() const noexcept {
      return X_;
    }
    FiniteMonoid const& A() const noexcept {
      return A_;
    }
    FiniteMonoid const& B() const noexcept {
      return B_;
    }
    Homomorphism const& p() const noexcept {
      return p_;
    }
    Homomorphism const& k() const noexcept {
      return k_;
    }
    PointedMap const& q() const noexcept {
      return q_;
    }
    PointedMap const& s() const noexcept {
      return s_;
    }

    friend bool operator==(SemiBiproduct const& a, SemiBiproduct const& b) {
      return a.X_ == b.X_ && a.A_ == b.A_ && a.B_ == b.B_ && a.p_ == b.p_
             && a.k_ == b.k_ && a.q_ == b.q_ && a.s_ == b.s_;
    }

   private:
    SemiBiproduct(FiniteMonoid X,
                  FiniteMonoid A,
                  FiniteMonoid B,
                  Homomorphism p,
                  Homomorphism k,
                  PointedMap   q,
                  PointedMap   s)
        : X_(std::move(X)),
          A_(std::move(A)),
          B_(std::move(B)),
          p_(std::move(p)),
          k_(std::move(k)),
          q_(std::move(q)),
          s_(std::move(s)) {}

    friend Expected<SemiBiproduct> verify_semibiproduct(FiniteMonoid,
                                                        FiniteMonoid,
                                                        FiniteMonoid,
                                                        PointedMap,
                                                        PointedMap,
                                                        PointedMap,
                                                        PointedMap);

    FiniteMonoid X_, A_, B_;
    Homomorphism p_, k_;
    PointedMap   q_, s_;
  };

  //! Checks typing (throws DomainMismatch), then that p and k are
  //! homomorphisms, then the five conditions in the order ps = 1, qk = 1,
  //! kq + sp = 1, pk = 0, qs = 0. The witness is the first failing element.
  inline Expected<SemiBiproduct> verify_semibiproduct(FiniteMonoid X,
                                                      FiniteMonoid A,
                                                      FiniteMonoid B,
                                                      PointedMap   p,
                                                      PointedMap   k,
                                                      PointedMap   q,
                                                      PointedMap   s) {
    auto typed = [](char const* name, PointedMap const& f,
                    FiniteMonoid const& dom, FiniteMonoid const& cod) {
      if (!f.domain().same_structure(dom) || !f.codomain().same_structure(cod)) {
        throw DomainMismatch(std::string("verify_semibiproduct: ") + name
                             + " has the wrong domain or codomain");
      }
    };
    typed("p", p, A, B);
    typed("k", k, X, A);
    typed("q", q, A, X);
    typed("s", s, B, A);

    for (auto const* f : {&p, &k}) {
      if (auto h = is_homomorphism(*f); !h) {
        return Violation{"NotHomomorphism",
                         f == &p ? "p" : "k",
                         {h.witness->first, h.witness->second},
                         ""};
      }
    }

    auto first_mismatch = [](PointedMap const& lhs, PointedMap const& rhs)
        -> std::optional<index_t> {
      for (index_t a = 0; a < lhs.values().size(); ++a) {
        if (lhs(a) != rhs(a)) {
          return a;
        }
      }
      return std::nullopt;
    };
    struct Condition {
      char const* name;
      PointedMap  lhs;
      PointedMap  rhs;
    };
    Condition const conditions[] = {
        {"ps=1", compose(p, s), identity_map(B)},
        {"qk=1", compose(q, k), identity_map(X)},
        {"kq+sp=1", pointwise_add(compose(k, q), compose(s, p)), identity_map(A)},
        {"pk=0", compose(p, k), zero_map(X, B)},
        {"qs=0", compose(q, s), zero_map(B, X)},
    };
    for (auto const& c : conditions) {
      if (auto a = first_mismatch(c.lhs, c.rhs)) {
        return Violation{"ConditionFails", c.name, {*a}, ""};
      }
    }
    auto ph = detail::unchecked_hom(std::move(p));
    auto kh = detail::unchecked_hom(std::move(k));
    return SemiBiproduct(std::move(X),
                         std::move(A),
                         std::move(B),
                         std::move(ph),
                         std::move(kh),
                         std::move(q),
                         std::move(s));
  }

  //! An unverified tuple (X, A, B, p, k, q, s), as loaded from a file.
  struct Bundle {
    std::string  name;
    FiniteMonoid X, A, B;
    PointedMap   p, k, q, s;

    Expected<SemiBiproduct> verify() const {
      return verify_semibiproduct(X, A, B, p, k, q, s);
    }

    static Bundle from(SemiBiproduct const& sb, std::string name) {
      return Bundle{std::move(name), sb.X(),       sb.A(),       sb.B(),
                    sb.p().map(),    sb.k().map(), sb.q(),       sb.s()};
    }

    friend bool operator==(Bundle const& l, Bundle const& r) {
      return l.name == r.name && l.X == r.X && l.A == r.A && l.B == r.B
             && l.p == r.p && l.k == r.k && l.q == r.q && l.s == r.s;
    }
  };

  //! X ← X × B → B with the product projections and injections.
  inline SemiBiproduct product_semibiproduct(FiniteMonoid const& X,
                                             FiniteMonoid const& B) {
    auto                 A  = direct_product(X, B);
    std::size_t const    nx = X.size(), nb = B.size();
    std::vector<index_t> p(nx * nb), q(nx * nb), k(nx), s(nb);
    for (index_t b = 0; b < nb; ++b) {
      for (index_t x = 0; x < nx; ++x) {
        p[b * nx + x] = b;
        q[b * nx + x] = x;
      }
      s[b] = b * nx + X.identity();
    }
    for (index_t x = 0; x < nx; ++x) {
      k[x] = B.identity() * nx + x;
    }
    return verify_semibiproduct(X,
                                A,
                                B,
                                PointedMap::make(A, B, p).value(),
                                PointedMap::make(X, A, k).value(),
                                PointedMap::make(A, X, q).value(),
                                PointedMap::make(B, A, s).value())
        .value();
  }

  //! b·x = q(s(b)+k(x)), x^b = q(k(x)+s(b)), b×b' = q(s(b)+s(b')).
  inline PseudoAction extract_pseudo_action(SemiBiproduct const& sb) {
    auto const&          X = sb.X();
    auto const&          A = sb.A();
    auto const&          B = sb.B();
    std::size_t const    nx = X.size(), nb = B.size();
    std::vector<index_t> phi(nb * nx), rho(nx * nb), gamma(nb * nb);
    for (index_t b = 0; b < nb; ++b) {
      for (index_t x = 0; x < nx; ++x) {
        phi[b * nx + x] = sb.q()(A.op(sb.s()(b), sb.k()(x)));
        rho[x * nb + b] = sb.q()(A.op(sb.k()(x), sb.s()(b)));
      }
      for (index_t c = 0; c < nb; ++c) {
        gamma[b * nb + c] = sb.q()(A.op(sb.s()(b), sb.s()(c)));
      }
    }
    return detail::unchecked_action(
        X, B, std::move(phi), std::move(rho), std::move(gamma));
  }

  //! True iff x^b = x for all x, b.
  inline bool is_schreier(SemiBiproduct const& sb) {
    return extract_pseudo_action(sb).has_trivial_correction();
  }

  //! The injection a ↦ (q(a), p(a)) of A into X × B and its inverse
  //! (x, b) ↦ k(x) + s(b) on the image.
  struct BetaEmbedding {
    using Pair = std::pair<index_t, index_t>;  // (x, b)

    //! values[a] = (q(a), p(a))
    std::vector<Pair> values;
    //! {(x^b, b)}, sorted by (b, x)
    std::vector<Pair> image;
    //! alpha[i] = k(x) + s(b) for (x, b) = image[i]
    std::vector<index_t> alpha;
    //! First failed assertion, if any. A failure here is a library bug.
    std::optional<Violation> defect;

    bool is_bijective_onto(std::size_t nx, std::size_t nb) const noexcept {
      return image.size() == nx * nb && values.size() == nx * nb;
    }
  };

  namespace detail {
    inline bool by_b_then_x(BetaEmbedding::Pair const& l,
                            BetaEmbedding::Pair const& r) {
      return l.second != r.second ? l.second < r.second : l.first < r.first;
    }
  }  // namespace detail

  //! Computes the embedding and checks: injectivity, image equal to
  //! {(x^b, b)}, alpha∘beta = id_A, beta∘alpha = id on the image, and
  //! q(a) = q(a)^{p(a)}.
  inline BetaEmbedding beta_embedding(SemiBiproduct const& sb) {
    auto const&   X  = sb.X();
    auto const&   A  = sb.A();
    auto const&   B  = sb.B();
    auto const    pa = extract_pseudo_action(sb);
    BetaEmbedding out;
    auto fail = [&](char const* which, std::vector<index_t> w) {
      if (!out.defect) {
        out.defect = Violation{"EmbeddingDefect", which, std::move(w), ""};
      }
    };

    for (index_t a = 0; a < A.size(); ++a) {
      out.values.emplace_back(sb.q()(a), sb.p()(a));
    }
    std::vector<BetaEmbedding::Pair> sorted = out.values;
    std::sort(sorted.begin(), sorted.end(), detail::by_b_then_x);
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i] == sorted[i - 1]) {
        fail("injective", {sorted[i].first, sorted[i].second});
      }
    }

    for (index_t b = 0; b < B.size(); ++b) {
      for (index_t x = 0; x < X.size(); ++x) {
        out.image.emplace_back(pa.correction(x, b), b);
      }
    }
    std::sort(out.image.begin(), out.image.end(), detail::by_b_then_x);
    out.image.erase(std::unique(out.image.begin(), out.image.end()),
                    out.image.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted != out.image) {
      fail("image", {});
    }

    for (auto [x, b] : out.image) {
      out.alpha.push_back(A.op(sb.k()(x), sb.s()(b)));
    }
    for (std::size_t i = 0; i < out.image.size(); ++i) {
      index_t const a = out.alpha[i];
      if (out.values[a] != out.image[i]) {
        fail("beta-alpha", {out.image[i].first, out.image[i].second});
      }
    }
    for (index_t a = 0; a < A.size(); ++a) {
      auto it = std::lower_bound(out.image.begin(),
                                 out.image.end(),
                                 out.values[a],
                                 detail::by_b_then_x);
      if (it == out.image.end() || *it != out.values[a]
          || out.alpha[it - out.image.begin()] != a) {
        fail("alpha-beta", {a});
      }
      auto [x, b] = out.values[a];
      if (pa.correction(x, b) != x) {
        fail("q(a)=q(a)^p(a)", {a});
      }
    }
    return out;
  }

  //! For all a, a' checks
  //!
  //!   a + a' = k(u) + s(v) = k(u^v) + s(v)
  //!
  //! with u = q(a) + p(a)·q(a') + p(a)×p(a') and v = p(a + a'). The witness is
  //! the first failing pair.
  inline Verdict decomposition_check(SemiBiproduct const& sb) {
    auto const& X  = sb.X();
    auto const& A  = sb.A();
    auto const  pa = extract_pseudo_action(sb);
    for (index_t a = 0; a < A.size(); ++a) {
      for (index_t a2 = 0; a2 < A.size(); ++a2) {
        index_t const b = sb.p()(a), b2 = sb.p()(a2);
        index_t const u = X.op(X.op(sb.q()(a), pa.act(b, sb.q()(a2))),
                               pa.factor(b, b2));
        index_t const v   = sb.p()(A.op(a, a2));
        index_t const sum = A.op(a, a2);
        if (A.op(sb.k()(u), sb.s()(v)) != sum) {
          return Verdict::fail({"DecompositionFails", "k(u)+s(v)", {a, a2}, ""});
        }
        if (A.op(sb.k()(pa.correction(u, v)), sb.s()(v)) != sum) {
          return Verdict::fail(
              {"DecompositionFails", "k(u^v)+s(v)", {a, a2}, ""});
        }
      }
    }
    return Verdict::pass();
  }

}  // namespace sbp

#endif  // SBP_SEMIBIPRODUCT_HPP_

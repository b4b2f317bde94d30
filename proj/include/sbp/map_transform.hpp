// Map-transformation structures: for each pair of objects a monoid map(A, B)
// containing the morphisms through ε, acted on by morphisms on both sides
// (g x f), with an associative composition μ. Instances for monoids (all
// zero-preserving maps) and commutative monoids (homomorphisms only), the
// abstract semi-biproduct conditions, and recognizer checks.
//
// Universal statements are checked relative to an explicit finite list of
// objects, the universe, and only certified relative to it.

#ifndef SBP_MAP_TRANSFORM_HPP_
#define SBP_MAP_TRANSFORM_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <map>       // for map
#include <memory>    // for unique_ptr, make_unique
#include <optional>  // for optional
#include <sstream>   // for ostringstream
#include <string>    // for string
#include <utility>   // for move
#include <vector>    // for vector

#include "core.hpp"         // for index_t, Verdict, Violation, Error
#include "monoid.hpp"       // for FiniteMonoid
#include "pointed_map.hpp"  // for PointedMap, Homomorphism

namespace sbp {

  class MapTransformStructure {
   public:
    virtual ~MapTransformStructure() = default;

    virtual std::string name() const = 0;

    //! Whether the instance accepts M as an object.
    virtual bool is_object(FiniteMonoid const& M) const = 0;

    //! The elements of map(A, B), in a fixed order.
    virtual std::vector<PointedMap> maps(FiniteMonoid const& A,
                                         FiniteMonoid const& B) const
        = 0;

    //! Whether x is an element of map(dom x, cod x).
    virtual bool contains(PointedMap const& x) const = 0;

    //! The morphisms A → B.
    virtual std::vector<Homomorphism> homs(FiniteMonoid const& A,
                                           FiniteMonoid const& B) const {
      return all_homomorphisms(A, B);
    }

    virtual PointedMap epsilon(Homomorphism const& f) const = 0;

    virtual PointedMap zero(FiniteMonoid const& A,
                            FiniteMonoid const& B) const {
      return zero_map(A, B);
    }

    virtual PointedMap add(PointedMap const& x, PointedMap const& y) const {
      return pointwise_add(x, y);
    }

    //! g x f for f: A' → A, x ∈ map(A, B), g: B → B'.
    virtual PointedMap whisker(Homomorphism const& g,
                               PointedMap const&   x,
                               Homomorphism const& f) const {
      return compose(compose(g.map(), x), f.map());
    }

    //! μ(x, y) ∈ map(A, C) for x ∈ map(B, C), y ∈ map(A, B).
    virtual PointedMap mu(PointedMap const& x, PointedMap const& y) const {
      return compose(x, y);
    }

    //! Whether x lies in ε(hom(dom x, cod x)).
    virtual bool in_epsilon_image(PointedMap const& x) const {
      for (auto const& f : homs(x.domain(), x.codomain())) {
        if (epsilon(f) == x) {
          return true;
        }
      }
      return false;
    }
  };

  //! Monoids with map(A, B) all zero-preserving maps and ε the inclusion.
  class MonoidInstance : public MapTransformStructure {
   public:
    std::string name() const override {
      return "monoid";
    }
    bool is_object(FiniteMonoid const&) const override {
      return true;
    }
    std::vector<PointedMap> maps(FiniteMonoid const& A,
                                 FiniteMonoid const& B) const override {
      return all_pointed_maps(A, B);
    }
    bool contains(PointedMap const&) const override {
      return true;
    }
    PointedMap epsilon(Homomorphism const& f) const override {
      return f.map();
    }
    bool in_epsilon_image(PointedMap const& x) const override {
      return is_homomorphism(x).holds;
    }
  };

  //! Commutative monoids with map(A, B) = hom(A, B) and ε the identity.
  class CommutativeMonoidInstance : public MapTransformStructure {
   public:
    std::string name() const override {
      return "commutative-monoid";
    }
    bool is_object(FiniteMonoid const& M) const override {
      return M.is_commutative();
    }
    std::vector<PointedMap> maps(FiniteMonoid const& A,
                                 FiniteMonoid const& B) const override {
      std::vector<PointedMap> out;
      for (auto const& h : all_homomorphisms(A, B)) {
        out.push_back(h.map());
      }
      return out;
    }
    bool contains(PointedMap const& x) const override {
      return is_homomorphism(x).holds;
    }
    PointedMap epsilon(Homomorphism const& f) const override {
      return f.map();
    }
    bool in_epsilon_image(PointedMap const& x) const override {
      return is_homomorphism(x).holds;
    }
  };

  //! The monoid instance with ε(0) replaced by a non-zero map whenever one
  //! exists. Used to exercise the axiom checker.
  class BrokenEpsilonInstance : public MonoidInstance {
   public:
    std::string name() const override {
      return "broken-epsilon";
    }
    PointedMap epsilon(Homomorphism const& f) const override {
      auto const& A = f.domain();
      auto const& B = f.codomain();
      if (!is_zero(f.map()) || A.size() < 2 || B.size() < 2) {
        return f.map();
      }
      index_t const        other = B.identity() == 0 ? 1 : 0;
      std::vector<index_t> v(A.size(), other);
      v[A.identity()] = B.identity();
      return PointedMap::make(A, B, std::move(v)).value();
    }
    bool in_epsilon_image(PointedMap const& x) const override {
      return MapTransformStructure::in_epsilon_image(x);
    }
  };

  inline std::unique_ptr<MapTransformStructure> make_instance(
      std::string const& name) {
    if (name == "monoid") {
      return std::make_unique<MonoidInstance>();
    }
    if (name == "commutative-monoid") {
      return std::make_unique<CommutativeMonoidInstance>();
    }
    if (name == "broken-epsilon") {
      return std::make_unique<BrokenEpsilonInstance>();
    }
    throw Error("unknown map-transformation instance: " + name);
  }

  struct AxiomLine {
    std::string              name;
    std::uint64_t            checked = 0;
    std::optional<Violation> failure;
  };

  struct AxiomReport {
    std::string            instance;
    std::size_t            objects = 0;
    std::vector<AxiomLine> lines;

    bool all_hold() const noexcept {
      for (auto const& l : lines) {
        if (l.failure) {
          return false;
        }
      }
      return true;
    }
  };

  namespace detail {
    inline std::string describe(PointedMap const& f) {
      std::ostringstream os;
      os << f.domain().name() << "->" << f.codomain().name() << "[";
      for (std::size_t i = 0; i < f.values().size(); ++i) {
        os << (i == 0 ? "" : ",") << f.values()[i];
      }
      os << "]";
      return os.str();
    }

    class AxiomRecorder {
     public:
      explicit AxiomRecorder(std::string name) {
        line_.name = std::move(name);
      }

      void record(bool ok,
                  std::vector<index_t> objects,
                  std::vector<PointedMap const*> maps) {
        ++line_.checked;
        if (!ok && !line_.failure) {
          std::string msg;
          for (auto const* m : maps) {
            msg += (msg.empty() ? "" : " ") + describe(*m);
          }
          line_.failure = Violation{"AxiomFails", line_.name,
                                    std::move(objects), std::move(msg)};
        }
      }

      void pass() {
        ++line_.checked;
      }

      AxiomLine take() {
        return std::move(line_);
      }

     private:
      AxiomLine line_;
    };
  }  // namespace detail

  //! Checks over every applicable tuple drawn from `sample`:
  //!
  //!   g0f = 0                 g(x+y)f = gxf + gyf      1x1 = x
  //!   g'(gxf)f' = (g'g)x(ff') ε(0) = 0                 gε(u)f = ε(guf)
  //!   μ(x, ε(f)) = xf         μ(ε(g), x) = gx          μ associative
  //!
  //! Witnesses list the sample indices of the objects involved; the message
  //! lists the maps.
  inline AxiomReport verify_structure_axioms(
      MapTransformStructure const&     inst,
      std::vector<FiniteMonoid> const& sample) {
    std::vector<FiniteMonoid> objs;
    for (auto const& M : sample) {
      if (inst.is_object(M)) {
        objs.push_back(M);
      }
    }
    index_t const n = static_cast<index_t>(objs.size());
    // precompute hom-sets, map-sets and identities
    std::vector<std::vector<std::vector<Homomorphism>>> H(n);
    std::vector<std::vector<std::vector<PointedMap>>>   M(n);
    for (index_t a = 0; a < n; ++a) {
      for (index_t b = 0; b < n; ++b) {
        H[a].push_back(inst.homs(objs[a], objs[b]));
        M[a].push_back(inst.maps(objs[a], objs[b]));
      }
    }
    AxiomReport report;
    report.instance = inst.name();
    report.objects  = n;

    detail::AxiomRecorder zero_ax("g0f=0"), dist("g(x+y)f=gxf+gyf"),
        unit("1x1=x"), func("g'(gxf)f'=(g'g)x(ff')"), eps0("eps(0)=0"),
        epsnat("g eps(u) f=eps(guf)"), mux("mu(x,eps(f))=xf"),
        mug("mu(eps(g),x)=gx"), muassoc("mu associative");

    for (index_t a = 0; a < n; ++a) {
      for (index_t b = 0; b < n; ++b) {
        auto const& A = objs[a];
        auto const& B = objs[b];
        // membership of zero and closure are implicit in the checks below
        eps0.record(inst.epsilon(zero_hom(A, B)) == inst.zero(A, B), {a, b},
                    {});
        for (auto const& x : M[a][b]) {
          unit.record(inst.whisker(identity_hom(B), x, identity_hom(A)) == x,
                      {a, b}, {&x});
        }
        for (index_t a2 = 0; a2 < n; ++a2) {
          for (index_t b2 = 0; b2 < n; ++b2) {
            // f: A' → A, g: B → B'
            for (auto const& f : H[a2][a]) {
              for (auto const& g : H[b][b2]) {
                auto const zw = inst.whisker(g, inst.zero(A, B), f);
                zero_ax.record(zw == inst.zero(objs[a2], objs[b2]),
                               {a2, a, b, b2}, {&f.map(), &g.map()});
                for (auto const& u : H[a][b]) {
                  auto const guf = compose(compose(g, u), f);
                  epsnat.record(
                      inst.whisker(g, inst.epsilon(u), f) == inst.epsilon(guf),
                      {a2, a, b, b2}, {&f.map(), &u.map(), &g.map()});
                }
                std::vector<PointedMap> gxf;
                gxf.reserve(M[a][b].size());
                for (auto const& x : M[a][b]) {
                  gxf.push_back(inst.whisker(g, x, f));
                }
                for (std::size_t i = 0; i < M[a][b].size(); ++i) {
                  for (std::size_t j = 0; j < M[a][b].size(); ++j) {
                    auto const& x = M[a][b][i];
                    auto const& y = M[a][b][j];
                    dist.record(inst.whisker(g, inst.add(x, y), f)
                                    == inst.add(gxf[i], gxf[j]),
                                {a2, a, b, b2}, {&f.map(), &x, &y, &g.map()});
                  }
                }
              }
            }
          }
        }
      }
    }

    // g'(gxf)f' = (g'g)x(ff') for f': A'' → A', f: A' → A, x ∈ map(A, B),
    // g: B → B', g': B' → B''. Whiskering is tabulated once as indices into
    // the map-sets so the tuple scan is pure lookups.
    auto key = [n](index_t i, index_t j) { return std::size_t(i) * n + j; };
    std::vector<std::map<std::vector<index_t>, index_t>> map_index(n * n);
    std::vector<std::map<std::vector<index_t>, index_t>> hom_index(n * n);
    for (index_t a = 0; a < n; ++a) {
      for (index_t b = 0; b < n; ++b) {
        for (index_t i = 0; i < M[a][b].size(); ++i) {
          map_index[key(a, b)].emplace(M[a][b][i].values(), i);
        }
        for (index_t i = 0; i < H[a][b].size(); ++i) {
          hom_index[key(a, b)].emplace(H[a][b][i].values(), i);
        }
      }
    }
    index_t const OUTSIDE = UNDEFINED;
    // W[(a2, a, b, b2)][(f * |M| + x) * |H_g| + g] = index of g x f
    std::vector<std::vector<index_t>> W(n * n * n * n);
    auto wkey = [&](index_t a2, index_t a, index_t b, index_t b2) {
      return ((std::size_t(a2) * n + a) * n + b) * n + b2;
    };
    for (index_t a2 = 0; a2 < n; ++a2) {
      for (index_t a = 0; a < n; ++a) {
        for (index_t b = 0; b < n; ++b) {
          for (index_t b2 = 0; b2 < n; ++b2) {
            auto& w = W[wkey(a2, a, b, b2)];
            for (auto const& f : H[a2][a]) {
              for (auto const& x : M[a][b]) {
                for (auto const& g : H[b][b2]) {
                  auto const& idx = map_index[key(a2, b2)];
                  auto it = idx.find(inst.whisker(g, x, f).values());
                  w.push_back(it == idx.end() ? OUTSIDE : it->second);
                }
              }
            }
          }
        }
      }
    }
    auto hom_compose = [&](Homomorphism const& g, Homomorphism const& f,
                           index_t d, index_t c) {
      return hom_index[key(d, c)].at(compose(g, f).values());
    };
    for (index_t a0 = 0; a0 < n; ++a0) {
      for (index_t a1 = 0; a1 < n; ++a1) {
        for (index_t a = 0; a < n; ++a) {
          for (index_t b = 0; b < n; ++b) {
            std::size_t const nxs = M[a][b].size();
            for (index_t b1 = 0; b1 < n; ++b1) {
              for (index_t b0 = 0; b0 < n; ++b0) {
                auto const& inner = W[wkey(a1, a, b, b1)];
                auto const& outer = W[wkey(a0, a1, b1, b0)];
                auto const& whole = W[wkey(a0, a, b, b0)];
                std::size_t const ng = H[b][b1].size(), ng1 = H[b1][b0].size(),
                                  nw = M[a1][b1].size(),
                                  ngg = H[b][b0].size();
                for (index_t fi = 0; fi < H[a1][a].size(); ++fi) {
                  for (index_t f1i = 0; f1i < H[a0][a1].size(); ++f1i) {
                    index_t const ff1 = hom_compose(H[a1][a][fi],
                                                    H[a0][a1][f1i], a0, a);
                    for (index_t gi = 0; gi < ng; ++gi) {
                      for (index_t g1i = 0; g1i < ng1; ++g1i) {
                        index_t const g1g = hom_compose(
                            H[b1][b0][g1i], H[b][b1][gi], b, b0);
                        for (index_t xi = 0; xi < nxs; ++xi) {
                          index_t const w = inner[(fi * nxs + xi) * ng + gi];
                          index_t const lhs
                              = w == OUTSIDE
                                    ? OUTSIDE
                                    : outer[(f1i * nw + w) * ng1 + g1i];
                          index_t const rhs
                              = whole[(ff1 * nxs + xi) * ngg + g1g];
                          if (lhs == rhs && lhs != OUTSIDE) {
                            func.pass();
                          } else {
                            func.record(false, {a0, a1, a, b, b1, b0},
                                        {&H[a0][a1][f1i].map(),
                                         &H[a1][a][fi].map(),
                                         &M[a][b][xi],
                                         &H[b][b1][gi].map(),
                                         &H[b1][b0][g1i].map()});
                          }
                        }
                      }
                    }
                  }
                }
              }
            }
          }
        }
      }
    }

    // μ laws: A → B → C (→ D)
    for (index_t a = 0; a < n; ++a) {
      for (index_t b = 0; b < n; ++b) {
        for (index_t c = 0; c < n; ++c) {
          auto const id_a = identity_hom(objs[a]);
          auto const id_c = identity_hom(objs[c]);
          // μ(x, ε(f)) = x f for x ∈ map(B, C), f: A → B
          for (auto const& x : M[b][c]) {
            for (auto const& f : H[a][b]) {
              mux.record(inst.mu(x, inst.epsilon(f)) == inst.whisker(id_c, x, f),
                         {a, b, c}, {&x, &f.map()});
            }
          }
          // μ(ε(g), x) = g x for g: B → C, x ∈ map(A, B)
          for (auto const& g : H[b][c]) {
            for (auto const& x : M[a][b]) {
              mug.record(inst.mu(inst.epsilon(g), x) == inst.whisker(g, x, id_a),
                         {a, b, c}, {&g.map(), &x});
            }
          }
          for (index_t d = 0; d < n; ++d) {
            for (auto const& z : M[a][b]) {
              for (auto const& y : M[b][c]) {
                auto const yz = inst.mu(y, z);
                for (auto const& x : M[c][d]) {
                  muassoc.record(inst.mu(inst.mu(x, y), z) == inst.mu(x, yz),
                                 {a, b, c, d}, {&x, &y, &z});
                }
              }
            }
          }
        }
      }
    }

    for (auto* r : {&zero_ax, &dist, &unit, &func, &eps0, &epsnat, &mux, &mug,
                    &muassoc}) {
      report.lines.push_back(r->take());
    }
    return report;
  }

  //! ps = ε(1_B), qk = ε(1_X), kq + sp = ε(1_A), pk = 0, μ(q, s) = ε(0),
  //! where composites with morphisms are taken through ε and μ. Fails with
  //! ConditionFails naming the first condition that does not hold, or the
  //! membership q ∈ map(A, X), s ∈ map(B, A).
  inline Verdict verify_abstract_semibiproduct(
      MapTransformStructure const& inst,
      Homomorphism const&          p,
      Homomorphism const&          k,
      PointedMap const&            q,
      PointedMap const&            s) {
    auto const& A = p.domain();
    auto const& B = p.codomain();
    auto const& X = k.domain();
    if (!k.codomain().same_structure(A) || !q.domain().same_structure(A)
        || !q.codomain().same_structure(X) || !s.domain().same_structure(B)
        || !s.codomain().same_structure(A)) {
      throw DomainMismatch("verify_abstract_semibiproduct: maps do not fit");
    }
    auto fail = [](char const* which) {
      return Verdict::fail({"ConditionFails", which, {}, ""});
    };
    if (!inst.contains(q)) {
      return fail("q in map(A,X)");
    }
    if (!inst.contains(s)) {
      return fail("s in map(B,A)");
    }
    auto const ep = inst.epsilon(p);
    auto const ek = inst.epsilon(k);
    if (inst.mu(ep, s) != inst.epsilon(identity_hom(B))) {
      return fail("ps=1");
    }
    if (inst.mu(q, ek) != inst.epsilon(identity_hom(X))) {
      return fail("qk=1");
    }
    if (inst.add(inst.mu(ek, q), inst.mu(s, ep))
        != inst.epsilon(identity_hom(A))) {
      return fail("kq+sp=1");
    }
    if (!is_zero(compose(p, k).map())) {
      return fail("pk=0");
    }
    if (inst.mu(q, s) != inst.epsilon(zero_hom(B, X))) {
      return fail("qs=0");
    }
    return Verdict::pass();
  }

  struct RecognizerResult {
    Verdict verdict;
    //! Number of (Y, u) pairs examined.
    std::uint64_t checked = 0;
    //! Number of counterexamples found.
    std::uint64_t counterexamples = 0;
    //! First counterexample: universe index of Y and the values of u.
    std::optional<std::size_t>          object;
    std::optional<PointedMap>           map;
  };

  //! For each Y in the universe and u ∈ map(Y, X): if μ(ε(k), u) is in
  //! ε(hom(Y, A)) then u must be in ε(hom(Y, X)). Fails with NotMono if k is
  //! not injective.
  inline RecognizerResult check_recognizer(
      MapTransformStructure const&     inst,
      Homomorphism const&              k,
      std::vector<FiniteMonoid> const& universe) {
    RecognizerResult out;
    if (!is_injective(k.map())) {
      out.verdict = Verdict::fail({"NotMono", "", {}, ""});
      return out;
    }
    auto const ek = inst.epsilon(k);
    for (std::size_t y = 0; y < universe.size(); ++y) {
      if (!inst.is_object(universe[y])) {
        continue;
      }
      for (auto const& u : inst.maps(universe[y], k.domain())) {
        ++out.checked;
        if (inst.in_epsilon_image(inst.mu(ek, u))
            && !inst.in_epsilon_image(u)) {
          if (out.counterexamples++ == 0) {
            out.object = y;
            out.map    = u;
            out.verdict
                = Verdict::fail({"NotRecognizer", "", {static_cast<index_t>(y)},
                                 detail::describe(u)});
          }
        }
      }
    }
    return out;
  }

  //! Dual check: for each Y and v ∈ map(B, Y), if μ(v, ε(p)) is in
  //! ε(hom(A, Y)) then v must be in ε(hom(B, Y)). Counterexamples are
  //! scanned in universe order, then in the instance's map order.
  inline RecognizerResult check_corecognizer(
      MapTransformStructure const&     inst,
      Homomorphism const&              p,
      std::vector<FiniteMonoid> const& universe) {
    RecognizerResult out;
    auto const       ep = inst.epsilon(p);
    for (std::size_t y = 0; y < universe.size(); ++y) {
      if (!inst.is_object(universe[y])) {
        continue;
      }
      for (auto const& v : inst.maps(p.codomain(), universe[y])) {
        ++out.checked;
        if (inst.in_epsilon_image(inst.mu(v, ep))
            && !inst.in_epsilon_image(v)) {
          if (out.counterexamples++ == 0) {
            out.object = y;
            out.map    = v;
            out.verdict = Verdict::fail({"NotCoRecognizer",
                                         "",
                                         {static_cast<index_t>(y)},
                                         detail::describe(v)});
          }
        }
      }
    }
    return out;
  }

  //! In monoids an injective homomorphism k recognizes every u: if k∘u is a
  //! homomorphism then k(u(y + y')) = k(u(y)) + k(u(y')) = k(u(y) + u(y'))
  //! and injectivity gives u(y + y') = u(y) + u(y'). This checks the two
  //! premises, which certifies the conclusion for every object.
  inline Verdict certify_monoid_recognizer(PointedMap const& k) {
    if (!is_injective(k)) {
      return Verdict::fail({"NotMono", "", {}, ""});
    }
    if (auto h = is_homomorphism(k); !h) {
      return Verdict::fail({"NotHomomorphism",
                            "k",
                            {h.witness->first, h.witness->second},
                            ""});
    }
    return Verdict::pass();
  }

  //! k∘f = k∘g implies f = g for all morphisms f, g: Y → dom k, Y in the
  //! universe.
  inline Verdict is_monic_in(MapTransformStructure const&     inst,
                             Homomorphism const&              k,
                             std::vector<FiniteMonoid> const& universe) {
    for (std::size_t y = 0; y < universe.size(); ++y) {
      auto const hs = inst.homs(universe[y], k.domain());
      for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
          if (compose(k, hs[i]) == compose(k, hs[j])) {
            return Verdict::fail({"NotMonic", "", {static_cast<index_t>(y)},
                                  ""});
          }
        }
      }
    }
    return Verdict::pass();
  }

  //! f∘p = g∘p implies f = g for all morphisms f, g: cod p → Y.
  inline Verdict is_epic_in(MapTransformStructure const&     inst,
                            Homomorphism const&              p,
                            std::vector<FiniteMonoid> const& universe) {
    for (std::size_t y = 0; y < universe.size(); ++y) {
      auto const hs = inst.homs(p.codomain(), universe[y]);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
          if (compose(hs[i], p) == compose(hs[j], p)) {
            return Verdict::fail({"NotEpic", "", {static_cast<index_t>(y)},
                                  ""});
          }
        }
      }
    }
    return Verdict::pass();
  }

  //! The image of k is the p-fibre of the identity, and every morphism
  //! h: Y → A with p∘h = 0 factors uniquely as k∘h'.
  inline Verdict is_kernel_in(MapTransformStructure const&     inst,
                              Homomorphism const&              k,
                              Homomorphism const&              p,
                              std::vector<FiniteMonoid> const& universe) {
    auto const& A = p.domain();
    for (index_t a = 0; a < A.size(); ++a) {
      bool in_image = false;
      for (index_t x = 0; x < k.domain().size(); ++x) {
        in_image = in_image || k(x) == a;
      }
      if (in_image != (p(a) == p.codomain().identity())) {
        return Verdict::fail({"NotKernel", "image", {a}, ""});
      }
    }
    for (std::size_t y = 0; y < universe.size(); ++y) {
      for (auto const& h : inst.homs(universe[y], A)) {
        if (!is_zero(compose(p, h).map())) {
          continue;
        }
        std::size_t factorizations = 0;
        for (auto const& h1 : inst.homs(universe[y], k.domain())) {
          factorizations += compose(k, h1) == h;
        }
        if (factorizations != 1) {
          return Verdict::fail({"NotKernel", "factorization",
                                {static_cast<index_t>(y)},
                                detail::describe(h.map())});
        }
      }
    }
    return Verdict::pass();
  }

  //! Every morphism h: A → Y with h∘k = 0 factors uniquely as h'∘p.
  inline Verdict is_cokernel_in(MapTransformStructure const&     inst,
                                Homomorphism const&              p,
                                Homomorphism const&              k,
                                std::vector<FiniteMonoid> const& universe) {
    auto const& A = p.domain();
    for (std::size_t y = 0; y < universe.size(); ++y) {
      for (auto const& h : inst.homs(A, universe[y])) {
        if (!is_zero(compose(h, k).map())) {
          continue;
        }
        std::size_t factorizations = 0;
        for (auto const& h1 : inst.homs(p.codomain(), universe[y])) {
          factorizations += compose(h1, p) == h;
        }
        if (factorizations != 1) {
          return Verdict::fail({"NotCokernel", "factorization",
                                {static_cast<index_t>(y)},
                                detail::describe(h.map())});
        }
      }
    }
    return Verdict::pass();
  }

  //! First (g, x, y) over pairs drawn from `sample` with
  //! g∘(x + y) ≠ g∘x + g∘y; g is necessarily not a homomorphism.
  struct DistributivityFailure {
    PointedMap g, x, y;
  };

  inline std::optional<DistributivityFailure> find_left_distributivity_failure(
      std::vector<FiniteMonoid> const& sample) {
    for (auto const& A : sample) {
      for (auto const& B : sample) {
        auto const xs = all_pointed_maps(A, B);
        for (auto const& C : sample) {
          for (auto const& g : all_pointed_maps(B, C)) {
            for (auto const& x : xs) {
              for (auto const& y : xs) {
                if (compose(g, pointwise_add(x, y))
                    != pointwise_add(compose(g, x), compose(g, y))) {
                  return DistributivityFailure{g, x, y};
                }
              }
            }
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace sbp

#endif  // SBP_MAP_TRANSFORM_HPP_

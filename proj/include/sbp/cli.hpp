// The `sbp` command line: argument parsing, dispatch and report rendering.
//
// Reports go to `out` as JSON (default) or plain text; diagnostics go to
// `err`. Exit codes: 0 when every check passes, 1 when a mathematical check
// fails, 2 for usage, parse and budget errors. Enumeration commands write one
// JSON object per line followed by a summary line.

#ifndef SBP_CLI_HPP_
#define SBP_CLI_HPP_

#include <algorithm>   // for max
#include <array>       // for array
#include <functional>  // for function
#include <ostream>     // for ostream
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include <CLI11.hpp>

#include "bounded.hpp"        // for check_partial_relation
#include "catalog.hpp"        // for chain_bundle, builtin
#include "census.hpp"         // for enumerate_monoids_up_to
#include "core.hpp"           // for Error, BudgetExceeded
#include "enumeration.hpp"    // for enumerate_pseudo_actions
#include "io.hpp"             // for Workspace, parse_inputs
#include "map_transform.hpp"  // for check_recognizer
#include "pseudo_action.hpp"  // for validate_pseudo_action
#include "relation.hpp"       // for enumerate_relation_extensions
#include "semibiproduct.hpp"  // for verify_semibiproduct
#include "synthesis.hpp"      // for synthesize

namespace sbp::cli {

  using io::json;

  enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

  class UsageError : public Error {
   public:
    using Error::Error;
  };

  struct Options {
    unsigned      jobs   = 0;
    std::uint64_t budget = DEFAULT_BUDGET;
    std::size_t   bound  = 10;
    bool          text   = false;
  };

  namespace detail {

    // ------------------------------------------------------------ output

    inline void print(std::ostream& out, json const& j) {
      out << j.dump(2) << "\n";
    }

    inline void print_line(std::ostream& out, json const& j) {
      out << j.dump() << "\n";
    }

    inline json header(std::string const& command) {
      json j;
      j["schema"]  = io::SCHEMA;
      j["command"] = command;
      return j;
    }

    // Terminal columns, counting each UTF-8 sequence as one.
    inline std::size_t width(std::string const& s) {
      std::size_t n = 0;
      for (unsigned char c : s) {
        n += (c & 0xC0) != 0x80;
      }
      return n;
    }

    inline std::string pad(std::string const& s, std::size_t w) {
      auto const n = width(s);
      return n < w ? s + std::string(w - n, ' ') : s;
    }

    //! Renders rows of cells with the first row as a header.
    inline std::string grid(std::vector<std::vector<std::string>> const& rows,
                            std::size_t header_cols = 1) {
      std::vector<std::size_t> w;
      for (auto const& r : rows) {
        w.resize(std::max(w.size(), r.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
          w[i] = std::max(w[i], width(r[i]));
        }
      }
      std::ostringstream os;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        std::string line;
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
          if (i > 0) {
            line += i == header_cols ? " | " : " ";
          }
          line += pad(rows[r][i], w[i]);
        }
        while (!line.empty() && line.back() == ' ') {
          line.pop_back();
        }
        os << line << "\n";
        if (r == 0) {
          std::size_t total = 0;
          for (std::size_t i = 0; i < w.size(); ++i) {
            total += w[i] + (i == 0 ? 0 : (i == header_cols ? 3 : 1));
          }
          os << std::string(total, '-') << "\n";
        }
      }
      return os.str();
    }

    //! Table of f(r, c) with rows and columns labelled by `rl` and `cl`.
    inline std::string labelled_table(
        std::string const&                              corner,
        std::vector<std::string> const&                 rl,
        std::vector<std::string> const&                 cl,
        std::function<std::string(index_t, index_t)> const& f) {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({corner});
      rows[0].insert(rows[0].end(), cl.begin(), cl.end());
      for (index_t r = 0; r < rl.size(); ++r) {
        std::vector<std::string> row{rl[r]};
        for (index_t c = 0; c < cl.size(); ++c) {
          row.push_back(f(r, c));
        }
        rows.push_back(std::move(row));
      }
      return grid(rows);
    }

    inline std::string monoid_text(FiniteMonoid const& m) {
      return labelled_table(
          m.notation() == Notation::additive ? "+" : "·",
          m.elements(),
          m.elements(),
          [&](index_t i, index_t j) { return m.label(m.op(i, j)); });
    }

    inline json table_json(FiniteMonoid const& m) {
      json rows = json::array();
      for (index_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (index_t j = 0; j < m.size(); ++j) {
          row.push_back(m.label(m.op(i, j)));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    inline std::string action_text(PseudoAction const& pa) {
      auto const& X = pa.X();
      auto const& B = pa.B();
      std::string s = "b·x\n";
      s += labelled_table("b\\x", B.elements(), X.elements(),
                          [&](index_t b, index_t x) {
                            return X.label(pa.act(b, x));
                          });
      s += "x^b\n";
      s += labelled_table("x\\b", X.elements(), B.elements(),
                          [&](index_t x, index_t b) {
                            return X.label(pa.correction(x, b));
                          });
      s += "b×b'\n";
      s += labelled_table("b\\b'", B.elements(), B.elements(),
                          [&](index_t b, index_t c) {
                            return X.label(pa.factor(b, c));
                          });
      return s;
    }

    inline json action_json(std::string const& name, PseudoAction const& pa,
                            bool embed = false) {
      return io::to_json(io::NamedAction{name, pa.to_raw()}, embed);
    }

    // --------------------------------------------------------- witnesses

    inline std::string at(FiniteMonoid const& M,
                          std::vector<index_t> const& w,
                          std::size_t first = 0, std::size_t count = 99) {
      std::string s;
      std::size_t n = 0;
      for (std::size_t i = first; i < w.size() && n < count; ++i, ++n) {
        s += (n == 0 ? "" : ",") + (w[i] < M.size() ? M.label(w[i])
                                                    : std::to_string(w[i]));
      }
      return n == 1 ? s : "(" + s + ")";
    }

    //! Human-readable form of a verification failure, for example
    //! "k not homomorphism at (s,s)".
    inline std::string describe(Bundle const& b, Violation const& v) {
      if (v.kind == "NotHomomorphism") {
        auto const& dom = v.which == "p" ? b.A : b.X;
        return v.which + " not homomorphism at " + at(dom, v.witness);
      }
      if (v.kind == "ConditionFails") {
        FiniteMonoid const* dom = &b.A;
        if (v.which == "ps=1" || v.which == "qs=0") {
          dom = &b.B;
        } else if (v.which == "qk=1" || v.which == "pk=0") {
          dom = &b.X;
        }
        return "condition " + v.which + " fails at " + at(*dom, v.witness);
      }
      return v.to_string();
    }

    inline std::string describe(RawPseudoAction const& a, Violation const& v) {
      if (v.kind == "UnitLawFails") {
        bool const on_x = v.which == "1·x=x" || v.which == "x^1=x";
        return "unit law " + v.which + " fails at "
               + at(on_x ? a.X : a.B, v.witness);
      }
      if (v.kind == "FactorEquationFails" && v.witness.size() == 6) {
        return "factor equation fails at x,x',x''=" + at(a.X, v.witness, 0, 3)
               + " b,b',b''=" + at(a.B, v.witness, 3, 3);
      }
      return v.to_string();
    }

    inline std::string describe(RelationScheme const& s, Violation const& v) {
      if (v.kind == "OplusMismatch") {
        return v.which + " fails at " + at(s.X, v.witness);
      }
      if ((v.kind == "CorrectionMismatch" || v.kind == "DecompositionFails")
          && v.witness.size() == 2) {
        return v.which + " fails at " + s.X.label(v.witness[0]) + "R"
               + s.B.label(v.witness[1]);
      }
      return v.to_string();
    }

    template <typename Subject>
    json violation_json(Subject const& subject, Violation const& v) {
      auto j    = io::to_json(v);
      j["text"] = describe(subject, v);
      return j;
    }

    inline std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    // ----------------------------------------------------------- inputs

    inline FiniteMonoid resolve_monoid(io::Workspace const& ws,
                                       std::string const&   name) {
      if (auto const* m = ws.monoid(name)) {
        return *m;
      }
      if (auto m = catalog::builtin(name)) {
        return *m;
      }
      throw UsageError("unknown monoid \"" + name
                       + "\" (load it from a file or use Z<n>, L2, trivial, "
                         "M<n>.<i>)");
    }

    inline SearchOptions search_options(Options const& opt) {
      SearchOptions s;
      s.budget    = opt.budget;
      s.jobs      = opt.jobs;
      s.propagate = true;
      return s;
    }

    // ---------------------------------------------------- semi-biproducts

    //! Verification plus the embedding and decomposition checks for one
    //! bundle. Returns whether everything held.
    inline bool bundle_report(Bundle const& b, json& j, std::string& text) {
      auto r = b.verify();
      j["name"]          = b.name;
      j["semibiproduct"] = r.has_value();
      if (!r) {
        j["violation"] = violation_json(b, r.error());
        text += b.name + ": semi-biproduct: no, " + describe(b, r.error())
                + "\n";
        return false;
      }
      auto const& sb     = *r;
      bool const  schr   = is_schreier(sb);
      auto const  beta   = beta_embedding(sb);
      auto const  decomp = decomposition_check(sb);
      j["schreier"]      = schr;
      j["order"]         = sb.A().size();
      j["embedding"]     = beta.defect ? io::to_json(*beta.defect) : json("ok");
      j["decomposition"]
          = decomp ? json("ok") : io::to_json(*decomp.violation);
      text += b.name + ": semi-biproduct: yes, Schreier: " + yes_no(schr)
              + "\n";
      if (beta.defect) {
        text += "  embedding: " + beta.defect->to_string() + "\n";
      }
      if (!decomp) {
        text += "  decomposition: " + decomp.violation->to_string() + "\n";
      }
      return !beta.defect && decomp.holds();
    }

    inline int cmd_verify(io::Workspace const& ws, Options const& opt,
                          std::ostream& out) {
      if (ws.bundles.empty()) {
        throw UsageError("verify: no semi-biproduct in the inputs");
      }
      auto        j   = header("verify");
      json        res = json::array();
      std::string text;
      bool        ok = true;
      for (auto const& b : ws.bundles) {
        json e;
        ok = bundle_report(b, e, text) && ok;
        res.push_back(std::move(e));
      }
      j["results"] = std::move(res);
      j["ok"]      = ok;
      if (opt.text) {
        out << text;
      } else {
        print(out, j);
      }
      return ok ? exit_ok : exit_failed;
    }

    inline int cmd_extract(io::Workspace const& ws, Options const& opt,
                           std::ostream& out) {
      if (ws.bundles.empty()) {
        throw UsageError("extract: no semi-biproduct in the inputs");
      }
      auto        j   = header("extract");
      json        res = json::array();
      std::string text;
      bool        ok = true;
      for (auto const& b : ws.bundles) {
        json e;
        e["name"] = b.name;
        auto r    = b.verify();
        if (!r) {
          ok             = false;
          e["violation"] = violation_json(b, r.error());
          text += b.name + ": not a semi-biproduct, " + describe(b, r.error())
                  + "\n";
        } else {
          auto const pa          = extract_pseudo_action(*r);
          e["pseudo_action"]     = action_json(b.name, pa);
          e["trivial_correction"] = pa.has_trivial_correction();
          text += b.name + ":\n" + action_text(pa);
        }
        res.push_back(std::move(e));
      }
      j["results"] = std::move(res);
      j["ok"]      = ok;
      if (opt.text) {
        out << text;
      } else {
        print(out, j);
      }
      return ok ? exit_ok : exit_failed;
    }

    // ------------------------------------------------------ pseudo-actions

    inline int cmd_validate_action(io::Workspace const& ws,
                                   Options const&       opt,
                                   std::ostream&        out) {
      if (ws.actions.empty()) {
        throw UsageError("validate-action: no pseudo-action in the inputs");
      }
      auto        j   = header("validate-action");
      json        res = json::array();
      std::string text;
      bool        ok = true;
      for (auto const& a : ws.actions) {
        json e;
        e["name"] = a.name;
        auto r    = validate_pseudo_action(a.action);
        e["valid"] = r.has_value();
        if (!r) {
          ok             = false;
          e["violation"] = violation_json(a.action, r.error());
          text += a.name + ": invalid, " + describe(a.action, r.error())
                  + "\n";
        } else {
          auto const rep = check_derived_identities(*r);
          json       ids = json::array();
          for (auto const& t : rep.identities) {
            json l;
            l["name"]     = t.name;
            l["checked"]  = t.checked;
            l["failures"] = t.failures;
            if (t.first_failure) {
              l["witness"] = *t.first_failure;
            }
            ids.push_back(std::move(l));
          }
          e["derived_identities"] = std::move(ids);
          e["trivial_correction"] = r->has_trivial_correction();
          ok                      = rep.all_hold() && ok;
          text += a.name + ": valid, derived identities: "
                  + (rep.all_hold() ? std::string("hold") : "FAIL")
                  + ", trivial correction: "
                  + yes_no(r->has_trivial_correction()) + "\n";
        }
        res.push_back(std::move(e));
      }
      j["results"] = std::move(res);
      j["ok"]      = ok;
      if (opt.text) {
        out << text;
      } else {
        print(out, j);
      }
      return ok ? exit_ok : exit_failed;
    }

    inline int cmd_synthesize(io::Workspace const& ws, Options const& opt,
                              std::ostream& out) {
      if (ws.actions.empty()) {
        throw UsageError("synthesize: no pseudo-action in the inputs");
      }
      auto        j   = header("synthesize");
      json        res = json::array();
      std::string text;
      bool        ok = true;
      for (auto const& a : ws.actions) {
        json e;
        e["name"] = a.name;
        auto r    = validate_pseudo_action(a.action);
        if (!r) {
          ok             = false;
          e["violation"] = violation_json(a.action, r.error());
          text += a.name + ": invalid, " + describe(a.action, r.error())
                  + "\n";
          res.push_back(std::move(e));
          continue;
        }
        auto syn = synthesize(*r);
        if (!syn) {
          ok             = false;
          e["violation"] = io::to_json(syn.error());
          text += a.name + ": " + syn.error().to_string() + "\n";
          res.push_back(std::move(e));
          continue;
        }
        auto const& sb   = syn->semibiproduct;
        auto const  rt   = roundtrip_equivalent(*r);
        json        carrier = json::array();
        for (auto [x, b] : syn->carrier) {
          carrier.push_back(json::array({a.action.X.label(x),
                                         a.action.B.label(b)}));
        }
        e["semibiproduct"] = io::to_json(Bundle::from(sb, a.name), true);
        e["carrier"]       = std::move(carrier);
        e["schreier"]      = is_schreier(sb);
        e["roundtrip"]
            = rt.holds() ? json("ok") : io::to_json(*rt.violation);
        ok = rt.holds() && ok;
        text += a.name + ": |A| = " + std::to_string(sb.A().size())
                + ", Schreier: " + yes_no(is_schreier(sb))
                + ", round trip: " + (rt.holds() ? "ok" : "FAIL") + "\n"
                + monoid_text(sb.A());
        res.push_back(std::move(e));
      }
      j["results"] = std::move(res);
      j["ok"]      = ok;
      if (opt.text) {
        out << text;
      } else {
        print(out, j);
      }
      return ok ? exit_ok : exit_failed;
    }

    // -------------------------------------------------------- enumeration

    inline std::string compact(PseudoAction const& pa) {
      auto rows = [](std::vector<std::vector<std::int64_t>> const& t) {
        return json(t).dump();
      };
      auto raw = pa.to_raw();
      return "phi=" + rows(raw.phi) + " rho=" + rows(raw.rho)
             + " gamma=" + rows(raw.gamma);
    }

    inline int cmd_enumerate_actions(FiniteMonoid const& X,
                                     FiniteMonoid const& B,
                                     Options const&      opt,
                                     std::ostream&       out) {
      auto const all = enumerate_pseudo_actions(X, B, search_options(opt));
      std::size_t schreier = 0;
      for (std::size_t i = 0; i < all.size(); ++i) {
        bool const t = all[i].has_trivial_correction();
        schreier += t;
        if (opt.text) {
          out << i << ": " << compact(all[i]) << "\n";
        } else {
          json line;
          line["type"]  = "pseudo-action";
          line["index"] = i;
          auto const body = action_json(
              X.name() + "/" + B.name() + "#" + std::to_string(i), all[i]);
          for (auto const& [key, value] : body.items()) {
            line[key] = value;
          }
          line["trivial_correction"] = t;
          print_line(out, line);
        }
      }
      if (opt.text) {
        out << all.size() << " pseudo-actions over (" << X.name() << ", "
            << B.name() << "), " << schreier << " with trivial correction\n";
      } else {
        auto j                  = header("enumerate-actions");
        j["type"]               = "summary";
        j["X"]                  = X.name();
        j["B"]                  = B.name();
        j["count"]              = all.size();
        j["trivial_correction"] = schreier;
        print_line(out, j);
      }
      return exit_ok;
    }

    inline int cmd_enumerate_relations(RelationScheme const& scheme,
                                       Options const&        opt,
                                       std::ostream&         out) {
      auto const all
          = enumerate_relation_extensions(scheme, search_options(opt));
      std::size_t accepted = 0;
      for (std::size_t i = 0; i < all.size(); ++i) {
        auto const& c = all[i];
        accepted += c.accepted();
        if (opt.text) {
          out << "structure " << i << ": "
              << (c.accepted()
                      ? std::string("accepted")
                      : "rejected, " + describe(scheme, *c.rejection))
              << "\n"
              << monoid_text(c.monoid);
        } else {
          json line;
          line["type"]     = "candidate";
          line["index"]    = i;
          line["elements"] = c.monoid.elements();
          line["table"]    = table_json(c.monoid);
          line["accepted"] = c.accepted();
          if (c.rejection) {
            line["rejection"] = violation_json(scheme, *c.rejection);
          }
          if (c.semibiproduct) {
            line["schreier"] = is_schreier(*c.semibiproduct);
          }
          print_line(out, line);
        }
      }
      if (opt.text) {
        out << all.size() << " monoid structures on R, " << accepted
            << " accepted\n";
      } else {
        auto j        = header("enumerate-relations");
        j["type"]     = "summary";
        j["X"]        = scheme.X.name();
        j["B"]        = scheme.B.name();
        j["relation"] = scheme.labels();
        j["count"]    = all.size();
        j["accepted"] = accepted;
        print_line(out, j);
      }
      return exit_ok;
    }

    inline int cmd_classify(FiniteMonoid const& X, FiniteMonoid const& B,
                            bool free, Options const& opt, std::ostream& out) {
      auto const all = enumerate_pseudo_actions(X, B, search_options(opt));
      std::vector<SemiBiproduct> sbs;
      sbs.reserve(all.size());
      for (auto const& pa : all) {
        sbs.push_back(synthesize(pa).value().semibiproduct);
      }
      auto const classes = classify_up_to_iso(
          sbs, free ? IsoMode::free_endpoints : IsoMode::fixed_endpoints);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        auto const& c  = classes[i];
        auto const& sb = sbs[c.representative];
        if (opt.text) {
          out << "class " << i << ": " << c.members.size()
              << " pseudo-actions, |A| = " << sb.A().size()
              << ", group: " << yes_no(sb.A().is_group())
              << ", commutative: " << yes_no(sb.A().is_commutative())
              << ", Schreier: " << yes_no(is_schreier(sb)) << "\n  "
              << compact(all[c.representative]) << "\n";
        } else {
          json line;
          line["type"]           = "class";
          line["index"]          = i;
          line["size"]           = c.members.size();
          line["members"]        = c.members;
          line["order"]          = sb.A().size();
          line["group"]          = sb.A().is_group();
          line["commutative"]    = sb.A().is_commutative();
          line["schreier"]       = is_schreier(sb);
          line["representative"] = action_json(
              "class" + std::to_string(i), all[c.representative]);
          print_line(out, line);
        }
      }
      if (opt.text) {
        out << classes.size() << " classes among " << all.size()
            << " pseudo-actions ("
            << (free ? "free endpoints" : "fixed endpoints") << ")\n";
      } else {
        auto j             = header("classify");
        j["type"]          = "summary";
        j["X"]             = X.name();
        j["B"]             = B.name();
        j["mode"]          = free ? "free-endpoints" : "fixed-endpoints";
        j["pseudo_actions"] = all.size();
        j["classes"]       = classes.size();
        print_line(out, j);
      }
      return exit_ok;
    }

    // ---------------------------------------------------- map-transforms

    inline json recognizer_json(RecognizerResult const&          r,
                                std::vector<FiniteMonoid> const& universe) {
      json j;
      j["holds"]           = r.verdict.holds();
      j["checked"]         = r.checked;
      j["counterexamples"] = r.counterexamples;
      if (r.object && r.map) {
        j["object"] = universe[*r.object].name();
        j["map"]    = ::sbp::detail::describe(*r.map);
      } else if (r.verdict.violation) {
        j["violation"] = io::to_json(*r.verdict.violation);
      }
      return j;
    }

    inline int cmd_check_recognizer(io::Workspace const& ws,
                                    std::string const&   instance,
                                    std::size_t          universe_order,
                                    bool                 co,
                                    std::string const&   map_name,
                                    Options const&       opt,
                                    std::ostream&        out) {
      auto const inst     = make_instance(instance);
      auto const universe = enumerate_monoids_up_to(universe_order);
      auto       j        = header("check-recognizer");
      j["instance"]       = instance;
      j["mode"]           = co ? "co-recognizer" : "recognizer";
      std::vector<std::string> names;
      for (auto const& m : universe) {
        names.push_back(m.name());
      }
      j["universe"] = names;
      std::string text;
      bool        ok = true;

      auto check = [&](Homomorphism const& h) {
        return co ? check_corecognizer(*inst, h, universe)
                  : check_recognizer(*inst, h, universe);
      };

      if (!map_name.empty()) {
        auto const* m = ws.map(map_name);
        if (m == nullptr) {
          throw UsageError("unknown map \"" + map_name + "\"");
        }
        auto h = Homomorphism::make(m->map);
        if (!h) {
          j["map"]       = map_name;
          j["violation"] = io::to_json(h.error());
          ok             = false;
          text += map_name + ": not a homomorphism\n";
        } else {
          auto const r = check(*h);
          j["map"]     = map_name;
          j["result"]  = recognizer_json(r, universe);
          ok           = r.verdict.holds();
          text += map_name + ": " + (co ? "co-recognizer" : "recognizer")
                  + " over the universe: " + yes_no(ok);
          if (r.map) {
            text += ", counterexample " + ::sbp::detail::describe(*r.map);
          }
          text += "\n";
        }
      } else {
        // Every morphism between universe objects that the theory says
        // should pass: injective ones for recognizers, surjective ones for
        // co-recognizers. The others are reported for information.
        std::uint64_t expected = 0, expected_pass = 0, other = 0,
                      other_pass = 0;
        json          failures = json::array();
        json          others   = json::array();
        for (auto const& D : universe) {
          for (auto const& C : universe) {
            for (auto const& h : all_homomorphisms(D, C)) {
              bool const should = co ? is_surjective(h.map())
                                     : is_injective(h.map());
              if (!co && !should) {
                continue;  // not a monomorphism
              }
              auto const r = check(h);
              if (should) {
                ++expected;
                expected_pass += r.verdict.holds();
                if (!r.verdict.holds()) {
                  json f    = recognizer_json(r, universe);
                  f["morphism"] = ::sbp::detail::describe(h.map());
                  failures.push_back(std::move(f));
                }
              } else {
                ++other;
                other_pass += r.verdict.holds();
                if (!r.verdict.holds() && others.size() < 20) {
                  json f    = recognizer_json(r, universe);
                  f["morphism"] = ::sbp::detail::describe(h.map());
                  others.push_back(std::move(f));
                }
              }
            }
          }
        }
        ok = expected == expected_pass;
        char const* kind = co ? "surjective" : "injective";
        j[kind]          = expected;
        j[std::string(kind) + "_certified"] = expected_pass;
        j["failures"]    = std::move(failures);
        if (co) {
          j["non_surjective"]           = other;
          j["non_surjective_certified"] = other_pass;
          j["non_surjective_counterexamples"] = std::move(others);
        }
        text += std::to_string(expected_pass) + " of "
                + std::to_string(expected) + " " + kind
                + " homomorphisms certified over the universe";
        if (co) {
          text += "; " + std::to_string(other - other_pass) + " of "
                  + std::to_string(other)
                  + " non-surjective ones have a counterexample";
        }
        text += "\n";
      }
      j["ok"] = ok;
      if (opt.text) {
        out << text;
      } else {
        print(out, j);
      }
      return ok ? exit_ok : exit_failed;
    }

    inline int cmd_check_axioms(std::string const& instance,
                                std::size_t universe_order, Options const& opt,
                                std::ostream& out) {
      auto const inst   = make_instance(instance);
      auto const sample = enumerate_monoids_up_to(universe_order);
      auto const rep    = verify_structure_axioms(*inst, sample);
      auto       j      = header("check-axioms");
      j["instance"]     = instance;
      j["objects"]      = rep.objects;
      json lines        = json::array();
      std::string text;
      for (auto const& l : rep.lines) {
        json e;
        e["name"]    = l.name;
        e["checked"] = l.checked;
        e["holds"]   = !l.failure.has_value();
        if (l.failure) {
          e["violation"] = io::to_json(*l.failure);
        }
        lines.push_back(std::move(e));
        text += pad(l.name, 24) + " " + std::to_string(l.checked) + " "
                + (l.failure ? "FAIL " + l.failure->to_string() : "ok")
                + "\n";
      }
      j["axioms"] = std::move(lines);
      j["ok"]     = rep.all_hold();
      if (opt.text) {
        out << text;
      } else {
        print(out, j);
      }
      return rep.all_hold() ? exit_ok : exit_failed;
    }

    // ---------------------------------------------------------- examples

    inline int example_paper_e1(Options const& opt, std::ostream& out) {
      auto const b      = catalog::chain_bundle();
      auto const scheme = catalog::three_element_scheme();
      auto const r      = b.verify();
      auto       j      = header("examples");
      j["example"]      = "paper-e1";
      j["elements"]     = b.A.elements();
      j["operation_table"] = table_json(b.A);

      std::vector<std::string> const cols{"x",     "b",     "x'",  "b'",
                                          "x⊕x'", "b×b'", "b·x", "x^b"};
      std::vector<std::vector<std::string>> rows{cols};
      std::vector<std::string>              notes;
      if (r) {
        auto const& sb = *r;
        auto const  pa = extract_pseudo_action(sb);
        auto const& X  = sb.X();
        auto const& B  = sb.B();
        auto oplus = [&](index_t x, index_t y) {
          return sb.q()(sb.A().op(sb.k()(x), sb.k()(y)));
        };
        // One row per pair ((x, b), (x', b')) as listed with the example.
        std::vector<std::array<index_t, 4>> const picks{
            {0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 1, 1, 1}};
        for (auto [x, bb, y, c] : picks) {
          rows.push_back({X.label(x),
                          B.label(bb),
                          X.label(y),
                          B.label(c),
                          X.label(oplus(x, y)),
                          X.label(pa.factor(bb, c)),
                          X.label(pa.act(bb, x)),
                          X.label(pa.correction(x, bb))});
        }
        for (index_t bb = 0; bb < B.size(); ++bb) {
          for (index_t x = 0; x < X.size(); ++x) {
            if (!scheme.find(x, bb)) {
              notes.push_back(X.label(x) + "^" + B.label(bb) + "="
                              + X.label(pa.correction(x, bb)) + " but ("
                              + X.label(x) + "," + B.label(bb) + ")∉R");
            }
          }
        }
      }
      json table = json::array();
      for (std::size_t i = 1; i < rows.size(); ++i) {
        table.push_back(rows[i]);
      }
      j["operations"] = json{{"columns", cols}, {"rows", std::move(table)}};
      j["notes"]      = notes;
      j["semibiproduct"] = r.has_value();
      bool const schr    = r && is_schreier(*r);
      j["schreier"]      = schr;
      if (!r) {
        j["violation"] = violation_json(b, r.error());
      }
      if (opt.text) {
        out << "R = {" << b.A.label(0) << ", " << b.A.label(1) << ", "
            << b.A.label(2) << "}\n"
            << monoid_text(b.A) << "\n"
            << grid(rows, 4);
        for (auto const& n : notes) {
          out << "note: " << n << "\n";
        }
        out << "semi-biproduct: " << yes_no(r.has_value())
            << ", Schreier: " << yes_no(schr) << "\n";
      } else {
        print(out, j);
      }
      return r ? exit_ok : exit_failed;
    }

    inline int example_paper_e1_reject(Options const& opt, std::ostream& out) {
      auto const scheme = catalog::three_element_scheme();
      auto       so     = search_options(opt);
      auto const all    = enumerate_relation_extensions(scheme, so);
      std::size_t accepted = 0;
      json        cands    = json::array();
      std::string text;
      for (auto const& c : all) {
        accepted += c.accepted();
        json e;
        e["table"]    = table_json(c.monoid);
        e["accepted"] = c.accepted();
        if (c.rejection) {
          e["rejection"] = violation_json(scheme, *c.rejection);
        }
        text += (c.accepted() ? "accepted" : "rejected") + std::string(":\n")
                + monoid_text(c.monoid);
        if (c.rejection) {
          text += "  " + describe(scheme, *c.rejection) + "\n";
        }
        cands.push_back(std::move(e));
      }
      auto const sign = catalog::sign_bundle();
      auto const v    = sign.verify();
      auto       j    = header("examples");
      j["example"]    = "paper-e1-reject";
      j["structures"] = all.size();
      j["accepted"]   = accepted;
      j["candidates"] = std::move(cands);
      j["sign_bundle"] = v ? json("semi-biproduct")
                           : violation_json(sign, v.error());
      text += std::to_string(all.size()) + " structures, "
              + std::to_string(accepted) + " accepted\n";
      text += "sign structure: "
              + (v ? std::string("semi-biproduct") : describe(sign, v.error()))
              + "\n";
      bool const ok = all.size() == 2 && accepted == 1 && !v;
      j["ok"]       = ok;
      if (opt.text) {
        out << text;
      } else {
        print(out, j);
      }
      return ok ? exit_ok : exit_failed;
    }

    inline int example_paper_nat(Options const& opt, std::ostream& out) {
      auto const rel         = catalog::naturals(opt.bound);
      auto const [rrep, tuple] = check_partial_relation(rel);
      CoverageReport srep;
      if (tuple) {
        srep = verify_partial_semibiproduct(*tuple);
      }
      auto holds = [&](std::string const& name) {
        auto const* l = srep.find(name);
        return l != nullptr && !l->failure;
      };
      bool const schr = tuple && holds("x^b=x") && holds("beta injective")
                        && holds("alpha beta=1") && holds("beta alpha=1");
      bool const qs = tuple && holds("q hom") && holds("s hom");
      auto       j  = header("examples");
      j["example"]  = "paper-nat";
      j["bound"]    = opt.bound;
      std::string text;
      auto lines = [&](CoverageReport const& rep) {
        json arr = json::array();
        for (auto const& l : rep.lines) {
          json e;
          e["name"]    = l.name;
          e["checked"] = l.checked;
          e["skipped"] = l.skipped;
          e["holds"]   = !l.failure.has_value();
          if (l.failure) {
            e["violation"] = io::to_json(*l.failure);
          }
          arr.push_back(std::move(e));
          text += pad(l.name, 24) + " checked " + std::to_string(l.checked)
                  + ", skipped " + std::to_string(l.skipped)
                  + (l.failure ? ", FAIL " + l.failure->to_string() : "")
                  + "\n";
        }
        return arr;
      };
      j["relation"]      = lines(rrep);
      j["semibiproduct"] = lines(srep);
      bool const ok      = tuple && rrep.all_hold() && srep.all_hold();
      j["schreier"]      = schr;
      j["q_s_homomorphisms"] = qs;
      j["ok"]            = ok;
      if (opt.text) {
        out << "naturals truncated at " << opt.bound << "\n"
            << text << "semi-biproduct: " << yes_no(ok)
            << ", Schreier: " << yes_no(schr)
            << ", q,s homomorphisms: " << yes_no(qs) << "\n";
      } else {
        print(out, j);
      }
      return ok ? exit_ok : exit_failed;
    }

    inline int example_bundle(std::string const& name, Bundle const& b,
                              Options const& opt, std::ostream& out) {
      auto        j = header("examples");
      j["example"]  = name;
      std::string text;
      bool        ok = bundle_report(b, j, text);
      if (auto r = b.verify()) {
        auto const pa          = extract_pseudo_action(*r);
        j["group"]             = r->A().is_group();
        j["commutative"]       = r->A().is_commutative();
        j["pseudo_action"]     = action_json(b.name, pa);
        text += action_text(pa);
      }
      j["ok"] = ok;
      if (opt.text) {
        out << text;
      } else {
        print(out, j);
      }
      return ok ? exit_ok : exit_failed;
    }

    //! p: 1 → Z3 is not surjective, hence not a co-recognizer.
    inline int example_corecognizer(Options const& opt, std::ostream& out) {
      auto const Z3   = cyclic_group(3);
      auto const p    = zero_hom(trivial_monoid(), Z3);
      auto const inst = make_instance("monoid");
      std::vector<FiniteMonoid> const universe{Z3};
      auto const r    = check_corecognizer(*inst, p, universe);
      auto const v    = PointedMap::make(Z3, Z3, {0, 1, 0}).value();
      bool const v_is_counterexample
          = inst->in_epsilon_image(inst->mu(v, inst->epsilon(p)))
            && !inst->in_epsilon_image(v);
      auto j          = header("examples");
      j["example"]    = "corecognizer-z3";
      j["result"]     = recognizer_json(r, universe);
      j["v"]          = json{{"values", v.values()},
                     {"counterexample", v_is_counterexample}};
      bool const ok   = !r.verdict.holds() && v_is_counterexample;
      j["ok"]         = ok;
      if (opt.text) {
        out << "p: 1 -> Z3, co-recognizer: " << yes_no(r.verdict.holds())
            << "\n";
        if (r.map) {
          out << "first counterexample: " << ::sbp::detail::describe(*r.map)
              << " (" << r.counterexamples << " of " << r.checked << ")\n";
        }
        out << "v = [0,1,0] is a counterexample: "
            << yes_no(v_is_counterexample) << "\n";
      } else {
        print(out, j);
      }
      return ok ? exit_ok : exit_failed;
    }

    inline int cmd_examples(std::string const& name, Options const& opt,
                            std::ostream& out) {
      if (name == "paper-e1") {
        return example_paper_e1(opt, out);
      }
      if (name == "paper-e1-reject") {
        return example_paper_e1_reject(opt, out);
      }
      if (name == "paper-nat") {
        return example_paper_nat(opt, out);
      }
      if (name == "s3") {
        return example_bundle(name, catalog::s3_bundle(), opt, out);
      }
      if (name == "klein") {
        return example_bundle(name, catalog::klein_bundle(), opt, out);
      }
      if (name == "z4") {
        return example_bundle(name, catalog::z4_bundle(), opt, out);
      }
      if (name == "corecognizer-z3") {
        return example_corecognizer(opt, out);
      }
      throw UsageError("unknown example \"" + name + "\"");
    }

    //! "x:b,x:b,..." with element labels or indices.
    inline std::vector<RelationScheme::Pair> parse_pairs(
        std::string const& spec, FiniteMonoid const& X,
        FiniteMonoid const& B) {
      auto lookup = [](FiniteMonoid const& M, std::string const& tok) {
        if (auto i = M.find(tok)) {
          return *i;
        }
        throw UsageError("no element \"" + tok + "\" in " + M.name());
      };
      std::vector<RelationScheme::Pair> out;
      std::stringstream                 ss(spec);
      std::string                       item;
      while (std::getline(ss, item, ',')) {
        auto const colon = item.find(':');
        if (colon == std::string::npos) {
          throw UsageError("--pairs expects x:b items, got \"" + item + "\"");
        }
        out.emplace_back(lookup(X, item.substr(0, colon)),
                         lookup(B, item.substr(colon + 1)));
      }
      return out;
    }

  }  // namespace detail

  //! Runs the command line `args` (without the program name).
  inline int run(std::vector<std::string> const& args, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"Semi-biproducts of finite monoids", "sbp"};
    app.require_subcommand(1);
    app.fallthrough();

    Options     opt;
    std::string format = "json";
    app.add_option("--jobs", opt.jobs,
                   "worker threads (default: SBP_JOBS, else 1)");
    app.add_option("--budget", opt.budget,
                   "limit on elementary checks of a search")
        ->capture_default_str();
    app.add_option("--bound", opt.bound, "truncation bound for paper-nat")
        ->capture_default_str();
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::vector<std::string> files;
    std::string              x_name, b_name, pairs, instance = "monoid",
                                             map_name, example;
    std::size_t              universe = 3;
    bool                     co = false, free = false;

    auto with_files = [&](char const* name, char const* help) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("files", files, "input JSON files");
      return sub;
    };
    auto* verify = with_files("verify", "verify semi-biproduct bundles");
    auto* extract
        = with_files("extract", "extract the pseudo-action of each bundle");
    auto* validate
        = with_files("validate-action", "validate pseudo-action files");
    auto* synth = with_files(
        "synthesize", "build the semi-biproduct of each pseudo-action");
    auto* enum_actions = with_files(
        "enumerate-actions", "all pseudo-actions over a pair of monoids");
    enum_actions->add_option("--x", x_name, "monoid X")->required();
    enum_actions->add_option("--b", b_name, "monoid B")->required();
    auto* enum_rel = with_files("enumerate-relations",
                                "monoid structures on a relation R");
    enum_rel->add_option("--x", x_name, "monoid X")->required();
    enum_rel->add_option("--b", b_name, "monoid B")->required();
    enum_rel->add_option("--pairs", pairs,
                         "R as x:b,x:b,... (default: all of X×B)");
    auto* classify = with_files(
        "classify", "pseudo-actions up to isomorphism of semi-biproducts");
    classify->add_option("--x", x_name, "monoid X")->required();
    classify->add_option("--b", b_name, "monoid B")->required();
    classify->add_flag("--free", free,
                       "allow automorphisms of X and B at the endpoints");
    auto* recog = with_files("check-recognizer",
                             "recognizer or co-recognizer checks");
    recog->add_option("--instance", instance, "monoid | commutative-monoid")
        ->capture_default_str();
    recog->add_option("--universe", universe,
                      "objects: all monoids up to this order")
        ->capture_default_str();
    recog->add_flag("--co", co, "check co-recognizers");
    recog->add_option("--map", map_name, "check one named map");
    auto* axioms = app.add_subcommand(
        "check-axioms", "map-transformation axioms over a sample");
    axioms
        ->add_option("--instance", instance,
                     "monoid | commutative-monoid | broken-epsilon")
        ->capture_default_str();
    axioms->add_option("--universe", universe,
                       "sample: all monoids up to this order")
        ->capture_default_str();
    auto* examples = app.add_subcommand("examples", "worked examples");
    examples
        ->add_option("name", example,
                     "paper-e1 | paper-e1-reject | paper-nat | s3 | klein | "
                     "z4 | corecognizer-z3")
        ->required();

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }
    opt.text = format == "text";

    try {
      auto const ws = io::parse_inputs(files);
      if (verify->parsed()) {
        return detail::cmd_verify(ws, opt, out);
      }
      if (extract->parsed()) {
        return detail::cmd_extract(ws, opt, out);
      }
      if (validate->parsed()) {
        return detail::cmd_validate_action(ws, opt, out);
      }
      if (synth->parsed()) {
        return detail::cmd_synthesize(ws, opt, out);
      }
      if (enum_actions->parsed()) {
        return detail::cmd_enumerate_actions(
            detail::resolve_monoid(ws, x_name),
            detail::resolve_monoid(ws, b_name), opt, out);
      }
      if (enum_rel->parsed()) {
        auto const X = detail::resolve_monoid(ws, x_name);
        auto const B = detail::resolve_monoid(ws, b_name);
        auto       s = pairs.empty()
                           ? projection_scheme(X, B)
                           : projection_scheme(
                               X, B, detail::parse_pairs(pairs, X, B));
        if (!s) {
          throw UsageError("invalid relation: " + s.error().to_string());
        }
        return detail::cmd_enumerate_relations(*s, opt, out);
      }
      if (classify->parsed()) {
        return detail::cmd_classify(detail::resolve_monoid(ws, x_name),
                                    detail::resolve_monoid(ws, b_name),
                                    free, opt, out);
      }
      if (recog->parsed()) {
        return detail::cmd_check_recognizer(
            ws, instance, universe, co, map_name, opt, out);
      }
      if (axioms->parsed()) {
        return detail::cmd_check_axioms(instance, universe, opt, out);
      }
      if (examples->parsed()) {
        return detail::cmd_examples(example, opt, out);
      }
    } catch (BudgetExceeded const& e) {
      err << "budget exceeded: " << e.what() << "\n";
      return exit_usage;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }
    return exit_usage;
  }

}  // namespace sbp::cli

#endif  // SBP_CLI_HPP_

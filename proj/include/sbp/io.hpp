// JSON reading and writing for monoids, maps, pseudo-actions and bundles.
//
// Every top-level document carries "schema": "sbp-1". The kind of a document
// is recognised by its keys:
//
//   monoid        {"name", "elements", "identity", "table", "notation"?}
//   map           {"name"?, "domain", "codomain", "values"}
//   pseudo-action {"name"?, "X", "B", "phi", "rho", "gamma"}
//   bundle        {"name"?, "X", "A", "B", "p", "k", "q", "s"}
//   collection    {"monoids"?, "maps"?, "pseudo_actions"?, "semibiproducts"?}
//
// Monoid fields of pseudo-actions and bundles are either embedded monoid
// objects or names; maps inside a bundle are a values array, an object with
// "values", or the name of a map. A monoid name not defined by an earlier
// document may also be a built-in name (Z3, L2, trivial, M3.2, ...). Tables are indexed phi[b][x], rho[x][b]
// and gamma[b][b'].

#ifndef SBP_IO_HPP_
#define SBP_IO_HPP_

#include <filesystem>  // for path
#include <fstream>     // for ifstream
#include <optional>    // for optional
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include <json.hpp>

#include "catalog.hpp"        // for builtin
#include "core.hpp"           // for Error, Violation
#include "monoid.hpp"         // for FiniteMonoid, RawMonoid
#include "pointed_map.hpp"    // for PointedMap
#include "pseudo_action.hpp"  // for RawPseudoAction
#include "semibiproduct.hpp"  // for Bundle

namespace sbp::io {

  using json = nlohmann::ordered_json;

  inline constexpr char const* SCHEMA = "sbp-1";

  //! Malformed JSON or a document that does not match the schema.
  class ParseError : public Error {
   public:
    ParseError(std::string path, std::string location, std::string what)
        : Error(path + ": " + location + ": " + what),
          path_(std::move(path)),
          location_(std::move(location)) {}

    std::string const& path() const noexcept {
      return path_;
    }

    //! "line L, column C" for syntax errors, a JSON pointer otherwise.
    std::string const& location() const noexcept {
      return location_;
    }

   private:
    std::string path_;
    std::string location_;
  };

  //! Well-formed input whose data is rejected by a validator.
  class ValidationError : public Error {
   public:
    ValidationError(std::string path, std::string object, Violation v)
        : Error(path + ": " + object + ": " + v.to_string()),
          path_(std::move(path)),
          object_(std::move(object)),
          violation_(std::move(v)) {}

    std::string const& path() const noexcept {
      return path_;
    }

    std::string const& object() const noexcept {
      return object_;
    }

    Violation const& violation() const noexcept {
      return violation_;
    }

   private:
    std::string path_;
    std::string object_;
    Violation   violation_;
  };

  //! A name that no loaded monoid or map defines.
  class DanglingReference : public Error {
   public:
    DanglingReference(std::string path, std::string name)
        : Error(path + ": unresolved reference \"" + name + "\""),
          path_(std::move(path)),
          name_(std::move(name)) {}

    std::string const& path() const noexcept {
      return path_;
    }

    std::string const& name() const noexcept {
      return name_;
    }

   private:
    std::string path_;
    std::string name_;
  };

  struct NamedMap {
    std::string name;
    PointedMap  map;

    friend bool operator==(NamedMap const& l, NamedMap const& r) {
      return l.name == r.name && l.map.domain() == r.map.domain()
             && l.map.codomain() == r.map.codomain()
             && l.map.values() == r.map.values();
    }
  };

  struct NamedAction {
    std::string     name;
    RawPseudoAction action;

    friend bool operator==(NamedAction const& l, NamedAction const& r) {
      return l.name == r.name && l.action.X == r.action.X
             && l.action.B == r.action.B && l.action.phi == r.action.phi
             && l.action.rho == r.action.rho
             && l.action.gamma == r.action.gamma;
    }
  };

  //! Everything loaded from a set of files, in load order. Names are unique
  //! per kind; monoids embedded in other documents are registered too.
  struct Workspace {
    std::vector<FiniteMonoid> monoids;
    std::vector<NamedMap>     maps;
    std::vector<NamedAction>  actions;
    std::vector<Bundle>       bundles;

    bool empty() const noexcept {
      return monoids.empty() && maps.empty() && actions.empty()
             && bundles.empty();
    }

    FiniteMonoid const* monoid(std::string_view name) const {
      for (auto const& m : monoids) {
        if (m.name() == name) {
          return &m;
        }
      }
      return nullptr;
    }

    NamedMap const* map(std::string_view name) const {
      for (auto const& m : maps) {
        if (m.name == name) {
          return &m;
        }
      }
      return nullptr;
    }

    friend bool operator==(Workspace const&, Workspace const&) = default;
  };

  // ---------------------------------------------------------------- emit

  inline json to_json(FiniteMonoid const& m) {
    json j;
    j["name"]     = m.name();
    j["elements"] = m.elements();
    j["identity"] = m.identity();
    json table    = json::array();
    for (index_t i = 0; i < m.size(); ++i) {
      json row = json::array();
      for (index_t k = 0; k < m.size(); ++k) {
        row.push_back(m.op(i, k));
      }
      table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    if (m.notation() == Notation::multiplicative) {
      j["notation"] = "multiplicative";
    }
    return j;
  }

  inline json to_json(NamedMap const& m) {
    json j;
    if (!m.name.empty()) {
      j["name"] = m.name;
    }
    j["domain"]   = m.map.domain().name();
    j["codomain"] = m.map.codomain().name();
    j["values"]   = m.map.values();
    return j;
  }

  //! With `embed` the monoids are written in full, otherwise by name.
  inline json to_json(NamedAction const& a, bool embed) {
    json j;
    if (!a.name.empty()) {
      j["name"] = a.name;
    }
    j["X"]     = embed ? to_json(a.action.X) : json(a.action.X.name());
    j["B"]     = embed ? to_json(a.action.B) : json(a.action.B.name());
    j["phi"]   = a.action.phi;
    j["rho"]   = a.action.rho;
    j["gamma"] = a.action.gamma;
    return j;
  }

  inline json to_json(Bundle const& b, bool embed) {
    json j;
    if (!b.name.empty()) {
      j["name"] = b.name;
    }
    auto mon = [&](FiniteMonoid const& m) {
      return embed ? to_json(m) : json(m.name());
    };
    j["X"] = mon(b.X);
    j["A"] = mon(b.A);
    j["B"] = mon(b.B);
    j["p"] = json{{"values", b.p.values()}};
    j["k"] = json{{"values", b.k.values()}};
    j["q"] = json{{"values", b.q.values()}};
    j["s"] = json{{"values", b.s.values()}};
    return j;
  }

  inline json with_schema(json body) {
    json j;
    j["schema"] = SCHEMA;
    for (auto& [key, value] : body.items()) {
      j[key] = std::move(value);
    }
    return j;
  }

  //! The workspace as one collection document.
  inline json to_json(Workspace const& w) {
    json j;
    j["schema"]         = SCHEMA;
    j["monoids"]        = json::array();
    j["maps"]           = json::array();
    j["pseudo_actions"] = json::array();
    j["semibiproducts"] = json::array();
    for (auto const& m : w.monoids) {
      j["monoids"].push_back(to_json(m));
    }
    for (auto const& m : w.maps) {
      j["maps"].push_back(to_json(m));
    }
    for (auto const& a : w.actions) {
      j["pseudo_actions"].push_back(to_json(a, false));
    }
    for (auto const& b : w.bundles) {
      j["semibiproducts"].push_back(to_json(b, false));
    }
    return j;
  }

  inline std::string emit(Workspace const& w) {
    return to_json(w).dump(2) + "\n";
  }

  // --------------------------------------------------------------- parse

  namespace detail {

    //! Incrementally builds a workspace, resolving names against what has
    //! been loaded so far.
    class Loader {
     public:
      explicit Loader(Workspace& w) : w_(w) {}

      void document(json const& j, std::string const& path,
                    std::string const& stem) {
        path_ = path;
        if (!j.is_object()) {
          fail("", "top level must be an object");
        }
        if (!j.contains("schema")) {
          fail("/schema", "missing schema field");
        }
        if (j["schema"] != SCHEMA) {
          fail("/schema", "unsupported schema (expected \"sbp-1\")");
        }
        if (j.contains("table")) {
          add_monoid(monoid(j, "", stem), "");
        } else if (j.contains("values")) {
          add_map(j, "", stem);
        } else if (j.contains("phi")) {
          add_action(j, "", stem);
        } else if (j.contains("p") || j.contains("k")) {
          add_bundle(j, "", stem);
        } else {
          collection(j);
        }
      }

     private:
      [[noreturn]] void fail(std::string const& where,
                             std::string const& what) const {
        throw ParseError(path_, where.empty() ? "/" : where, what);
      }

      json const& field(json const& j, std::string const& where,
                        char const* key) const {
        if (!j.is_object() || !j.contains(key)) {
          fail(where, std::string("missing field \"") + key + "\"");
        }
        return j[key];
      }

      std::string string_field(json const& j, std::string const& where,
                               char const* key) const {
        auto const& v = field(j, where, key);
        if (!v.is_string()) {
          fail(where + "/" + key, "expected a string");
        }
        return v.get<std::string>();
      }

      std::int64_t integer(json const& v, std::string const& where) const {
        if (!v.is_number_integer()) {
          fail(where, "expected an integer");
        }
        return v.get<std::int64_t>();
      }

      std::vector<std::int64_t> int_row(json const& v,
                                        std::string const& where) const {
        if (!v.is_array()) {
          fail(where, "expected an array of integers");
        }
        std::vector<std::int64_t> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
          out.push_back(integer(v[i], where + "/" + std::to_string(i)));
        }
        return out;
      }

      std::vector<std::vector<std::int64_t>> int_table(
          json const& v, std::string const& where) const {
        if (!v.is_array()) {
          fail(where, "expected an array of rows");
        }
        std::vector<std::vector<std::int64_t>> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
          out.push_back(int_row(v[i], where + "/" + std::to_string(i)));
        }
        return out;
      }

      std::vector<index_t> indices(json const& v, std::string const& where,
                                   std::string const& object) const {
        std::vector<index_t> out;
        auto const           row = int_row(v, where);
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (row[i] < 0) {
            throw ValidationError(
                path_,
                object,
                {"IndexOutOfRange", "values", {static_cast<index_t>(i)},
                 "value " + std::to_string(row[i])});
          }
          out.push_back(static_cast<index_t>(row[i]));
        }
        return out;
      }

      FiniteMonoid monoid(json const& j, std::string const& where,
                          std::string const& fallback_name) const {
        RawMonoid raw;
        raw.name = j.contains("name") ? string_field(j, where, "name")
                                      : fallback_name;
        if (j.contains("elements")) {
          auto const& e = j["elements"];
          if (!e.is_array()) {
            fail(where + "/elements", "expected an array of strings");
          }
          for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i].is_string()) {
              fail(where + "/elements/" + std::to_string(i),
                   "expected a string");
            }
            raw.elements.push_back(e[i].get<std::string>());
          }
        }
        if (j.contains("identity")) {
          raw.identity = integer(j["identity"], where + "/identity");
        }
        raw.table = int_table(field(j, where, "table"), where + "/table");
        if (j.contains("notation")) {
          auto const n = string_field(j, where, "notation");
          if (n == "multiplicative") {
            raw.notation = Notation::multiplicative;
          } else if (n != "additive") {
            fail(where + "/notation",
                 "expected \"additive\" or \"multiplicative\"");
          }
        }
        auto m = validate_monoid(raw);
        if (!m) {
          throw ValidationError(path_, raw.name, m.error());
        }
        return std::move(m).value();
      }

      //! Registers `m`, or checks it against an earlier monoid of that name.
      FiniteMonoid add_monoid(FiniteMonoid m, std::string const& where) {
        if (auto const* old = w_.monoid(m.name())) {
          if (*old == m) {
            return *old;
          }
          fail(where, "monoid \"" + m.name() + "\" defined twice differently");
        }
        w_.monoids.push_back(m);
        return m;
      }

      FiniteMonoid monoid_ref(json const& v, std::string const& where,
                              std::string const& fallback_name) {
        if (v.is_string()) {
          auto const name = v.get<std::string>();
          if (auto const* m = w_.monoid(name)) {
            return *m;
          }
          if (auto b = catalog::builtin(name)) {
            return add_monoid(*b, where);
          }
          throw DanglingReference(path_, name);
        }
        if (v.is_object()) {
          return add_monoid(monoid(v, where, fallback_name), where);
        }
        fail(where, "expected a monoid object or name");
      }

      PointedMap map_values(json const& v, std::string const& where,
                            std::string const& object,
                            FiniteMonoid const& dom,
                            FiniteMonoid const& cod) {
        auto m = PointedMap::make(dom, cod, indices(v, where, object));
        if (!m) {
          throw ValidationError(path_, object, m.error());
        }
        return std::move(m).value();
      }

      void add_map(json const& j, std::string const& where,
                   std::string const& fallback_name) {
        auto const name = j.contains("name") ? string_field(j, where, "name")
                                             : fallback_name;
        auto dom = monoid_ref(field(j, where, "domain"), where + "/domain", "");
        auto cod
            = monoid_ref(field(j, where, "codomain"), where + "/codomain", "");
        auto m = map_values(
            field(j, where, "values"), where + "/values", name, dom, cod);
        if (w_.map(name) != nullptr) {
          fail(where, "map \"" + name + "\" defined twice");
        }
        w_.maps.push_back({name, std::move(m)});
      }

      void add_action(json const& j, std::string const& where,
                      std::string const& fallback_name) {
        NamedAction a;
        a.name = j.contains("name") ? string_field(j, where, "name")
                                    : fallback_name;
        a.action.X = monoid_ref(field(j, where, "X"), where + "/X", "X");
        a.action.B = monoid_ref(field(j, where, "B"), where + "/B", "B");
        a.action.phi = int_table(field(j, where, "phi"), where + "/phi");
        a.action.rho = int_table(field(j, where, "rho"), where + "/rho");
        a.action.gamma = int_table(field(j, where, "gamma"), where + "/gamma");
        for (auto const& old : w_.actions) {
          if (old.name == a.name) {
            fail(where, "pseudo-action \"" + a.name + "\" defined twice");
          }
        }
        w_.actions.push_back(std::move(a));
      }

      PointedMap bundle_map(json const& j, std::string const& where,
                            std::string const& bundle, char const* key,
                            FiniteMonoid const& dom, FiniteMonoid const& cod) {
        auto const& v  = field(j, where, key);
        auto const  at = where + "/" + key;
        auto const  object = bundle + "." + key;
        if (v.is_string()) {
          auto const* m = w_.map(v.get<std::string>());
          if (m == nullptr) {
            throw DanglingReference(path_, v.get<std::string>());
          }
          if (!m->map.domain().same_structure(dom)
              || !m->map.codomain().same_structure(cod)) {
            fail(at, "map \"" + m->name + "\" has the wrong type");
          }
          return map_values(json(m->map.values()), at, object, dom, cod);
        }
        if (v.is_array()) {
          return map_values(v, at, object, dom, cod);
        }
        if (v.is_object()) {
          auto check = [&](char const* side, FiniteMonoid const& expected) {
            if (v.contains(side)) {
              auto const& name = v[side];
              if (!name.is_string() || name.get<std::string>() != expected.name()) {
                fail(at + "/" + side, std::string("expected \"")
                                          + expected.name() + "\"");
              }
            }
          };
          check("domain", dom);
          check("codomain", cod);
          return map_values(field(v, at, "values"), at + "/values", object,
                            dom, cod);
        }
        fail(at, "expected a values array, an object or a map name");
      }

      void add_bundle(json const& j, std::string const& where,
                      std::string const& fallback_name) {
        auto const name = j.contains("name") ? string_field(j, where, "name")
                                             : fallback_name;
        auto X = monoid_ref(field(j, where, "X"), where + "/X", "X");
        auto A = monoid_ref(field(j, where, "A"), where + "/A", "A");
        auto B = monoid_ref(field(j, where, "B"), where + "/B", "B");
        auto p = bundle_map(j, where, name, "p", A, B);
        auto k = bundle_map(j, where, name, "k", X, A);
        auto q = bundle_map(j, where, name, "q", A, X);
        auto s = bundle_map(j, where, name, "s", B, A);
        Bundle b{name, X, A, B, std::move(p), std::move(k), std::move(q),
                 std::move(s)};
        for (auto const& old : w_.bundles) {
          if (old.name == b.name) {
            fail(where, "semi-biproduct \"" + b.name + "\" defined twice");
          }
        }
        w_.bundles.push_back(std::move(b));
      }

      void collection(json const& j) {
        static char const* const keys[]
            = {"monoids", "maps", "pseudo_actions", "semibiproducts"};
        bool any = false;
        for (auto const* key : keys) {
          if (j.contains(key)) {
            any = true;
            if (!j[key].is_array()) {
              fail(std::string("/") + key, "expected an array");
            }
          }
        }
        if (!any) {
          fail("", "unrecognised document kind");
        }
        auto each = [&](char const* key, auto&& add) {
          if (!j.contains(key)) {
            return;
          }
          auto const& arr = j[key];
          for (std::size_t i = 0; i < arr.size(); ++i) {
            auto const at = std::string("/") + key + "/" + std::to_string(i);
            if (!arr[i].is_object()) {
              fail(at, "expected an object");
            }
            add(arr[i], at, std::string(key) + std::to_string(i));
          }
        };
        each("monoids", [&](json const& v, std::string const& at,
                            std::string const& fb) {
          add_monoid(monoid(v, at, fb), at);
        });
        each("maps", [&](json const& v, std::string const& at,
                         std::string const& fb) { add_map(v, at, fb); });
        each("pseudo_actions", [&](json const& v, std::string const& at,
                                   std::string const& fb) {
          add_action(v, at, fb);
        });
        each("semibiproducts", [&](json const& v, std::string const& at,
                                   std::string const& fb) {
          add_bundle(v, at, fb);
        });
      }

      Workspace&  w_;
      std::string path_;
    };

  }  // namespace detail

  //! Parses one document given as text. `path` is used in error messages and
  //! its stem names unnamed objects.
  inline void parse_into(Workspace& w, std::string const& text,
                         std::string const& path) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::parse_error const& e) {
      // Recompute line and column from the byte offset.
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      throw ParseError(path,
                       "line " + std::to_string(line) + ", column "
                           + std::to_string(col),
                       "invalid JSON");
    }
    detail::Loader(w).document(
        j, path, std::filesystem::path(path).stem().string());
  }

  inline Workspace parse_text(std::string const& text,
                              std::string const& path = "<input>") {
    Workspace w;
    parse_into(w, text, path);
    return w;
  }

  //! Loads the files in order into one workspace.
  inline Workspace parse_inputs(std::vector<std::string> const& paths) {
    Workspace w;
    for (auto const& p : paths) {
      std::ifstream in(p, std::ios::binary);
      if (!in) {
        throw ParseError(p, "/", "cannot open file");
      }
      std::ostringstream text;
      text << in.rdbuf();
      parse_into(w, text.str(), p);
    }
    return w;
  }

  //! Violation as {"kind", "which", "witness", "message"?}.
  inline json to_json(Violation const& v) {
    json j;
    j["kind"]    = v.kind;
    j["which"]   = v.which;
    j["witness"] = v.witness;
    if (!v.message.empty()) {
      j["message"] = v.message;
    }
    return j;
  }

}  // namespace sbp::io

#endif  // SBP_IO_HPP_

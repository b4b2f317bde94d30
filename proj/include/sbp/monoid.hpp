// Finite monoids given by their Cayley tables.

#ifndef SBP_MONOID_HPP_
#define SBP_MONOID_HPP_

#include <algorithm>    // for max
#include <cstddef>      // for size_t
#include <cstdint>      // for int64_t
#include <memory>       // for shared_ptr, make_shared
#include <optional>     // for optional
#include <ostream>      // for ostream
#include <set>          // for set
#include <span>         // for span
#include <string>       // for string, to_string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "core.hpp"  // for index_t, Expected, Violation

namespace sbp {

  //! Display hint only: whether the operation is rendered as `+` or `·`.
  enum class Notation { additive, multiplicative };

  //! Unvalidated monoid data as read from a file or typed by hand.
  //!
  //! Entries are signed so that out-of-range input can be reported instead
  //! of silently wrapping. An empty `elements` list means "label by index".
  struct RawMonoid {
    std::string                            name;
    std::vector<std::string>               elements;
    std::int64_t                           identity = 0;
    std::vector<std::vector<std::int64_t>> table;
    Notation                               notation = Notation::additive;
  };

  class FiniteMonoid;

  inline Expected<FiniteMonoid> validate_monoid(RawMonoid const& raw);
  inline Expected<FiniteMonoid> validate_monoid(std::string              name,
                                         std::vector<std::string> labels,
                                         index_t                  identity,
                                         std::vector<index_t>     table,
                                         Notation notation = Notation::additive);

  //! A validated finite monoid.
  //!
  //! Instances are immutable and cheap to copy: copies share one table.
  //! `table()[i * size() + j]` is the index of `i + j` (or `i·j`).
  class FiniteMonoid {
   public:
    //! The trivial monoid.
    FiniteMonoid()
        : d_(std::make_shared<Data const>(
            Data{"1", {"0"}, 0, {0}, Notation::additive})) {}

    std::string const& name() const noexcept {
      return d_->name;
    }

    std::size_t size() const noexcept {
      return d_->labels.size();
    }

    index_t identity() const noexcept {
      return d_->identity;
    }

    index_t op(index_t i, index_t j) const noexcept {
      return d_->table[i * size() + j];
    }

    // Total monoids always answer; the partial structures in bounded.hpp
    // share this interface.
    std::optional<index_t> try_op(index_t i, index_t j) const noexcept {
      return op(i, j);
    }

    std::span<index_t const> table() const noexcept {
      return d_->table;
    }

    std::vector<std::string> const& elements() const noexcept {
      return d_->labels;
    }

    std::string const& label(index_t i) const {
      return d_->labels.at(i);
    }

    std::optional<index_t> find(std::string_view lbl) const {
      for (index_t i = 0; i < size(); ++i) {
        if (d_->labels[i] == lbl) {
          return i;
        }
      }
      return std::nullopt;
    }

    Notation notation() const noexcept {
      return d_->notation;
    }

    //! Same identity index and operation table; names and labels ignored.
    bool same_structure(FiniteMonoid const& that) const noexcept {
      return d_ == that.d_
             || (d_->identity == that.d_->identity
                 && d_->table == that.d_->table);
    }

    bool is_commutative() const noexcept {
      for (index_t i = 0; i < size(); ++i) {
        for (index_t j = i + 1; j < size(); ++j) {
          if (op(i, j) != op(j, i)) {
            return false;
          }
        }
      }
      return true;
    }

    //! Every element has a two-sided inverse.
    bool is_group() const noexcept {
      for (index_t i = 0; i < size(); ++i) {
        bool found = false;
        for (index_t j = 0; j < size() && !found; ++j) {
          found = op(i, j) == identity() && op(j, i) == identity();
        }
        if (!found) {
          return false;
        }
      }
      return true;
    }

    //! y + x = z + x implies y = z.
    bool is_right_cancellative() const noexcept {
      for (index_t x = 0; x < size(); ++x) {
        for (index_t y = 0; y < size(); ++y) {
          for (index_t z = y + 1; z < size(); ++z) {
            if (op(y, x) == op(z, x)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    FiniteMonoid renamed(std::string name) const {
      FiniteMonoid m(*this);
      Data         d = *d_;
      d.name         = std::move(name);
      m.d_           = std::make_shared<Data const>(std::move(d));
      return m;
    }

    FiniteMonoid with_notation(Notation n) const {
      FiniteMonoid m(*this);
      Data         d = *d_;
      d.notation     = n;
      m.d_           = std::make_shared<Data const>(std::move(d));
      return m;
    }

    friend bool operator==(FiniteMonoid const& a, FiniteMonoid const& b) {
      return a.d_ == b.d_
             || (a.d_->name == b.d_->name && a.d_->labels == b.d_->labels
                 && a.d_->identity == b.d_->identity
                 && a.d_->table == b.d_->table
                 && a.d_->notation == b.d_->notation);
    }

   private:
    struct Data {
      std::string              name;
      std::vector<std::string> labels;
      index_t                  identity;
      std::vector<index_t>     table;
      Notation                 notation;
    };

    explicit FiniteMonoid(Data d)
        : d_(std::make_shared<Data const>(std::move(d))) {}

    friend Expected<FiniteMonoid> validate_monoid(std::string,
                                                  std::vector<std::string>,
                                                  index_t,
                                                  std::vector<index_t>,
                                                  Notation);

    std::shared_ptr<Data const> d_;
  };

  namespace detail {
    inline std::vector<std::string> index_labels(std::size_t n) {
      std::vector<std::string> out;
      out.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
      }
      return out;
    }

    inline Violation malformed(std::string msg) {
      return Violation{"MalformedTable", "", {}, std::move(msg)};
    }
  }  // namespace detail

  //! Checks, in order: shape, index range, unit laws (scanning i upwards),
  //! associativity (scanning (i, j, k) lexicographically).
  inline Expected<FiniteMonoid> validate_monoid(std::string              name,
                                                std::vector<std::string> labels,
                                                index_t                  identity,
                                                std::vector<index_t>     table,
                                                Notation notation) {
    std::size_t const n = labels.empty() ? 0 : labels.size();
    if (n == 0) {
      return detail::malformed("a monoid needs at least one element");
    }
    if (table.size() != n * n) {
      return detail::malformed("table is not " + std::to_string(n) + "x"
                               + std::to_string(n));
    }
    if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
      return detail::malformed("element labels are not distinct");
    }
    if (identity >= n) {
      return Violation{"IndexOutOfRange", "identity", {identity}, ""};
    }
    for (std::size_t pos = 0; pos < table.size(); ++pos) {
      if (table[pos] >= n) {
        return Violation{"IndexOutOfRange",
                         "table",
                         {static_cast<index_t>(pos / n),
                          static_cast<index_t>(pos % n)},
                         "entry " + std::to_string(table[pos])};
      }
    }
    auto at = [&](index_t i, index_t j) { return table[i * n + j]; };
    for (index_t i = 0; i < n; ++i) {
      if (at(identity, i) != i || at(i, identity) != i) {
        return Violation{"IdentityLawFails", "", {i}, ""};
      }
    }
    for (index_t i = 0; i < n; ++i) {
      for (index_t j = 0; j < n; ++j) {
        index_t const ij = at(i, j);
        for (index_t k = 0; k < n; ++k) {
          if (at(ij, k) != at(i, at(j, k))) {
            return Violation{"NonAssociative", "", {i, j, k}, ""};
          }
        }
      }
    }
    return FiniteMonoid(FiniteMonoid::Data{std::move(name),
                                           std::move(labels),
                                           identity,
                                           std::move(table),
                                           notation});
  }

  inline Expected<FiniteMonoid> validate_monoid(RawMonoid const& raw) {
    std::size_t const n = raw.table.size();
    if (n == 0) {
      return detail::malformed("a monoid needs at least one element");
    }
    for (auto const& row : raw.table) {
      if (row.size() != n) {
        return detail::malformed("table is not square");
      }
    }
    if (!raw.elements.empty() && raw.elements.size() != n) {
      return detail::malformed("element list has " + std::to_string(
                                   raw.elements.size())
                               + " labels for a table of size "
                               + std::to_string(n));
    }
    if (raw.identity < 0 || static_cast<std::size_t>(raw.identity) >= n) {
      return Violation{"IndexOutOfRange",
                       "identity",
                       {},
                       "identity " + std::to_string(raw.identity)};
    }
    std::vector<index_t> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t v = raw.table[i][j];
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          return Violation{
              "IndexOutOfRange",
              "table",
              {static_cast<index_t>(i), static_cast<index_t>(j)},
              "entry " + std::to_string(v)};
        }
        flat.push_back(static_cast<index_t>(v));
      }
    }
    return validate_monoid(
        raw.name,
        raw.elements.empty() ? detail::index_labels(n) : raw.elements,
        static_cast<index_t>(raw.identity),
        std::move(flat),
        raw.notation);
  }

  //! Like `validate_monoid` but throws on invalid input. For tables that are
  //! known good (built-in catalogue, test fixtures).
  inline FiniteMonoid make_monoid(std::string                            name,
                                  std::vector<std::string>               labels,
                                  std::vector<std::vector<std::int64_t>> table,
                                  std::int64_t identity = 0,
                                  Notation notation = Notation::additive) {
    auto m = validate_monoid(RawMonoid{
        std::move(name), std::move(labels), identity, std::move(table),
        notation});
    if (!m) {
      throw Error("make_monoid: " + m.error().to_string());
    }
    return std::move(m).value();
  }

  //! Z/n under addition.
  inline FiniteMonoid cyclic_group(std::size_t n) {
    std::vector<index_t> t(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i * n + j] = static_cast<index_t>((i + j) % n);
      }
    }
    return validate_monoid(
               "Z" + std::to_string(n), detail::index_labels(n), 0, t)
        .value();
  }

  inline FiniteMonoid trivial_monoid(std::string name = "1") {
    return FiniteMonoid().renamed(std::move(name));
  }

  //! Cartesian product with componentwise operation. Element (x, b) sits at
  //! index `b * |X| + x`.
  inline FiniteMonoid direct_product(FiniteMonoid const& X,
                                     FiniteMonoid const& B) {
    std::size_t const        nx = X.size(), nb = B.size(), n = nx * nb;
    std::vector<index_t>     t(n * n);
    std::vector<std::string> labels(n);
    for (index_t b = 0; b < nb; ++b) {
      for (index_t x = 0; x < nx; ++x) {
        labels[b * nx + x] = "(" + X.label(x) + "," + B.label(b) + ")";
        for (index_t b2 = 0; b2 < nb; ++b2) {
          for (index_t x2 = 0; x2 < nx; ++x2) {
            t[(b * nx + x) * n + b2 * nx + x2]
                = static_cast<index_t>(B.op(b, b2) * nx + X.op(x, x2));
          }
        }
      }
    }
    return validate_monoid(X.name() + "x" + B.name(),
                           std::move(labels),
                           static_cast<index_t>(B.identity() * nx
                                                + X.identity()),
                           std::move(t))
        .value();
  }

  //! Cayley table as text.
  inline std::ostream& operator<<(std::ostream& os, FiniteMonoid const& m) {
    std::string const sym = m.notation() == Notation::additive ? "+" : "·";
    std::size_t       w   = 1;
    for (auto const& l : m.elements()) {
      w = std::max(w, l.size());
    }
    auto pad = [&](std::string const& s) {
      return s.size() < w ? s + std::string(w - s.size(), ' ') : s;
    };
    os << pad(sym) << " |";
    for (index_t j = 0; j < m.size(); ++j) {
      os << " " << pad(m.label(j));
    }
    os << "\n" << std::string(w, '-') << "-+"
       << std::string((w + 1) * m.size(), '-') << "\n";
    for (index_t i = 0; i < m.size(); ++i) {
      os << pad(m.label(i)) << " |";
      for (index_t j = 0; j < m.size(); ++j) {
        os << " " << pad(m.label(m.op(i, j)));
      }
      os << "\n";
    }
    return os;
  }

}  // namespace sbp

#endif  // SBP_MONOID_HPP_

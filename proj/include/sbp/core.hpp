// Basic vocabulary shared by every part of the library: element indices,
// violation reports, a small expected-like result type, and the exception
// types used for usage errors (as opposed to mathematical failures).

#ifndef SBP_CORE_HPP_
#define SBP_CORE_HPP_

#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t, uint64_t
#include <limits>     // for numeric_limits
#include <optional>   // for optional
#include <sstream>    // for ostringstream
#include <stdexcept>  // for runtime_error, logic_error
#include <string>     // for string
#include <utility>    // for move
#include <variant>    // for variant, get, holds_alternative
#include <vector>     // for vector

namespace sbp {

  //! Position of an element inside a finite carrier.
  using index_t = std::uint32_t;

  //! Marker for an undefined entry of a partial table or an unassigned cell.
  inline constexpr index_t UNDEFINED = std::numeric_limits<index_t>::max();

  //! A mathematical check that did not hold.
  //!
  //! `kind` is the error family (for example `NonAssociative` or
  //! `ConditionFails`), `which` names the law or equation inside that family
  //! and `witness` holds the indices of the first failing tuple in
  //! lexicographic scan order.
  struct Violation {
    std::string          kind;
    std::string          which;
    std::vector<index_t> witness;
    std::string          message;

    std::string to_string() const {
      std::ostringstream os;
      os << kind;
      if (!which.empty()) {
        os << "(" << which << ")";
      }
      if (!witness.empty()) {
        os << " at (";
        for (std::size_t i = 0; i < witness.size(); ++i) {
          os << (i == 0 ? "" : ",") << witness[i];
        }
        os << ")";
      }
      if (!message.empty()) {
        os << ": " << message;
      }
      return os.str();
    }

    friend bool operator==(Violation const&, Violation const&) = default;
  };

  //! Either a validated value or the violation that prevented validation.
  template <typename T>
  class Expected {
   public:
    Expected(T value) : data_(std::move(value)) {}  // NOLINT
    Expected(Violation v) : data_(std::move(v)) {}  // NOLINT

    bool has_value() const noexcept {
      return std::holds_alternative<T>(data_);
    }

    explicit operator bool() const noexcept {
      return has_value();
    }

    T const& value() const& {
      if (!has_value()) {
        throw std::logic_error("Expected::value() on a violation: "
                               + error().to_string());
      }
      return std::get<T>(data_);
    }

    T&& value() && {
      if (!has_value()) {
        throw std::logic_error("Expected::value() on a violation: "
                               + error().to_string());
      }
      return std::get<T>(std::move(data_));
    }

    T const& operator*() const& {
      return value();
    }

    T const* operator->() const {
      return &value();
    }

    Violation const& error() const {
      return std::get<Violation>(data_);
    }

   private:
    std::variant<T, Violation> data_;
  };

  //! Outcome of a check that either holds or fails with a witness.
  struct Verdict {
    std::optional<Violation> violation;

    bool holds() const noexcept {
      return !violation.has_value();
    }

    explicit operator bool() const noexcept {
      return holds();
    }

    static Verdict pass() {
      return {};
    }

    static Verdict fail(Violation v) {
      return {std::move(v)};
    }
  };

  //! Base class of all usage errors thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Operands of a map operation live over incompatible monoids.
  class DomainMismatch : public Error {
   public:
    using Error::Error;
  };

  //! A search was refused because its worst case exceeds the configured
  //! budget.
  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::string what, std::uint64_t required,
                   std::uint64_t budget)
        : Error("budget exceeded in " + what + ": requires "
                + std::to_string(required) + ", budget "
                + std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    std::uint64_t required() const noexcept {
      return required_;
    }

    std::uint64_t budget() const noexcept {
      return budget_;
    }

   private:
    std::uint64_t required_;
    std::uint64_t budget_;
  };

  namespace detail {
    // Saturating multiplication, used for search-space size estimates.
    inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
      if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      return a * b;
    }

    inline std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) noexcept {
      std::uint64_t r = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        r = sat_mul(r, base);
      }
      return r;
    }
  }  // namespace detail

}  // namespace sbp

#endif  // SBP_CORE_HPP_

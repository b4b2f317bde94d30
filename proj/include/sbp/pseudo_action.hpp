// Pseudo-actions of a monoid B on a monoid X: a pre-action b·x, a correction
// system x^b and a factor system b×b', tied together by one coherence
// equation.
//
// X is written additively and B multiplicatively. Tables are stored flat:
//   act(b, x)        = phi[b * |X| + x]
//   correction(x, b) = rho[x * |B| + b]
//   factor(b, b')    = gamma[b * |B| + b']

#ifndef SBP_PSEUDO_ACTION_HPP_
#define SBP_PSEUDO_ACTION_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for int64_t, uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for move
#include <variant>   // for variant, get_if
#include <vector>    // for vector

#include "core.hpp"    // for index_t, Expected, Violation
#include "monoid.hpp"  // for FiniteMonoid

namespace sbp {

  class PseudoAction;

  namespace detail {
    inline PseudoAction unchecked_action(FiniteMonoid,
                                         FiniteMonoid,
                                         std::vector<index_t>,
                                         std::vector<index_t>,
                                         std::vector<index_t>);
  }  // namespace detail

  //! Unvalidated tables, indexed phi[b][x], rho[x][b], gamma[b][b'].
  struct RawPseudoAction {
    FiniteMonoid                           X;
    FiniteMonoid                           B;
    std::vector<std::vector<std::int64_t>> phi;
    std::vector<std::vector<std::int64_t>> rho;
    std::vector<std::vector<std::int64_t>> gamma;
  };

  //! A triple (pre-action, correction system, factor system) satisfying the
  //! unit laws and the coherence equation.
  class PseudoAction {
   public:
    FiniteMonoid const& X() const noexcept {
      return X_;
    }

    FiniteMonoid const& B() const noexcept {
      return B_;
    }

    //! b·x
    index_t act(index_t b, index_t x) const noexcept {
      return phi_[b * X_.size() + x];
    }

    //! x^b
    index_t correction(index_t x, index_t b) const noexcept {
      return rho_[x * B_.size() + b];
    }

    //! b×b'
    index_t factor(index_t b, index_t b2) const noexcept {
      return gamma_[b * B_.size() + b2];
    }

    //! (x + b·y + b×c)^{bc}: the X-component of (x, b) + (y, c).
    index_t product(index_t x, index_t y, index_t b, index_t c) const noexcept {
      return correction(X_.op(X_.op(x, act(b, y)), factor(b, c)), B_.op(b, c));
    }

    std::vector<index_t> const& phi() const noexcept {
      return phi_;
    }

    std::vector<index_t> const& rho() const noexcept {
      return rho_;
    }

    std::vector<index_t> const& gamma() const noexcept {
      return gamma_;
    }

    bool has_trivial_correction() const noexcept {
      for (index_t x = 0; x < X_.size(); ++x) {
        for (index_t b = 0; b < B_.size(); ++b) {
          if (correction(x, b) != x) {
            return false;
          }
        }
      }
      return true;
    }

    RawPseudoAction to_raw() const {
      auto nested = [](std::vector<index_t> const& flat, std::size_t rows,
                       std::size_t cols) {
        std::vector<std::vector<std::int64_t>> out(rows);
        for (std::size_t i = 0; i < rows; ++i) {
          out[i].assign(flat.begin() + i * cols, flat.begin() + (i + 1) * cols);
        }
        return out;
      };
      return RawPseudoAction{X_,
                             B_,
                             nested(phi_, B_.size(), X_.size()),
                             nested(rho_, X_.size(), B_.size()),
                             nested(gamma_, B_.size(), B_.size())};
    }

    //! Raw table equality over structurally equal X and B.
    friend bool operator==(PseudoAction const& a, PseudoAction const& b) {
      return a.phi_ == b.phi_ && a.rho_ == b.rho_ && a.gamma_ == b.gamma_
             && a.X_.same_structure(b.X_) && a.B_.same_structure(b.B_);
    }

    //! Lexicographic order on (phi, rho, gamma).
    friend bool operator<(PseudoAction const& a, PseudoAction const& b) {
      if (a.phi_ != b.phi_) {
        return a.phi_ < b.phi_;
      }
      if (a.rho_ != b.rho_) {
        return a.rho_ < b.rho_;
      }
      return a.gamma_ < b.gamma_;
    }

   private:
    PseudoAction(FiniteMonoid         X,
                 FiniteMonoid         B,
                 std::vector<index_t> phi,
                 std::vector<index_t> rho,
                 std::vector<index_t> gamma)
        : X_(std::move(X)),
          B_(std::move(B)),
          phi_(std::move(phi)),
          rho_(std::move(rho)),
          gamma_(std::move(gamma)) {}

    friend PseudoAction detail::unchecked_action(FiniteMonoid,
                                                 FiniteMonoid,
                                                 std::vector<index_t>,
                                                 std::vector<index_t>,
                                                 std::vector<index_t>);

    FiniteMonoid         X_;
    FiniteMonoid         B_;
    std::vector<index_t> phi_;
    std::vector<index_t> rho_;
    std::vector<index_t> gamma_;
  };

  namespace detail {
    inline PseudoAction unchecked_action(FiniteMonoid         X,
                                         FiniteMonoid         B,
                                         std::vector<index_t> phi,
                                         std::vector<index_t> rho,
                                         std::vector<index_t> gamma) {
      return PseudoAction(std::move(X),
                          std::move(B),
                          std::move(phi),
                          std::move(rho),
                          std::move(gamma));
    }

    // Memo of product(x, y, b, c) over all arguments, laid out as
    // ((b * |B| + c) * |X| + x) * |X| + y.
    class ProductMemo {
     public:
      explicit ProductMemo(PseudoAction const& pa)
          : nx_(pa.X().size()), nb_(pa.B().size()), B_(pa.B()) {
        memo_.resize(nx_ * nx_ * nb_ * nb_);
        for (index_t b = 0; b < nb_; ++b) {
          for (index_t c = 0; c < nb_; ++c) {
            for (index_t x = 0; x < nx_; ++x) {
              for (index_t y = 0; y < nx_; ++y) {
                memo_[at(x, y, b, c)] = pa.product(x, y, b, c);
              }
            }
          }
        }
      }

      index_t operator()(index_t x, index_t y, index_t b, index_t c) const {
        return memo_[at(x, y, b, c)];
      }

      //! First (x, x', x'', b, b', b'') in lexicographic order where the
      //! coherence equation fails.
      std::optional<std::vector<index_t>> first_failure() const {
        for (index_t x = 0; x < nx_; ++x) {
          for (index_t x1 = 0; x1 < nx_; ++x1) {
            for (index_t x2 = 0; x2 < nx_; ++x2) {
              for (index_t b = 0; b < nb_; ++b) {
                for (index_t b1 = 0; b1 < nb_; ++b1) {
                  index_t const bb1 = B_.op(b, b1);
                  index_t const l   = (*this)(x, x1, b, b1);
                  for (index_t b2 = 0; b2 < nb_; ++b2) {
                    index_t const lhs
                        = (*this)(x, (*this)(x1, x2, b1, b2), b, B_.op(b1, b2));
                    index_t const rhs = (*this)(l, x2, bb1, b2);
                    if (lhs != rhs) {
                      return std::vector<index_t>{x, x1, x2, b, b1, b2};
                    }
                  }
                }
              }
            }
          }
        }
        return std::nullopt;
      }

     private:
      std::size_t at(index_t x, index_t y, index_t b, index_t c) const {
        return ((static_cast<std::size_t>(b) * nb_ + c) * nx_ + x) * nx_ + y;
      }

      std::size_t          nx_;
      std::size_t          nb_;
      FiniteMonoid         B_;
      std::vector<index_t> memo_;
    };

    // Unit-law check shared by validation and by the search; returns the
    // first failing law in the fixed order pre-action, correction, factor.
    inline std::optional<Violation> unit_law_failure(PseudoAction const& pa) {
      auto const&   X   = pa.X();
      auto const&   B   = pa.B();
      index_t const zero = X.identity(), one = B.identity();
      for (index_t x = 0; x < X.size(); ++x) {
        if (pa.act(one, x) != x) {
          return Violation{"UnitLawFails", "1·x=x", {x}, ""};
        }
      }
      for (index_t b = 0; b < B.size(); ++b) {
        if (pa.act(b, zero) != zero) {
          return Violation{"UnitLawFails", "b·0=0", {b}, ""};
        }
      }
      for (index_t x = 0; x < X.size(); ++x) {
        if (pa.correction(x, one) != x) {
          return Violation{"UnitLawFails", "x^1=x", {x}, ""};
        }
      }
      for (index_t b = 0; b < B.size(); ++b) {
        if (pa.correction(zero, b) != zero) {
          return Violation{"UnitLawFails", "0^b=0", {b}, ""};
        }
      }
      for (index_t b = 0; b < B.size(); ++b) {
        if (pa.factor(one, b) != zero) {
          return Violation{"UnitLawFails", "1×b=0", {b}, ""};
        }
        if (pa.factor(b, one) != zero) {
          return Violation{"UnitLawFails", "b×1=0", {b}, ""};
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  //! Validates index ranges, the unit laws, and the coherence equation
  //!
  //!   (x + b·((x' + b'·x'' + b'×b'')^{b'b''}) + b×b'b'')^{bb'b''}
  //!     = ((x + b·x' + b×b')^{bb'} + bb'·x'' + bb'×b'')^{bb'b''}
  //!
  //! over all |X|³·|B|³ tuples. Failures name the first tuple
  //! (x, x', x'', b, b', b'') in lexicographic order.
  inline Expected<PseudoAction> validate_pseudo_action(
      RawPseudoAction const& raw) {
    std::size_t const nx = raw.X.size(), nb = raw.B.size();
    auto flatten = [](std::vector<std::vector<std::int64_t>> const& t,
                      std::size_t rows, std::size_t cols, std::size_t range,
                      char const* which)
        -> std::variant<std::vector<index_t>, Violation> {
      if (t.size() != rows) {
        return Violation{"MalformedTable", which, {},
                         "expected " + std::to_string(rows) + " rows"};
      }
      std::vector<index_t> out;
      out.reserve(rows * cols);
      for (std::size_t i = 0; i < rows; ++i) {
        if (t[i].size() != cols) {
          return Violation{"MalformedTable", which, {static_cast<index_t>(i)},
                           "expected " + std::to_string(cols) + " columns"};
        }
        for (std::size_t j = 0; j < cols; ++j) {
          if (t[i][j] < 0 || static_cast<std::size_t>(t[i][j]) >= range) {
            return Violation{"IndexOutOfRange", which,
                             {static_cast<index_t>(i), static_cast<index_t>(j)},
                             "entry " + std::to_string(t[i][j])};
          }
          out.push_back(static_cast<index_t>(t[i][j]));
        }
      }
      return out;
    };
    auto phi   = flatten(raw.phi, nb, nx, nx, "phi");
    auto rho   = flatten(raw.rho, nx, nb, nx, "rho");
    auto gamma = flatten(raw.gamma, nb, nb, nx, "gamma");
    for (auto* v : {&phi, &rho, &gamma}) {
      if (auto* err = std::get_if<Violation>(v)) {
        return *err;
      }
    }
    auto pa = detail::unchecked_action(raw.X,
                                       raw.B,
                                       std::get<0>(std::move(phi)),
                                       std::get<0>(std::move(rho)),
                                       std::get<0>(std::move(gamma)));
    if (auto v = detail::unit_law_failure(pa)) {
      return *v;
    }
    if (auto w = detail::ProductMemo(pa).first_failure()) {
      return Violation{"FactorEquationFails", "", std::move(*w), ""};
    }
    return pa;
  }

  //! The action with b·x = x, x^b = x, b×b' = 0.
  inline PseudoAction trivial_pseudo_action(FiniteMonoid const& X,
                                            FiniteMonoid const& B) {
    std::size_t const    nx = X.size(), nb = B.size();
    std::vector<index_t> phi(nb * nx), rho(nx * nb),
        gamma(nb * nb, X.identity());
    for (index_t b = 0; b < nb; ++b) {
      for (index_t x = 0; x < nx; ++x) {
        phi[b * nx + x] = x;
        rho[x * nb + b] = x;
      }
    }
    return detail::unchecked_action(X, B, phi, rho, gamma);
  }

  //! Per-identity outcome of `check_derived_identities`.
  struct IdentityTally {
    std::string                         name;
    std::uint64_t                       checked  = 0;
    std::uint64_t                       failures = 0;
    std::optional<std::vector<index_t>> first_failure;
  };

  struct DerivedIdentityReport {
    std::vector<IdentityTally> identities;

    bool all_hold() const noexcept {
      for (auto const& t : identities) {
        if (t.failures != 0) {
          return false;
        }
      }
      return true;
    }
  };

  //! Evaluates the special cases of the coherence equation:
  //!
  //!   correction1      (b·(x+y))^b = (b·x + b·y)^b
  //!   correction2      (x+y)^b = (x + y^b)^b
  //!   correction3      (x^b + b·y)^b = (x + (b·y)^b)^b
  //!   factor-system    (b·((b'×b'')^{b'b''}) + b×b'b'')^{bb'b''}
  //!                      = ((b×b')^{bb'} + bb'×b'')^{bb'b''}
  //!   correction-factor (x^b + b×b')^{bb'} = (x + b×b')^{bb'}
  //!   conjugation      (b·((b'·x)^{b'}) + b×b')^{bb'}
  //!                      = ((b×b')^{bb'} + bb'·x)^{bb'}
  //!   idempotence      (x^b)^b = x^b
  //!
  //! Witness tuples list the X arguments first, then the B arguments.
  inline DerivedIdentityReport check_derived_identities(PseudoAction const& pa) {
    auto const& X = pa.X();
    auto const& B = pa.B();
    auto add = [&](index_t a, index_t b) { return X.op(a, b); };
    auto mul = [&](index_t a, index_t b) { return B.op(a, b); };
    auto dot = [&](index_t b, index_t x) { return pa.act(b, x); };
    auto up  = [&](index_t x, index_t b) { return pa.correction(x, b); };
    auto cr  = [&](index_t b, index_t c) { return pa.factor(b, c); };

    DerivedIdentityReport report;
    auto tally = [&](std::string name, auto&& body) {
      IdentityTally t;
      t.name = std::move(name);
      body([&](bool ok, std::vector<index_t> const& w) {
        ++t.checked;
        if (!ok) {
          if (t.failures++ == 0) {
            t.first_failure = w;
          }
        }
      });
      report.identities.push_back(std::move(t));
    };
    index_t const nx = X.size(), nb = B.size();

    tally("correction1", [&](auto&& rec) {
      for (index_t x = 0; x < nx; ++x)
        for (index_t y = 0; y < nx; ++y)
          for (index_t b = 0; b < nb; ++b)
            rec(up(dot(b, add(x, y)), b) == up(add(dot(b, x), dot(b, y)), b),
                {x, y, b});
    });
    tally("correction2", [&](auto&& rec) {
      for (index_t x = 0; x < nx; ++x)
        for (index_t y = 0; y < nx; ++y)
          for (index_t b = 0; b < nb; ++b)
            rec(up(add(x, y), b) == up(add(x, up(y, b)), b), {x, y, b});
    });
    tally("correction3", [&](auto&& rec) {
      for (index_t x = 0; x < nx; ++x)
        for (index_t y = 0; y < nx; ++y)
          for (index_t b = 0; b < nb; ++b)
            rec(up(add(up(x, b), dot(b, y)), b)
                    == up(add(x, up(dot(b, y), b)), b),
                {x, y, b});
    });
    tally("factor-system", [&](auto&& rec) {
      for (index_t b = 0; b < nb; ++b)
        for (index_t b1 = 0; b1 < nb; ++b1)
          for (index_t b2 = 0; b2 < nb; ++b2) {
            index_t const bb1 = mul(b, b1), b1b2 = mul(b1, b2),
                          all = mul(bb1, b2);
            rec(up(add(dot(b, up(cr(b1, b2), b1b2)), cr(b, b1b2)), all)
                    == up(add(up(cr(b, b1), bb1), cr(bb1, b2)), all),
                {b, b1, b2});
          }
    });
    tally("correction-factor", [&](auto&& rec) {
      for (index_t x = 0; x < nx; ++x)
        for (index_t b = 0; b < nb; ++b)
          for (index_t b1 = 0; b1 < nb; ++b1) {
            index_t const bb1 = mul(b, b1);
            rec(up(add(up(x, b), cr(b, b1)), bb1) == up(add(x, cr(b, b1)), bb1),
                {x, b, b1});
          }
    });
    tally("conjugation", [&](auto&& rec) {
      for (index_t x = 0; x < nx; ++x)
        for (index_t b = 0; b < nb; ++b)
          for (index_t b1 = 0; b1 < nb; ++b1) {
            index_t const bb1 = mul(b, b1);
            rec(up(add(dot(b, up(dot(b1, x), b1)), cr(b, b1)), bb1)
                    == up(add(up(cr(b, b1), bb1), dot(bb1, x)), bb1),
                {x, b, b1});
          }
    });
    tally("idempotence", [&](auto&& rec) {
      for (index_t x = 0; x < nx; ++x)
        for (index_t b = 0; b < nb; ++b)
          rec(up(up(x, b), b) == up(x, b), {x, b});
    });
    return report;
  }

}  // namespace sbp

#endif  // SBP_PSEUDO_ACTION_HPP_

// Deterministic fork/join helper. Work items are indexed; results are
// returned in index order no matter how many workers ran them.

#ifndef SBP_PARALLEL_HPP_
#define SBP_PARALLEL_HPP_

#include <algorithm>  // for min
#include <atomic>     // for atomic
#include <cstddef>    // for size_t
#include <cstdlib>    // for getenv, strtoul
#include <exception>  // for exception_ptr, rethrow_exception
#include <optional>   // for optional
#include <thread>     // for thread
#include <type_traits>  // for invoke_result_t
#include <vector>     // for vector

namespace sbp {

  //! Number of workers to use: `requested` if non-zero, otherwise the value
  //! of the environment variable `SBP_JOBS`, otherwise 1.
  inline unsigned resolve_jobs(unsigned requested = 0) {
    if (requested != 0) {
      return requested;
    }
    if (char const* env = std::getenv("SBP_JOBS")) {
      unsigned long v = std::strtoul(env, nullptr, 10);
      if (v > 0 && v < 1024) {
        return static_cast<unsigned>(v);
      }
    }
    return 1;
  }

  //! Evaluates `f(i)` for `i` in `[0, n)` on up to `jobs` threads.
  //!
  //! If any call throws, the exception from the smallest failing index is
  //! rethrown after all workers have joined.
  template <typename F>
  auto parallel_map(std::size_t n, unsigned jobs, F&& f)
      -> std::vector<std::invoke_result_t<F&, std::size_t>> {
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<std::optional<R>>      slots(n);
    std::vector<std::exception_ptr>    errors(n);
    std::atomic<std::size_t>           next{0};

    auto worker = [&]() {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          slots[i].emplace(f(i));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };

    unsigned const nthreads
        = static_cast<unsigned>(std::min<std::size_t>(jobs == 0 ? 1 : jobs, n));
    if (nthreads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(nthreads);
      for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back(worker);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    std::vector<R> out;
    out.reserve(n);
    for (auto& s : slots) {
      out.push_back(std::move(*s));
    }
    return out;
  }

}  // namespace sbp

#endif  // SBP_PARALLEL_HPP_

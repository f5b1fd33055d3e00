#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace heckesign::util {

/// Evaluates f(0), ..., f(n-1) on up to `threads` workers and returns the
/// results in index order. Work units are claimed from a shared counter;
/// the output does not depend on which worker ran which unit. If any unit
/// throws, the exception of the lowest failing index is rethrown.
template <class F>
auto parallel_map(std::size_t n, unsigned threads, F&& f)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

inline unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace heckesign::util

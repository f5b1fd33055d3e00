#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace heckesign::util {

/// Depth-first enumeration of squarefree n <= limit built from `primes`
/// (sorted ascending), with a multiplicative weight. The visitor receives
/// (n, weight(n)) for every such n, starting with (1, 1). Branches whose
/// accumulated weight is exactly zero are pruned when `skip_zero` is set.
/// Returns the number of visited integers.
template <class Weight, class Visit>
std::uint64_t enumerate_squarefree(std::span<const std::uint64_t> primes, std::uint64_t limit,
                                   Weight&& prime_weight, Visit&& visit, bool skip_zero = false) {
  struct Frame {
    std::uint64_t n;
    double weight;
    std::size_t next;
  };
  std::uint64_t visited = 0;
  if (limit < 1) return visited;
  std::vector<Frame> stack{{1, 1.0, 0}};
  while (!stack.empty()) {
    const Frame top = stack.back();
    stack.pop_back();
    visit(top.n, top.weight);
    ++visited;
    const std::uint64_t room = limit / top.n;
    for (std::size_t j = top.next; j < primes.size(); ++j) {
      const std::uint64_t p = primes[j];
      if (p > room) break;
      const double w = top.weight * prime_weight(p);
      if (skip_zero && w == 0.0) continue;
      stack.push_back({top.n * p, w, j + 1});
    }
  }
  return visited;
}

}  // namespace heckesign::util

#pragma once

#include <cstddef>
#include <vector>

#include "sortcheck/orders.hpp"
#include "sortcheck/ualg.hpp"

// Shared enumeration helpers for the exhaustive test sweeps.
namespace testsupport {

// All terms with leaves drawn from gens and depth <= max_depth, where a
// leaf has depth 0 and a node one more than its deepest child. Built
// per exact depth so every term appears exactly once.
template <typename A>
std::vector<ualg::Term<A>> terms_over(const std::vector<A>& gens,
                                      const ualg::Signature& sig,
                                      std::size_t max_depth) {
  using T = ualg::Term<A>;
  std::vector<T> universe;  // depth <= d so far
  std::vector<T> exact;     // depth == d
  for (const A& g : gens) exact.push_back(T::leaf(g));
  universe = exact;

  for (std::size_t d = 1; d <= max_depth; ++d) {
    const std::size_t prev_size = universe.size();
    const std::size_t exact_begin = prev_size - exact.size();
    std::vector<T> next_exact;
    for (std::size_t op = 0; op < sig.op_count(); ++op) {
      const std::size_t arity = sig.arity(op);
      if (arity == 0) {
        if (d == 1) next_exact.push_back(T::node(op, {}));
        continue;
      }
      std::vector<int> idx(arity, 0);
      do {
        bool touches_deepest = false;
        for (int i : idx) {
          if (static_cast<std::size_t>(i) >= exact_begin) touches_deepest = true;
        }
        if (!touches_deepest) continue;  // already built at a smaller depth
        std::vector<T> children;
        children.reserve(arity);
        for (int i : idx) children.push_back(universe[static_cast<std::size_t>(i)]);
        next_exact.push_back(T::node(op, std::move(children)));
      } while (ualg::next_tuple(idx, prev_size));
    }
    universe.insert(universe.end(), next_exact.begin(), next_exact.end());
    exact = std::move(next_exact);
  }
  return universe;
}

inline std::vector<ualg::Term<int>> int_terms(std::size_t gen_count,
                                              const ualg::Signature& sig,
                                              std::size_t max_depth) {
  std::vector<int> gens;
  for (std::size_t g = 0; g < gen_count; ++g) gens.push_back(static_cast<int>(g));
  return terms_over(gens, sig, max_depth);
}

// All functions 0..domain-1 -> 0..codomain-1 as tables, lexicographic.
inline std::vector<std::vector<int>> all_functions(std::size_t domain,
                                                   std::size_t codomain) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(domain, 0);
  if (codomain == 0) return out;
  do {
    out.push_back(f);
  } while (ualg::next_tuple(f, codomain));
  return out;
}

// Every relation table on 0..n-1 passing check_total_order, found by
// brute force over all 2^(n*n) tables. Independent of the
// permutation-based enumerator it cross-checks.
inline std::vector<orders::TotalOrder> brute_total_orders(std::size_t n) {
  std::vector<orders::TotalOrder> out;
  const std::size_t cells = n * n;
  std::vector<int> bits(cells, 0);
  do {
    orders::TotalOrder t{n, std::vector<std::uint8_t>(cells, 0)};
    for (std::size_t i = 0; i < cells; ++i) t.leq[i] = static_cast<std::uint8_t>(bits[i]);
    if (!orders::check_total_order(t)) out.push_back(std::move(t));
  } while (ualg::next_tuple(bits, 2));
  return out;
}

inline std::vector<orders::StrictTotalOrder> brute_strict_orders(std::size_t n) {
  std::vector<orders::StrictTotalOrder> out;
  const std::size_t cells = n * n;
  std::vector<int> bits(cells, 0);
  do {
    orders::StrictTotalOrder s{n, std::vector<std::uint8_t>(cells, 0)};
    for (std::size_t i = 0; i < cells; ++i) s.lt[i] = static_cast<std::uint8_t>(bits[i]);
    if (!orders::check_strict_total_order(s)) out.push_back(std::move(s));
  } while (ualg::next_tuple(bits, 2));
  return out;
}

// Every total meet table on 0..n-1. Totality pins each cell to one of
// its two arguments, so candidates are one choice per unordered pair,
// filtered by the full checker.
inline std::vector<orders::MeetSemilattice> brute_total_meets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  }
  std::vector<orders::MeetSemilattice> out;
  std::vector<int> choice(pairs.size(), 0);
  do {
    orders::MeetSemilattice m{n, std::vector<int>(n * n, 0)};
    for (std::size_t x = 0; x < n; ++x) m.meet[x * n + x] = static_cast<int>(x);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [x, y] = pairs[p];
      const int v = choice[p] == 0 ? static_cast<int>(x) : static_cast<int>(y);
      m.meet[x * n + y] = v;
      m.meet[y * n + x] = v;
    }
    if (!orders::check_meet_semilattice(m, /*require_total=*/true)) {
      out.push_back(std::move(m));
    }
  } while (ualg::next_tuple(choice, 2));
  return out;
}

}  // namespace testsupport

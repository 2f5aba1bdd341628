#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sortcheck/ualg.hpp"

// The two free-monoid representations over an integer carrier: cons
// sequences (Word) and length-plus-lookup arrays (IndexedArray), each
// with concatenation and universal extension, plus the equivalence
// between them.
namespace freemon {

using Word = std::vector<int>;

/// A monoid structure on an arbitrary value type, used as the target of
/// universal extension.
template <typename T>
struct MonoidOn {
  T unit;
  std::function<T(const T&, const T&)> mult;
};

Word word_concat(const Word& xs, const Word& ys);

/// Universal extension for words: ext f [] = unit and
/// ext f (x::xs) = f(x) * ext f xs.
template <typename T, typename F>
T word_ext(const F& f, const MonoidOn<T>& m, const Word& xs) {
  T acc = m.unit;
  for (std::size_t i = xs.size(); i-- > 0;) {
    acc = m.mult(f(xs[i]), acc);
  }
  return acc;
}

/// A sequence presented as a length and a total lookup function on
/// 0..len-1. Elements are stored contiguously; the lookup view is the
/// contract. Equality is length equality plus pointwise lookup
/// equality, so all length-0 arrays are equal.
class IndexedArray {
 public:
  IndexedArray() = default;
  explicit IndexedArray(std::vector<int> elems) : elems_(std::move(elems)) {}

  static IndexedArray from_fn(std::size_t len,
                              const std::function<int(std::size_t)>& lookup);

  std::size_t len() const { return elems_.size(); }

  /// Throws std::out_of_range outside 0..len-1.
  int lookup(std::size_t k) const;

  bool operator==(const IndexedArray&) const = default;

 private:
  std::vector<int> elems_;
};

/// The generators map: a single-element array.
IndexedArray array_singleton(int a);

/// Concatenation via the lookup combinator: the result looks up
/// a.lookup(k) when k < a.len() and b.lookup(k - a.len()) otherwise.
IndexedArray array_concat(const IndexedArray& a, const IndexedArray& b);

/// Splits a nonempty array into (lookup(0), lookup composed with
/// successor). Throws std::invalid_argument on an empty array.
std::pair<int, IndexedArray> array_uncons(const IndexedArray& a);

/// Universal extension for arrays, by recursion on the length through
/// array_uncons: ext f (0, g) = unit and
/// ext f (n+1, g) = f(g(0)) * ext f (n, g after successor).
template <typename T, typename F>
T array_ext(const F& f, const MonoidOn<T>& m, const IndexedArray& a) {
  if (a.len() == 0) return m.unit;
  auto [head, tail] = array_uncons(a);
  return m.mult(f(head), array_ext(f, m, tail));
}

Word to_word(const IndexedArray& a);
IndexedArray to_array(const Word& xs);

/// A finite monoid candidate: a designated unit and a multiplication
/// table on 0..size-1. Laws are not baked in; certify_monoid checks
/// them exhaustively.
struct FiniteMonoid {
  std::size_t size = 0;
  int unit = 0;
  std::vector<int> table;  // table[x * size + y]

  int mult(int x, int y) const;
  MonoidOn<int> as_monoid() const;
  ualg::FiniteAlgebra as_algebra() const;

  bool operator==(const FiniteMonoid&) const = default;
};

/// Nullopt when the table satisfies the monoid equations, otherwise the
/// first violation.
std::optional<ualg::EqViolation> certify_monoid(const FiniteMonoid& m);

/// Every monoid structure on carriers of size 1..max_size, ordered by
/// size, then unit, then table.
std::vector<FiniteMonoid> enumerate_monoids(std::size_t max_size);

/// Addition mod k with unit 0.
FiniteMonoid mod_add_monoid(std::size_t k);

/// All words over 0..carrier_size-1 of length <= max_len, ordered by
/// length then lexicographically. Every exhaustive sweep in this
/// project scans words in this order, so first witnesses are stable.
std::vector<Word> enumerate_words(std::size_t carrier_size, std::size_t max_len);

MonoidOn<std::size_t> counting_monoid();
MonoidOn<bool> or_monoid();
MonoidOn<bool> and_monoid();
/// (none, pick-leftmost-defined): the target that makes ext the head
/// function on words.
MonoidOn<std::optional<int>> leftmost_monoid();

}  // namespace freemon

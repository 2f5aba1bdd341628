#include "sortcheck/freemon.hpp"

#include <stdexcept>

namespace freemon {

Word word_concat(const Word& xs, const Word& ys) {
  Word out = xs;
  out.insert(out.end(), ys.begin(), ys.end());
  return out;
}

IndexedArray IndexedArray::from_fn(std::size_t len,
                                   const std::function<int(std::size_t)>& lookup) {
  std::vector<int> elems;
  elems.reserve(len);
  for (std::size_t k = 0; k < len; ++k) elems.push_back(lookup(k));
  return IndexedArray(std::move(elems));
}

int IndexedArray::lookup(std::size_t k) const {
  if (k >= elems_.size()) {
    throw std::out_of_range("IndexedArray::lookup: index outside 0..len-1");
  }
  return elems_[k];
}

IndexedArray array_singleton(int a) { return IndexedArray({a}); }

IndexedArray array_concat(const IndexedArray& a, const IndexedArray& b) {
  const std::size_t n = a.len();
  return IndexedArray::from_fn(n + b.len(), [&](std::size_t k) {
    return k < n ? a.lookup(k) : b.lookup(k - n);
  });
}

std::pair<int, IndexedArray> array_uncons(const IndexedArray& a) {
  if (a.len() == 0) {
    throw std::invalid_argument("array_uncons: empty array");
  }
  IndexedArray tail =
      IndexedArray::from_fn(a.len() - 1, [&](std::size_t k) { return a.lookup(k + 1); });
  return {a.lookup(0), std::move(tail)};
}

Word to_word(const IndexedArray& a) {
  Word out;
  out.reserve(a.len());
  for (std::size_t k = 0; k < a.len(); ++k) out.push_back(a.lookup(k));
  return out;
}

IndexedArray to_array(const Word& xs) { return IndexedArray(xs); }

int FiniteMonoid::mult(int x, int y) const {
  return table.at(static_cast<std::size_t>(x) * size + static_cast<std::size_t>(y));
}

MonoidOn<int> FiniteMonoid::as_monoid() const {
  return {unit, [*this](const int& x, const int& y) { return mult(x, y); }};
}

ualg::FiniteAlgebra FiniteMonoid::as_algebra() const {
  return ualg::FiniteAlgebra::from_function(
      ualg::monoid_signature(), size,
      [this](std::size_t op, const std::vector<int>& args) {
        return op == ualg::op_unit ? unit : mult(args[0], args[1]);
      });
}

std::optional<ualg::EqViolation> certify_monoid(const FiniteMonoid& m) {
  return ualg::find_equation_violation(m.as_algebra(), ualg::monoid_equations());
}

std::vector<FiniteMonoid> enumerate_monoids(std::size_t max_size) {
  const ualg::EquationSystem laws = ualg::monoid_equations();
  std::vector<FiniteMonoid> out;
  for (std::size_t size = 1; size <= max_size; ++size) {
    for (int unit = 0; unit < static_cast<int>(size); ++unit) {
      std::vector<int> table(size * size, 0);
      do {
        FiniteMonoid m{size, unit, table};
        if (ualg::satisfies(m.as_algebra(), laws)) out.push_back(std::move(m));
      } while (ualg::next_tuple(table, size));
    }
  }
  return out;
}

FiniteMonoid mod_add_monoid(std::size_t k) {
  if (k == 0) throw std::invalid_argument("mod_add_monoid: k must be positive");
  FiniteMonoid m{k, 0, std::vector<int>(k * k, 0)};
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      m.table[x * k + y] = static_cast<int>((x + y) % k);
    }
  }
  return m;
}

std::vector<Word> enumerate_words(std::size_t carrier_size, std::size_t max_len) {
  std::vector<Word> out;
  out.emplace_back();  // the empty word
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (carrier_size == 0) break;
    Word w(len, 0);
    do {
      out.push_back(w);
    } while (ualg::next_tuple(w, carrier_size));
  }
  return out;
}

MonoidOn<std::size_t> counting_monoid() {
  return {0, [](const std::size_t& a, const std::size_t& b) { return a + b; }};
}

MonoidOn<bool> or_monoid() {
  return {false, [](const bool& a, const bool& b) { return a || b; }};
}

MonoidOn<bool> and_monoid() {
  return {true, [](const bool& a, const bool& b) { return a && b; }};
}

MonoidOn<std::optional<int>> leftmost_monoid() {
  return {std::nullopt,
          [](const std::optional<int>& a, const std::optional<int>& b) {
            return a.has_value() ? a : b;
          }};
}

}  // namespace freemon

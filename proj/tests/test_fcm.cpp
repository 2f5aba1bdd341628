#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "sortcheck/fcm.hpp"
#include "sortcheck/orders.hpp"
#include "support.hpp"

using fcm::BagRep;
using fcm::FinPerm;
using freemon::IndexedArray;
using freemon::Word;

namespace {

std::vector<IndexedArray> enumerate_arrays(std::size_t carrier, std::size_t max_len) {
  std::vector<IndexedArray> out;
  for (const Word& w : freemon::enumerate_words(carrier, max_len)) {
    out.push_back(freemon::to_array(w));
  }
  return out;
}

std::vector<FinPerm> all_perms(std::size_t n) {
  std::vector<std::size_t> fwd(n);
  for (std::size_t i = 0; i < n; ++i) fwd[i] = i;
  std::vector<FinPerm> out;
  do {
    out.push_back(FinPerm(fwd));
  } while (std::next_permutation(fwd.begin(), fwd.end()));
  return out;
}

bool same_multiset(const Word& a, const Word& b) {
  Word x = a;
  Word y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

const std::vector<fcm::FiniteCommMonoid>& comm_targets3() {
  static const auto targets = fcm::enumerate_comm_monoids(3);
  return targets;
}

}  // namespace

TEST_CASE("FinPerm validates bijectivity and composes") {
  CHECK_THROWS_AS(FinPerm({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FinPerm({0, 2}), std::invalid_argument);

  const FinPerm cycle({1, 2, 0});
  CHECK(cycle.inverse() == FinPerm({2, 0, 1}));
  CHECK(cycle.after(cycle.inverse()) == FinPerm::identity(3));
  CHECK(cycle.inverse().after(cycle) == FinPerm::identity(3));

  const FinPerm swap01({1, 0, 2});
  CHECK(cycle.after(swap01).apply(0) == cycle.apply(1));
}

TEST_CASE("swap_block moves the first block past the second") {
  CHECK(fcm::swap_block(0, 3) == FinPerm::identity(3));
  CHECK(fcm::swap_block(1, 2).forward() == std::vector<std::size_t>{2, 0, 1});

  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      CHECK(fcm::swap_block(n, m).after(fcm::swap_block(m, n)) ==
            FinPerm::identity(n + m));
    }
  }

  // a ++ b is bag-equivalent to b ++ a with swap_block as the witness:
  // (a++b).lookup(k) = (b++a).lookup(swap(k)) pointwise.
  for (const auto& a : enumerate_arrays(2, 3)) {
    for (const auto& b : enumerate_arrays(2, 3)) {
      const auto ab = freemon::array_concat(a, b);
      const auto ba = freemon::array_concat(b, a);
      const FinPerm swap = fcm::swap_block(a.len(), b.len());
      for (std::size_t k = 0; k < ab.len(); ++k) {
        CHECK(ab.lookup(k) == ba.lookup(swap.apply(k)));
      }
    }
  }
}

TEST_CASE("perm_pad_sum acts blockwise and witnesses congruence") {
  CHECK(fcm::perm_pad_sum(FinPerm::identity(2), FinPerm::identity(1)) ==
        FinPerm::identity(3));
  CHECK(fcm::perm_pad_sum(FinPerm({1, 0}), FinPerm::identity(1)).forward() ==
        std::vector<std::size_t>{1, 0, 2});

  for (const auto& a : enumerate_arrays(2, 3)) {
    for (const auto& b : enumerate_arrays(2, 3)) {
      const auto sigma = fcm::bag_equiv(a, b);
      if (!sigma) continue;
      for (const auto& c : enumerate_arrays(2, 3)) {
        for (const auto& d : enumerate_arrays(2, 3)) {
          const auto phi = fcm::bag_equiv(c, d);
          if (!phi) continue;
          const FinPerm padded = fcm::perm_pad_sum(*sigma, *phi);
          const auto ac = freemon::array_concat(a, c);
          const auto bd = freemon::array_concat(b, d);
          for (std::size_t k = 0; k < ac.len(); ++k) {
            CHECK(ac.lookup(k) == bd.lookup(padded.apply(k)));
          }
        }
      }
    }
  }
}

TEST_CASE("perm_fix_zero pins 0 without disturbing commutative extension") {
  // A permutation already fixing 0 is returned unchanged.
  for (const auto& phi : all_perms(4)) {
    if (phi.apply(0) == 0) CHECK(fcm::perm_fix_zero(phi) == phi);
  }

  // The three-cycle: its inverse image of 0 is 2, and rotating that
  // block to the front collapses the whole permutation to the identity.
  const FinPerm cycle({1, 2, 0});
  const FinPerm tau = fcm::perm_fix_zero(cycle);
  CHECK(tau.apply(0) == 0);
  CHECK(tau == FinPerm::identity(3));

  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& phi : all_perms(n)) {
      CHECK(fcm::perm_fix_zero(phi).apply(0) == 0);
    }
  }

  // Extension along any commutative target cannot tell i after phi from
  // i after tau.
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto perms = all_perms(n);
    for (const auto& arr : enumerate_arrays(3, n)) {
      if (arr.len() != n) continue;
      for (const auto& phi : perms) {
        const FinPerm tau2 = fcm::perm_fix_zero(phi);
        for (const auto& target : comm_targets3()) {
          const auto m = target.as_comm_monoid().as_monoid();
          std::vector<int> f(3, 0);
          do {
            const auto valuation = [&f](int x) { return f[x]; };
            CHECK(freemon::array_ext(valuation, m, fcm::reindex(arr, phi)) ==
                  freemon::array_ext(valuation, m, fcm::reindex(arr, tau2)));
          } while (ualg::next_tuple(f, target.m.size));
        }
      }
    }
  }
}

TEST_CASE("perm_punch strips the fixed zero") {
  CHECK(fcm::perm_punch(FinPerm::identity(4)) == FinPerm::identity(3));
  CHECK(fcm::perm_punch(FinPerm({0, 2, 1})) == FinPerm({1, 0}));
  CHECK_THROWS_AS(fcm::perm_punch(FinPerm({1, 0})), std::invalid_argument);

  // tau after successor = successor after punch(tau).
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& tau : all_perms(n)) {
      if (tau.apply(0) != 0) continue;
      const FinPerm psi = fcm::perm_punch(tau);
      for (std::size_t x = 0; x + 1 < n; ++x) {
        CHECK(tau.apply(x + 1) == psi.apply(x) + 1);
      }
    }
  }
}

TEST_CASE("bag_equiv returns a checked pointwise witness") {
  const IndexedArray a({1, 3});
  CHECK(fcm::bag_equiv(a, a) == FinPerm::identity(2));
  CHECK(fcm::bag_equiv(a, IndexedArray({3, 1})) == FinPerm({1, 0}));
  CHECK(!fcm::bag_equiv(IndexedArray({0, 0}), IndexedArray({0, 1})).has_value());
  CHECK(!fcm::bag_equiv(IndexedArray({0}), IndexedArray({0, 0})).has_value());

  const auto arrays = enumerate_arrays(3, 4);
  for (const auto& x : arrays) {
    CHECK(fcm::bag_equiv(x, x) == FinPerm::identity(x.len()));
    for (const auto& y : arrays) {
      const auto sigma = fcm::bag_equiv(x, y);
      const bool expect = same_multiset(freemon::to_word(x), freemon::to_word(y));
      CHECK(sigma.has_value() == expect);
      if (sigma) {
        for (std::size_t k = 0; k < x.len(); ++k) {
          CHECK(x.lookup(k) == y.lookup(sigma->apply(k)));
        }
        // Inverse witness for symmetry.
        const FinPerm inv = sigma->inverse();
        for (std::size_t k = 0; k < y.len(); ++k) {
          CHECK(y.lookup(k) == x.lookup(inv.apply(k)));
        }
        // Composed witness for transitivity.
        for (const auto& z : arrays) {
          const auto phi = fcm::bag_equiv(y, z);
          if (!phi) continue;
          const FinPerm composed = phi->after(*sigma);
          for (std::size_t k = 0; k < x.len(); ++k) {
            CHECK(x.lookup(k) == z.lookup(composed.apply(k)));
          }
        }
      }
    }
  }
}

TEST_CASE("adjacent transpositions reach exactly the bag-equivalent words") {
  CHECK(fcm::perm_adjacent_reachable({0, 1, 2}, {0, 1, 2}));
  CHECK(fcm::perm_adjacent_reachable({0, 1, 2}, {1, 0, 2}));
  CHECK(!fcm::perm_adjacent_reachable({0}, {1}));

  const auto words = freemon::enumerate_words(3, 4);
  for (const Word& xs : words) {
    for (const Word& ys : words) {
      CHECK(fcm::perm_adjacent_reachable(xs, ys) ==
            fcm::bag_equiv(freemon::to_array(xs), freemon::to_array(ys)).has_value());
    }
  }
}

TEST_CASE("the adjacent-swap relation satisfies all permutation-relation axioms") {
  const auto report = fcm::check_permutation_relation(
      [](const Word& a, const Word& b) { return fcm::perm_adjacent_reachable(a, b); },
      3, 4, comm_targets3());
  for (const auto& ax : report.axioms) {
    CAPTURE(ax.name);
    CHECK(ax.pass);
  }
  CHECK(report.all_pass());
}

TEST_CASE("word equality is not a permutation relation: commutativity fails") {
  const auto report = fcm::check_permutation_relation(
      [](const Word& a, const Word& b) { return a == b; }, 3, 4, comm_targets3());
  CHECK(!report.all_pass());
  const auto& comm = report.axiom("commutativity");
  CHECK(!comm.pass);
  CHECK(comm.witness == std::vector<Word>{{0}, {1}});
  CHECK(report.axiom("reflexivity").pass);
}

TEST_CASE("the always-true relation is not a permutation relation: ext-respect fails") {
  const auto report = fcm::check_permutation_relation(
      [](const Word&, const Word&) { return true; }, 3, 4, comm_targets3());
  CHECK(!report.all_pass());
  const auto& ext = report.axiom("ext-respect");
  CHECK(!ext.pass);
  // The empty word is related to a singleton, and a counting extension
  // tells them apart.
  CHECK(ext.witness == std::vector<Word>{{}, {0}});
  CHECK(!ext.detail.empty());
  CHECK(report.axiom("congruence").pass);
  CHECK(report.axiom("commutativity").pass);
}

TEST_CASE("bag_ext ignores the choice of representative") {
  CHECK(fcm::length(BagRep::of({3, 1, 2})) == 3);

  const fcm::CommMonoidOn<int> mod5{
      0, [](const int& x, const int& y) { return (x + y) % 5; }};
  const auto ident = [](int x) { return x; };
  CHECK(fcm::bag_ext(ident, mod5, BagRep::of({1, 3})) == 4);
  CHECK(fcm::bag_ext(ident, mod5, BagRep::of({3, 1})) == 4);

  const auto targets = fcm::enumerate_comm_monoids(2);
  for (const auto& arr : enumerate_arrays(3, 3)) {
    const auto perms = all_perms(arr.len());
    for (const auto& target : targets) {
      const auto cm = target.as_comm_monoid();
      std::vector<int> f(3, 0);
      do {
        const auto valuation = [&f](int x) { return f[x]; };
        const int base = fcm::bag_ext(valuation, cm, BagRep{arr});
        for (const auto& phi : perms) {
          CHECK(base == fcm::bag_ext(valuation, cm, BagRep{fcm::reindex(arr, phi)}));
        }
      } while (ualg::next_tuple(f, target.m.size));
    }
  }
}

TEST_CASE("bag equality goes through bag_equiv, not representations") {
  CHECK(fcm::bag_equal(BagRep::of({1, 2}), BagRep::of({2, 1})));
  CHECK(!fcm::bag_equal(BagRep::of({1, 2}), BagRep::of({1, 2, 2})));
  CHECK_THROWS_AS(fcm::reindex(freemon::to_array({0, 1}), FinPerm::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("length, member, any, all are homomorphic extensions") {
  CHECK(fcm::length(Word{}) == 0);
  CHECK(fcm::length(BagRep::of({0, 0, 1})) == 3);

  CHECK(!fcm::member(0, Word{}));
  CHECK(fcm::member(1, Word{3, 1, 2}));
  CHECK(fcm::member(1, BagRep::of({3, 1, 2})));
  CHECK(!fcm::member(7, BagRep::of({3, 1, 2})));

  const fcm::Pred truthy = [](int x) { return x > 0; };
  CHECK(fcm::all_pred(truthy, Word{}));
  CHECK(!fcm::any_pred(truthy, Word{}));
  CHECK(fcm::any_pred(truthy, BagRep::of({0, 2})));
  CHECK(!fcm::all_pred(truthy, BagRep::of({0, 2})));

  const auto words = freemon::enumerate_words(3, 4);
  for (const Word& xs : words) {
    for (const Word& ys : words) {
      const Word both = freemon::word_concat(xs, ys);
      CHECK(fcm::length(both) == fcm::length(xs) + fcm::length(ys));
      for (int a = 0; a < 3; ++a) {
        CHECK(fcm::member(a, both) == (fcm::member(a, xs) || fcm::member(a, ys)));
      }
    }
  }

  // Any agrees with the negation of All of the negation.
  for (const auto& table : testsupport::all_functions(3, 2)) {
    const fcm::Pred p = [&table](int x) { return table[x] != 0; };
    const fcm::Pred notp = [&table](int x) { return table[x] == 0; };
    for (const Word& xs : words) {
      CHECK(fcm::any_pred(p, xs) == !fcm::all_pred(notp, xs));
    }
  }
}

TEST_CASE("head_left picks the leftmost element homomorphically") {
  CHECK(fcm::head_left(Word{}) == std::nullopt);
  CHECK(fcm::head_left(Word{3, 1, 2}) == 3);

  const auto words = freemon::enumerate_words(3, 4);
  const auto leftmost = freemon::leftmost_monoid();
  for (const Word& xs : words) {
    for (const Word& ys : words) {
      CHECK(fcm::head_left(freemon::word_concat(xs, ys)) ==
            leftmost.mult(fcm::head_left(xs), fcm::head_left(ys)));
    }
  }
}

TEST_CASE("least is the meet of all elements, representative-independent") {
  const orders::MeetSemilattice min_meet =
      orders::order_to_meet(orders::TotalOrder::numeric(4));

  CHECK(fcm::least(BagRep::of({}), min_meet) == std::nullopt);
  CHECK(fcm::least(BagRep::of({2, 3, 1}), min_meet) == 1);

  for (const auto& arr : enumerate_arrays(4, 4)) {
    const Word w = freemon::to_word(arr);
    // Brute-force fold of the meet over one linearisation.
    std::optional<int> expected;
    for (int x : w) {
      expected = expected ? std::optional<int>(min_meet.op(*expected, x))
                          : std::optional<int>(x);
    }
    CHECK(fcm::least(BagRep{arr}, min_meet) == expected);
    for (const auto& phi : all_perms(arr.len())) {
      CHECK(fcm::least(BagRep{fcm::reindex(arr, phi)}, min_meet) == expected);
    }
  }

  // A non-total meet is rejected up front.
  orders::MeetSemilattice broken{2, {0, 0, 0, 1}};
  broken.meet[0 * 2 + 1] = 1;
  broken.meet[1 * 2 + 0] = 0;  // not commutative either way
  CHECK_THROWS_AS(fcm::least(BagRep::of({0}), broken), std::invalid_argument);
}

TEST_CASE("commutative monoid enumeration is law-filtered") {
  const auto targets = comm_targets3();
  CHECK(!targets.empty());
  bool has_mod2 = false;
  for (const auto& t : targets) {
    CHECK(!fcm::certify_comm_monoid(t).has_value());
    if (t.m == freemon::mod_add_monoid(2)) has_mod2 = true;
  }
  CHECK(has_mod2);

  // Left zeros with an adjoined unit: a monoid, but not commutative.
  freemon::FiniteMonoid left_zeros{3, 0, {0, 1, 2, 1, 1, 1, 2, 2, 2}};
  CHECK(!freemon::certify_monoid(left_zeros).has_value());
  const auto comm_failure = fcm::certify_comm_monoid(fcm::FiniteCommMonoid{left_zeros});
  REQUIRE(comm_failure.has_value());
  CHECK(comm_failure->equation ==
        ualg::equation_index(ualg::comm_monoid_equations(), "comm"));
}

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sortcheck/freemon.hpp"
#include "sortcheck/orders.hpp"

// Free commutative monoids as quotients of the free-monoid
// representations: bag equivalence with explicit permutation witnesses,
// the adjacent-swap closure on words, the block-swap / pad / fix-zero /
// punch permutation combinators, permutation-invariant extension, and
// the derived operations length, member, any, all, head, least.
//
// Quotients are representative-plus-decider: a BagRep stores one array
// and equality goes through bag_equiv, never through representation
// equality. Representative independence of extension is a checked
// property, not a baked-in normal form.
namespace fcm {

using freemon::IndexedArray;
using freemon::Word;

/// A bijection on 0..size-1 stored as its forward image table.
/// Construction validates bijectivity.
class FinPerm {
 public:
  explicit FinPerm(std::vector<std::size_t> fwd);

  static FinPerm identity(std::size_t n);

  std::size_t size() const { return fwd_.size(); }
  std::size_t apply(std::size_t k) const { return fwd_.at(k); }
  const std::vector<std::size_t>& forward() const { return fwd_; }

  FinPerm inverse() const;
  /// (f.after(g))(x) = f(g(x)).
  FinPerm after(const FinPerm& g) const;

  bool operator==(const FinPerm&) const = default;

 private:
  std::vector<std::size_t> fwd_;
};

/// The block swap on 0..n+m-1: k -> k+m when k < n, k-n otherwise.
/// Moves the first block of n past the block of m, witnessing
/// a ++ b ~ b ++ a on arrays of those lengths.
FinPerm swap_block(std::size_t n, std::size_t m);

/// Acts as p on 0..n-1 and as q shifted by n on the rest; witnesses
/// congruence of bag equivalence under concatenation.
FinPerm perm_pad_sum(const FinPerm& p, const FinPerm& q);

/// Given phi on 0..n, returns tau = phi composed with the block swap
/// that rotates phi^-1(0)'s block to the front, so that tau(0) = 0.
/// Extension along any commutative target is unchanged by the rotation;
/// that consequence is exercised by tests, not assumed here.
FinPerm perm_fix_zero(const FinPerm& phi);

/// Strips index 0 from a permutation fixing 0: psi(x) = tau(x+1) - 1,
/// so tau after successor = successor after psi. Throws
/// std::invalid_argument when tau(0) != 0.
FinPerm perm_punch(const FinPerm& tau);

using EqFn = std::function<bool(int, int)>;

/// Componentwise carrier equality; the default decidable equality.
bool words_equal(const Word& a, const Word& b, const EqFn& eq);

/// A permutation witness sigma with a.lookup(k) = b.lookup(sigma(k)),
/// found by greedy first-match multiplicity pairing, or nullopt when no
/// such sigma exists (length or multiplicity mismatch). eq must be an
/// equivalence on the carrier.
std::optional<FinPerm> bag_equiv(const IndexedArray& a, const IndexedArray& b);
std::optional<FinPerm> bag_equiv(const IndexedArray& a, const IndexedArray& b,
                                 const EqFn& eq);

/// The array (n, a.lookup after p): p acting on a's index set.
IndexedArray reindex(const IndexedArray& a, const FinPerm& p);

/// Whether ys is reachable from xs by adjacent transpositions anywhere
/// in the word, decided by breadth-first closure. Guarded to words of
/// length <= 8. Coincidence with bag_equiv inhabitation is a tested
/// theorem, not a shortcut taken here.
bool perm_adjacent_reachable(const Word& xs, const Word& ys);
bool perm_adjacent_reachable(const Word& xs, const Word& ys, const EqFn& eq);

/// One representative of a multiset of carrier elements.
struct BagRep {
  IndexedArray rep;

  static BagRep of(const Word& xs);
};

/// Bag equality: bag_equiv of representatives.
bool bag_equal(const BagRep& a, const BagRep& b);

/// A commutative monoid structure on an arbitrary value type. The
/// commutativity obligation is the caller's; finite targets can be
/// certified through FiniteCommMonoid.
template <typename T>
struct CommMonoidOn {
  T unit;
  std::function<T(const T&, const T&)> mult;

  freemon::MonoidOn<T> as_monoid() const { return {unit, mult}; }
};

/// A finite commutative monoid candidate; certify_comm_monoid checks
/// the four commutative-monoid equations exhaustively.
struct FiniteCommMonoid {
  freemon::FiniteMonoid m;

  CommMonoidOn<int> as_comm_monoid() const;

  bool operator==(const FiniteCommMonoid&) const = default;
};

std::optional<ualg::EqViolation> certify_comm_monoid(const FiniteCommMonoid& c);

/// Every commutative monoid structure on carriers of size 1..max_size,
/// ordered by size, then unit, then table. This is the fixed target
/// family used wherever an axiom quantifies over "all commutative
/// targets"; checks against it are sound but necessarily incomplete.
std::vector<FiniteCommMonoid> enumerate_comm_monoids(std::size_t max_size);

/// Extension lifted to bags: array_ext on the representative. Sound
/// only for commutative targets, which is what the parameter type
/// demands; representative independence is a tested theorem.
template <typename T, typename F>
T bag_ext(const F& f, const CommMonoidOn<T>& m, const BagRep& b) {
  return freemon::array_ext(f, m.as_monoid(), b.rep);
}

// Derived operations, each an extension into the indicated target.

std::size_t length(const Word& xs);   // ext of (\_ . 1) into (0, +)
std::size_t length(const BagRep& b);

bool member(int a, const Word& xs);   // ext of (eq a) into (false, or)
bool member(int a, const Word& xs, const EqFn& eq);
bool member(int a, const BagRep& b);
bool member(int a, const BagRep& b, const EqFn& eq);

using Pred = std::function<bool(int)>;

bool any_pred(const Pred& p, const Word& xs);  // ext into (false, or)
bool any_pred(const Pred& p, const BagRep& b);
bool all_pred(const Pred& p, const Word& xs);  // ext into (true, and)
bool all_pred(const Pred& p, const BagRep& b);

/// ext into the leftmost-defined monoid: the first element of a
/// nonempty word, none otherwise.
std::optional<int> head_left(const Word& xs);

/// ext into the optional-meet commutative monoid: the meet of all
/// elements, none on the empty bag. The meet structure is re-certified
/// on every call (idempotent, associative, commutative, total);
/// a failing structure throws std::invalid_argument naming the axiom.
std::optional<int> least(const BagRep& b, const orders::MeetSemilattice& meet);

/// Verdict for one axiom group of a permutation-relation check.
struct RelationAxiom {
  std::string name;
  bool pass = true;
  std::vector<Word> witness;  // the words instantiating the failed axiom
  std::string detail;         // extra context (e.g. which target and map)
};

struct RelationReport {
  std::vector<RelationAxiom> axioms;

  bool all_pass() const;
  const RelationAxiom& axiom(const std::string& name) const;
};

using WordRel = std::function<bool(const Word&, const Word&)>;

/// Exhaustively verifies the permutation-relation axioms for rel on the
/// bounded universe of words over 0..carrier_size-1: reflexivity,
/// symmetry, transitivity, congruence under concatenation,
/// commutativity, and respect for extension into each supplied
/// commutative target under every carrier-to-target map. Every word
/// passed to rel has length <= max_len; witnesses are scan-order first.
RelationReport check_permutation_relation(
    const WordRel& rel, std::size_t carrier_size, std::size_t max_len,
    const std::vector<FiniteCommMonoid>& targets);

}  // namespace fcm

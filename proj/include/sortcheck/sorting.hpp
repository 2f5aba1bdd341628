#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sortcheck/fcm.hpp"
#include "sortcheck/freemon.hpp"
#include "sortcheck/orders.hpp"

// Sections of the canonical surjection from words to bags, the two
// sorting axioms, the order derived from a section, insertion sort from
// an order, the round trips between orders and sections, and the two
// counterexample sections.
//
// All checks are exhaustive over a bounded domain (carrier size and
// maximum word length) in the canonical word order, so failures are
// deterministic and every witness replays through the public
// operations.
namespace sorting {

using freemon::Word;

/// Bounds for exhaustive checks.
struct Domain {
  std::size_t carrier = 4;
  std::size_t max_len = 5;
};

/// A list-to-list function claimed to be (well defined as) a section
/// of the quotient map onto bags.
struct SectionCandidate {
  std::string name;
  std::function<Word(const Word&)> apply;
  Domain domain;
};

std::string format_word(const Word& w);           // "[1,2,3]"
std::string format_tuple(const std::vector<int>& t);  // "(0,1,2)"

struct WellDefinedFailure {
  Word input;     // scan-order first representative
  Word permuted;  // a permutation of it with a different output
};

/// Permutation-equivalent inputs must map to identical outputs. Words
/// are swept up to max_len, with the permutation sweep capped at word
/// length 6.
std::optional<WellDefinedFailure> check_well_defined(const SectionCandidate& s);

struct SectionFailure {
  Word input;  // output is not a permutation of this input
};

/// The output must carry the same multiset as the input (q after s is
/// the identity on bags).
std::optional<SectionFailure> check_is_section(const SectionCandidate& s);

/// Insertion sort by t, as a section candidate named "insertion_sort".
SectionCandidate insertion_sort_section(const orders::TotalOrder& t, Domain d);

/// Plain insertion sort of a word under t.
Word insertion_sort_word(const orders::TotalOrder& t, const Word& xs);

/// The order read off a section: leq(x, y) iff the head of s applied to
/// the two-element word [x, y] is x. Returns nullopt (refuses) unless s
/// maps every two-element word to a permutation of it. The result is a
/// table only; whether it passes the total-order axioms is the caller's
/// question to ask.
std::optional<orders::TotalOrder> derived_leq(const SectionCandidate& s);

/// Image membership, decided by the fixed-point test s(xs) = xs: the
/// fiber over xs can only contain the bag of xs itself, since
/// s(ys) = xs forces ys = q(s(ys)) = q(xs).
bool in_image(const SectionCandidate& s, const Word& xs);

struct HeadLeastFailure {
  int x = 0;  // head of the image word
  int y = 0;  // member of the image word with [x, y] not in the image
  Word tail;  // rest of the image word
};

/// For every image word x::xs and every y in it, [x, y] must be in the
/// image: the head of an image word is least among its elements.
std::optional<HeadLeastFailure> check_head_least(const SectionCandidate& s);

struct TailSortFailure {
  int head = 0;
  Word tail;  // tail of an image word that is not itself in the image
};

/// Tails of image words must be image words.
std::optional<TailSortFailure> check_tail_sort(const SectionCandidate& s);

/// Behaves as insertion sort by base except on the exact two-element
/// bag {a, b}, which maps to [b, a]. Requires a != b and a <= b under
/// base (throws std::invalid_argument otherwise). Still well defined
/// and a section; the derived order loses transitivity when a third
/// element sits between a and b. Registry name "swap_pair:<a>,<b>".
SectionCandidate counterexample_swap_pair(const orders::TotalOrder& base,
                                          int a, int b, Domain d);

/// Sorts by base, then reverses the tail. A well-defined section that
/// keeps head-least but breaks tail-sort, and derives the same order as
/// insertion sort. Registry name "reverse_tail".
SectionCandidate counterexample_reverse_tail(const orders::TotalOrder& base,
                                             Domain d);

/// The inductive sorted predicate: empty, singleton, or head <= second
/// and tail sorted.
bool is_sorted(const orders::TotalOrder& t, const Word& xs);

/// derived_leq(insertion_sort(t)) = t, cell for cell.
bool roundtrip_order(const orders::TotalOrder& t);

struct RoundtripSectionResult {
  enum class Status { pass, fail, refused };

  Status status = Status::pass;
  std::string refused_axiom;  // when refused: first failing axiom name
  std::string refused_witness;
  Word fail_word;  // when fail: first word where the sections differ

  bool passed() const { return status == Status::pass; }
};

/// insertion_sort(derived_leq(s)) must agree with s on every word in
/// the domain. Candidates failing well-definedness, the section law, or
/// either sorting axiom are refused with the failing axiom's witness.
/// Agreement is extensional equality on the bounded word universe, an
/// approximation of function equality.
RoundtripSectionResult roundtrip_section(const SectionCandidate& s);

struct TriangleFailure {
  Word input;
  std::string reason;  // "not-sorted" or "multiset-changed"
};

/// sort = s after q: for every word, the output must be sorted under
/// the derived order and carry the input's multiset. Returns nullopt on
/// success, otherwise the first failure; a candidate with no derivable
/// order fails with reason "no-derived-order".
std::optional<TriangleFailure> sort_correctness_triangle(const SectionCandidate& s);

/// Everything cmd_certify prints, in structured form.
struct SortReport {
  std::string section_name;
  std::optional<WellDefinedFailure> well_defined;  // nullopt = PASS
  std::optional<SectionFailure> section;
  std::optional<HeadLeastFailure> head_least;
  std::optional<TailSortFailure> tail_sort;

  std::optional<orders::TotalOrder> derived;

  struct OrderAxiomRow {
    std::string name;
    bool pass = true;
    std::vector<int> witness;
  };
  std::vector<OrderAxiomRow> order_axioms;  // empty when derived is refused

  bool roundtrip_order_pass = false;  // base order vs derived(insertion_sort(base))
  RoundtripSectionResult roundtrip;

  bool all_pass() const;
};

/// Runs the full pipeline against a base order: the four section
/// checks, the derived order and its axioms (reflexivity, antisymmetry,
/// totality, transitivity), and both round trips.
SortReport certify(const SectionCandidate& s, const orders::TotalOrder& base);

/// One verdict line per check, in the fixed report order.
void write_report(std::ostream& out, const SortReport& r);

/// Resolves a registry name against a base order:
/// "insertion_sort", "swap_pair:<a>,<b>", or "reverse_tail".
std::optional<SectionCandidate> make_registered_section(
    const std::string& name, const orders::TotalOrder& base, Domain d);

}  // namespace sorting

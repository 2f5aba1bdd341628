#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Total orders, strict total orders, and meet semilattices tabulated on
// finite integer carriers, with exhaustive axiom checkers, the three
// structure conversions, and order enumeration.
//
// The tables carry no invariants of their own; the checkers decide.
// Decidability axioms have no separate content here: a tabulated
// relation always computes, so "merely either" and "decidably either"
// coincide on these carriers.
namespace orders {

struct TotalOrder {
  std::size_t n = 0;
  std::vector<std::uint8_t> leq;  // leq[x * n + y]

  static TotalOrder numeric(std::size_t n);

  bool le(std::size_t x, std::size_t y) const { return leq[x * n + y] != 0; }
  void set(std::size_t x, std::size_t y, bool v) { leq[x * n + y] = v ? 1 : 0; }

  bool operator==(const TotalOrder&) const = default;
};

struct StrictTotalOrder {
  std::size_t n = 0;
  std::vector<std::uint8_t> lt;  // lt[x * n + y]

  bool less(std::size_t x, std::size_t y) const { return lt[x * n + y] != 0; }
  void set(std::size_t x, std::size_t y, bool v) { lt[x * n + y] = v ? 1 : 0; }

  bool operator==(const StrictTotalOrder&) const = default;
};

struct MeetSemilattice {
  std::size_t n = 0;
  std::vector<int> meet;  // meet[x * n + y]

  int op(std::size_t x, std::size_t y) const { return meet[x * n + y]; }

  bool operator==(const MeetSemilattice&) const = default;
};

/// First failing axiom with its lexicographically first witness.
struct AxiomFailure {
  std::string axiom;
  std::vector<int> witness;

  bool operator==(const AxiomFailure&) const = default;
};

// Per-axiom checks (nullopt = pass, witness otherwise).
std::optional<AxiomFailure> check_reflexive(const TotalOrder& t);
std::optional<AxiomFailure> check_transitive(const TotalOrder& t);
std::optional<AxiomFailure> check_antisymmetric(const TotalOrder& t);
std::optional<AxiomFailure> check_total(const TotalOrder& t);

/// Axioms in order: reflexivity, transitivity, antisymmetry, totality.
std::optional<AxiomFailure> check_total_order(const TotalOrder& t);

/// Axioms in order: irreflexivity, transitivity, asymmetry,
/// cotransitivity, connectedness.
std::optional<AxiomFailure> check_strict_total_order(const StrictTotalOrder& s);

/// Axioms in order: idempotence, associativity, commutativity and, when
/// require_total, totality (meet(x,y) is x or y).
std::optional<AxiomFailure> check_meet_semilattice(const MeetSemilattice& m,
                                                   bool require_total);

// Conversions. Each assumes its input passes the corresponding checker;
// garbage in propagates to the output's checker.
StrictTotalOrder total_to_strict(const TotalOrder& t);   // x<y := x<=y and x!=y
TotalOrder strict_to_total(const StrictTotalOrder& s);   // x<=y := x<y or x=y
MeetSemilattice order_to_meet(const TotalOrder& t);      // meet := if x<=y then x else y
/// x<=y := meet(x,y)=x. Throws std::invalid_argument carrying the first
/// totality witness when the meet is not total.
TotalOrder meet_to_order(const MeetSemilattice& m);

/// All n! total orders on 0..n-1, one per permutation, permutations in
/// lexicographic order. Guarded to n <= 6; larger n throws
/// std::invalid_argument.
std::vector<TotalOrder> enumerate_total_orders(std::size_t n);

/// n rows of n space-separated 0/1 digits; row x, column y = leq(x,y).
std::string order_to_text(const TotalOrder& t);

}  // namespace orders

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

// Finitary signatures, finite algebras, the free term algebra, and
// equational satisfaction on finite carriers.
//
// Carriers are always the integer range 0..size-1. Exhaustive scans are
// deterministic: operations and equations are visited in declaration
// order, argument/assignment tuples in lexicographic order with the
// first position most significant, and the first violation found is the
// one reported.
namespace ualg {

/// A finitary signature: operation symbols are the indices
/// 0..op_count()-1, each with a natural-number arity.
struct Signature {
  std::vector<std::size_t> arities;

  std::size_t op_count() const { return arities.size(); }
  std::size_t arity(std::size_t op) const { return arities.at(op); }

  bool operator==(const Signature&) const = default;
};

// Operation indices of the monoid signature (e, *).
inline constexpr std::size_t op_unit = 0;
inline constexpr std::size_t op_mult = 1;

/// The monoid signature: one constant and one binary operation.
Signature monoid_signature();

/// Advances a base-`base` odometer in lexicographic order (first digit
/// most significant). Returns false once the tuple wraps back to zero.
bool next_tuple(std::vector<int>& tuple, std::size_t base);

/// Flat table index of an argument tuple, first argument most
/// significant.
std::size_t tuple_index(const std::vector<int>& args, std::size_t carrier);

/// A finite structure for a signature: carrier 0..carrier-1 and one
/// interpretation table per operation, indexed by tuple_index.
struct FiniteAlgebra {
  Signature sig;
  std::size_t carrier = 0;
  std::vector<std::vector<int>> interp;

  static FiniteAlgebra from_function(
      Signature sig, std::size_t carrier,
      const std::function<int(std::size_t, const std::vector<int>&)>& fn);

  int apply(std::size_t op, const std::vector<int>& args) const;

  /// Throws std::invalid_argument if a table has the wrong size or an
  /// entry outside the carrier.
  void validate() const;
};

/// A term of the free algebra: a leaf holding a generator, or an
/// operation node whose child count must match the operation's arity.
template <typename A>
class Term {
 public:
  static Term leaf(A value) { return Term(Repr(std::in_place_index<0>, std::move(value))); }

  static Term node(std::size_t op, std::vector<Term> children) {
    return Term(Repr(std::in_place_index<1>, NodeData{op, std::move(children)}));
  }

  bool is_leaf() const { return repr_.index() == 0; }
  const A& leaf_value() const { return std::get<0>(repr_); }
  std::size_t op() const { return std::get<1>(repr_).op; }
  const std::vector<Term>& children() const { return std::get<1>(repr_).children; }

  friend bool operator==(const Term& a, const Term& b) { return a.repr_ == b.repr_; }

 private:
  struct NodeData {
    std::size_t op;
    std::vector<Term> children;

    friend bool operator==(const NodeData& x, const NodeData& y) {
      return x.op == y.op && x.children == y.children;
    }
  };
  using Repr = std::variant<A, NodeData>;

  explicit Term(Repr repr) : repr_(std::move(repr)) {}

  Repr repr_;
};

/// Relabels the leaves of a term.
template <typename A, typename F>
auto term_map(const F& f, const Term<A>& t)
    -> Term<std::decay_t<decltype(f(std::declval<const A&>()))>> {
  using B = std::decay_t<decltype(f(std::declval<const A&>()))>;
  if (t.is_leaf()) return Term<B>::leaf(f(t.leaf_value()));
  std::vector<Term<B>> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(term_map(f, c));
  return Term<B>::node(t.op(), std::move(children));
}

/// Grafts leaf-terms in place: the multiplication of the term monad.
template <typename A>
Term<A> term_join(const Term<Term<A>>& t) {
  if (t.is_leaf()) return t.leaf_value();
  std::vector<Term<A>> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(term_join(c));
  return Term<A>::node(t.op(), std::move(children));
}

/// Evaluates a term in an arbitrary algebra presented as a callable
/// interpretation. Both term_ext and the term algebra itself are
/// instances of this one recursion.
template <typename Carrier, typename A, typename F, typename Interp>
Carrier term_eval(const F& f, const Interp& interp, const Term<A>& t) {
  if (t.is_leaf()) return f(t.leaf_value());
  std::vector<Carrier> values;
  values.reserve(t.children().size());
  for (const auto& c : t.children()) values.push_back(term_eval<Carrier>(f, interp, c));
  return interp(t.op(), std::move(values));
}

/// Universal extension of a generator valuation to the term algebra:
/// leaves evaluate through f, nodes through the algebra's tables.
/// Throws std::invalid_argument if a node does not fit the signature.
template <typename A, typename F>
int term_ext(const F& f, const FiniteAlgebra& alg, const Term<A>& t) {
  if (t.is_leaf()) return f(t.leaf_value());
  if (t.op() >= alg.sig.op_count() || t.children().size() != alg.sig.arity(t.op())) {
    throw std::invalid_argument("term_ext: node does not fit the signature");
  }
  std::vector<int> values;
  values.reserve(t.children().size());
  for (const auto& c : t.children()) values.push_back(term_ext(f, alg, c));
  return alg.apply(t.op(), values);
}

/// One equation schema: lhs = rhs over free variables 0..free_vars-1.
struct Equation {
  std::string name;
  std::size_t free_vars = 0;
  Term<int> lhs;
  Term<int> rhs;
};

struct EquationSystem {
  Signature sig;
  std::vector<Equation> equations;

  std::size_t eq_count() const { return equations.size(); }
};

/// Throws std::invalid_argument if a leaf references a variable at or
/// above its equation's free_vars, or a node does not fit the signature.
void validate_equation_system(const EquationSystem& eqs);

std::size_t equation_index(const EquationSystem& eqs, const std::string& name);

/// The three monoid equations unitl, unitr, assoc (fv 1, 1, 3).
EquationSystem monoid_equations();
/// The monoid equations plus comm (fv 2).
EquationSystem comm_monoid_equations();

struct HomViolation {
  std::size_t op = 0;
  std::vector<int> args;

  bool operator==(const HomViolation&) const = default;
};

/// First (operation, argument tuple) where f fails to commute with the
/// interpretations, or nullopt when f is a homomorphism. f is given as
/// a table over a's carrier.
std::optional<HomViolation> find_hom_violation(const std::vector<int>& f,
                                               const FiniteAlgebra& a,
                                               const FiniteAlgebra& b);

bool is_homomorphism(const std::vector<int>& f, const FiniteAlgebra& a,
                     const FiniteAlgebra& b);

struct EqViolation {
  std::size_t equation = 0;
  std::vector<int> assignment;

  bool operator==(const EqViolation&) const = default;
};

/// First (equation, assignment) whose two sides evaluate differently,
/// or nullopt when every assignment satisfies every equation.
std::optional<EqViolation> find_equation_violation(const FiniteAlgebra& alg,
                                                   const EquationSystem& eqs);

bool satisfies(const FiniteAlgebra& alg, const EquationSystem& eqs);

}  // namespace ualg

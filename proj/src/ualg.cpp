#include "sortcheck/ualg.hpp"

namespace ualg {

Signature monoid_signature() { return Signature{{0, 2}}; }

bool next_tuple(std::vector<int>& tuple, std::size_t base) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < static_cast<int>(base)) return true;
    tuple[i] = 0;
  }
  return false;
}

std::size_t tuple_index(const std::vector<int>& args, std::size_t carrier) {
  std::size_t idx = 0;
  for (int a : args) idx = idx * carrier + static_cast<std::size_t>(a);
  return idx;
}

namespace {

std::size_t table_size(std::size_t carrier, std::size_t arity) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < arity; ++i) size *= carrier;
  return size;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::from_function(
    Signature sig, std::size_t carrier,
    const std::function<int(std::size_t, const std::vector<int>&)>& fn) {
  FiniteAlgebra alg{std::move(sig), carrier, {}};
  alg.interp.resize(alg.sig.op_count());
  for (std::size_t op = 0; op < alg.sig.op_count(); ++op) {
    const std::size_t arity = alg.sig.arity(op);
    if (carrier == 0 && arity > 0) continue;  // empty argument cube
    alg.interp[op].reserve(table_size(carrier, arity));
    std::vector<int> args(arity, 0);
    do {
      alg.interp[op].push_back(fn(op, args));
    } while (next_tuple(args, carrier));
  }
  alg.validate();
  return alg;
}

int FiniteAlgebra::apply(std::size_t op, const std::vector<int>& args) const {
  if (op >= sig.op_count() || args.size() != sig.arity(op)) {
    throw std::invalid_argument("FiniteAlgebra::apply: op/arity mismatch");
  }
  for (int a : args) {
    if (a < 0 || static_cast<std::size_t>(a) >= carrier) {
      throw std::invalid_argument("FiniteAlgebra::apply: argument outside carrier");
    }
  }
  return interp[op][tuple_index(args, carrier)];
}

void FiniteAlgebra::validate() const {
  if (interp.size() != sig.op_count()) {
    throw std::invalid_argument("FiniteAlgebra: one table per operation required");
  }
  for (std::size_t op = 0; op < sig.op_count(); ++op) {
    const std::size_t arity = sig.arity(op);
    const std::size_t expect =
        (carrier == 0 && arity > 0) ? 0 : table_size(carrier, arity);
    if (interp[op].size() != expect) {
      throw std::invalid_argument("FiniteAlgebra: table size mismatch");
    }
    for (int v : interp[op]) {
      if (v < 0 || static_cast<std::size_t>(v) >= carrier) {
        throw std::invalid_argument("FiniteAlgebra: table entry outside carrier");
      }
    }
  }
}

namespace {

void validate_equation_term(const Term<int>& t, std::size_t free_vars,
                            const Signature& sig) {
  if (t.is_leaf()) {
    if (t.leaf_value() < 0 ||
        static_cast<std::size_t>(t.leaf_value()) >= free_vars) {
      throw std::invalid_argument("equation leaf references undeclared variable");
    }
    return;
  }
  if (t.op() >= sig.op_count() || t.children().size() != sig.arity(t.op())) {
    throw std::invalid_argument("equation node does not fit the signature");
  }
  for (const auto& c : t.children()) validate_equation_term(c, free_vars, sig);
}

}  // namespace

void validate_equation_system(const EquationSystem& eqs) {
  for (const auto& eq : eqs.equations) {
    validate_equation_term(eq.lhs, eq.free_vars, eqs.sig);
    validate_equation_term(eq.rhs, eq.free_vars, eqs.sig);
  }
}

std::size_t equation_index(const EquationSystem& eqs, const std::string& name) {
  for (std::size_t i = 0; i < eqs.equations.size(); ++i) {
    if (eqs.equations[i].name == name) return i;
  }
  throw std::out_of_range("equation_index: no equation named " + name);
}

EquationSystem monoid_equations() {
  using T = Term<int>;
  const T x = T::leaf(0);
  const T y = T::leaf(1);
  const T z = T::leaf(2);
  const T e = T::node(op_unit, {});

  EquationSystem sys{monoid_signature(), {}};
  sys.equations.push_back({"unitl", 1, T::node(op_mult, {e, x}), x});
  sys.equations.push_back({"unitr", 1, T::node(op_mult, {x, e}), x});
  sys.equations.push_back(
      {"assoc", 3, T::node(op_mult, {T::node(op_mult, {x, y}), z}),
       T::node(op_mult, {x, T::node(op_mult, {y, z})})});
  return sys;
}

EquationSystem comm_monoid_equations() {
  using T = Term<int>;
  const T x = T::leaf(0);
  const T y = T::leaf(1);

  EquationSystem sys = monoid_equations();
  sys.equations.push_back(
      {"comm", 2, T::node(op_mult, {x, y}), T::node(op_mult, {y, x})});
  return sys;
}

std::optional<HomViolation> find_hom_violation(const std::vector<int>& f,
                                               const FiniteAlgebra& a,
                                               const FiniteAlgebra& b) {
  if (a.sig != b.sig) {
    throw std::invalid_argument("find_hom_violation: signature mismatch");
  }
  if (f.size() != a.carrier) {
    throw std::invalid_argument("find_hom_violation: map not total on the carrier");
  }
  for (int v : f) {
    if (v < 0 || static_cast<std::size_t>(v) >= b.carrier) {
      throw std::invalid_argument("find_hom_violation: map leaves the codomain");
    }
  }

  for (std::size_t op = 0; op < a.sig.op_count(); ++op) {
    const std::size_t arity = a.sig.arity(op);
    if (a.carrier == 0 && arity > 0) continue;
    std::vector<int> args(arity, 0);
    std::vector<int> mapped(arity, 0);
    do {
      for (std::size_t i = 0; i < arity; ++i) mapped[i] = f[args[i]];
      if (f[a.apply(op, args)] != b.apply(op, mapped)) {
        return HomViolation{op, args};
      }
    } while (next_tuple(args, a.carrier));
  }
  return std::nullopt;
}

bool is_homomorphism(const std::vector<int>& f, const FiniteAlgebra& a,
                     const FiniteAlgebra& b) {
  return !find_hom_violation(f, a, b).has_value();
}

std::optional<EqViolation> find_equation_violation(const FiniteAlgebra& alg,
                                                   const EquationSystem& eqs) {
  if (eqs.sig != alg.sig) {
    throw std::invalid_argument("find_equation_violation: signature mismatch");
  }
  for (std::size_t e = 0; e < eqs.equations.size(); ++e) {
    const Equation& eq = eqs.equations[e];
    if (alg.carrier == 0 && eq.free_vars > 0) continue;  // vacuous
    std::vector<int> assignment(eq.free_vars, 0);
    const auto rho = [&assignment](int var) { return assignment.at(var); };
    do {
      if (term_ext(rho, alg, eq.lhs) != term_ext(rho, alg, eq.rhs)) {
        return EqViolation{e, assignment};
      }
    } while (next_tuple(assignment, alg.carrier));
  }
  return std::nullopt;
}

bool satisfies(const FiniteAlgebra& alg, const EquationSystem& eqs) {
  return !find_equation_violation(alg, eqs).has_value();
}

}  // namespace ualg

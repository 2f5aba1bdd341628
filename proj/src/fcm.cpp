#include "sortcheck/fcm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fcm {

FinPerm::FinPerm(std::vector<std::size_t> fwd) : fwd_(std::move(fwd)) {
  std::vector<bool> hit(fwd_.size(), false);
  for (std::size_t v : fwd_) {
    if (v >= fwd_.size() || hit[v]) {
      throw std::invalid_argument("FinPerm: forward table is not a bijection");
    }
    hit[v] = true;
  }
}

FinPerm FinPerm::identity(std::size_t n) {
  std::vector<std::size_t> fwd(n);
  for (std::size_t k = 0; k < n; ++k) fwd[k] = k;
  return FinPerm(std::move(fwd));
}

FinPerm FinPerm::inverse() const {
  std::vector<std::size_t> fwd(fwd_.size());
  for (std::size_t k = 0; k < fwd_.size(); ++k) fwd[fwd_[k]] = k;
  return FinPerm(std::move(fwd));
}

FinPerm FinPerm::after(const FinPerm& g) const {
  if (size() != g.size()) {
    throw std::invalid_argument("FinPerm::after: size mismatch");
  }
  std::vector<std::size_t> fwd(fwd_.size());
  for (std::size_t k = 0; k < fwd_.size(); ++k) fwd[k] = fwd_[g.fwd_[k]];
  return FinPerm(std::move(fwd));
}

FinPerm swap_block(std::size_t n, std::size_t m) {
  std::vector<std::size_t> fwd(n + m);
  for (std::size_t k = 0; k < n + m; ++k) fwd[k] = k < n ? k + m : k - n;
  return FinPerm(std::move(fwd));
}

FinPerm perm_pad_sum(const FinPerm& p, const FinPerm& q) {
  const std::size_t n = p.size();
  std::vector<std::size_t> fwd(n + q.size());
  for (std::size_t k = 0; k < n; ++k) fwd[k] = p.apply(k);
  for (std::size_t k = 0; k < q.size(); ++k) fwd[n + k] = n + q.apply(k);
  return FinPerm(std::move(fwd));
}

FinPerm perm_fix_zero(const FinPerm& phi) {
  const std::size_t size = phi.size();
  if (size == 0) {
    throw std::invalid_argument("perm_fix_zero: empty permutation");
  }
  std::size_t k = 0;
  while (phi.apply(k) != 0) ++k;
  // Rotate k to position 0 before applying phi; the rotation is the
  // block swap of the two blocks around k, so extension into any
  // commutative target cannot see it.
  return phi.after(swap_block(size - k, k));
}

FinPerm perm_punch(const FinPerm& tau) {
  if (tau.size() == 0 || tau.apply(0) != 0) {
    throw std::invalid_argument("perm_punch: requires tau(0) = 0");
  }
  std::vector<std::size_t> fwd(tau.size() - 1);
  for (std::size_t x = 0; x + 1 < tau.size(); ++x) fwd[x] = tau.apply(x + 1) - 1;
  return FinPerm(std::move(fwd));
}

namespace {

bool default_eq(int a, int b) { return a == b; }

}  // namespace

bool words_equal(const Word& a, const Word& b, const EqFn& eq) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!eq(a[i], b[i])) return false;
  }
  return true;
}

std::optional<FinPerm> bag_equiv(const IndexedArray& a, const IndexedArray& b) {
  return bag_equiv(a, b, default_eq);
}

std::optional<FinPerm> bag_equiv(const IndexedArray& a, const IndexedArray& b,
                                 const EqFn& eq) {
  if (a.len() != b.len()) return std::nullopt;
  const std::size_t n = a.len();
  std::vector<bool> used(n, false);
  std::vector<std::size_t> fwd(n);
  for (std::size_t k = 0; k < n; ++k) {
    bool found = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!used[j] && eq(a.lookup(k), b.lookup(j))) {
        fwd[k] = j;
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return FinPerm(std::move(fwd));
}

IndexedArray reindex(const IndexedArray& a, const FinPerm& p) {
  if (a.len() != p.size()) {
    throw std::invalid_argument("reindex: permutation size must match array length");
  }
  return IndexedArray::from_fn(a.len(),
                               [&](std::size_t k) { return a.lookup(p.apply(k)); });
}

bool perm_adjacent_reachable(const Word& xs, const Word& ys) {
  return perm_adjacent_reachable(xs, ys, default_eq);
}

bool perm_adjacent_reachable(const Word& xs, const Word& ys, const EqFn& eq) {
  if (xs.size() != ys.size()) return false;
  if (xs.size() > 8) {
    throw std::invalid_argument("perm_adjacent_reachable: closure capped at length 8");
  }
  if (words_equal(xs, ys, eq)) return true;
  std::set<Word> seen{xs};
  std::deque<Word> frontier{xs};
  while (!frontier.empty()) {
    Word w = frontier.front();
    frontier.pop_front();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      std::swap(w[i], w[i + 1]);
      if (!seen.contains(w)) {
        if (words_equal(w, ys, eq)) return true;
        seen.insert(w);
        frontier.push_back(w);
      }
      std::swap(w[i], w[i + 1]);
    }
  }
  return false;
}

BagRep BagRep::of(const Word& xs) { return BagRep{freemon::to_array(xs)}; }

bool bag_equal(const BagRep& a, const BagRep& b) {
  return bag_equiv(a.rep, b.rep).has_value();
}

CommMonoidOn<int> FiniteCommMonoid::as_comm_monoid() const {
  const freemon::FiniteMonoid copy = m;
  return {copy.unit,
          [copy](const int& x, const int& y) { return copy.mult(x, y); }};
}

std::optional<ualg::EqViolation> certify_comm_monoid(const FiniteCommMonoid& c) {
  return ualg::find_equation_violation(c.m.as_algebra(),
                                       ualg::comm_monoid_equations());
}

std::vector<FiniteCommMonoid> enumerate_comm_monoids(std::size_t max_size) {
  const ualg::EquationSystem laws = ualg::comm_monoid_equations();
  std::vector<FiniteCommMonoid> out;
  for (std::size_t size = 1; size <= max_size; ++size) {
    for (int unit = 0; unit < static_cast<int>(size); ++unit) {
      std::vector<int> table(size * size, 0);
      do {
        freemon::FiniteMonoid m{size, unit, table};
        if (ualg::satisfies(m.as_algebra(), laws)) {
          out.push_back(FiniteCommMonoid{std::move(m)});
        }
      } while (ualg::next_tuple(table, size));
    }
  }
  return out;
}

std::size_t length(const Word& xs) {
  return word_ext([](int) { return std::size_t{1}; }, freemon::counting_monoid(), xs);
}

std::size_t length(const BagRep& b) {
  CommMonoidOn<std::size_t> add{
      0, [](const std::size_t& x, const std::size_t& y) { return x + y; }};
  return bag_ext([](int) { return std::size_t{1}; }, add, b);
}

bool member(int a, const Word& xs) { return member(a, xs, default_eq); }

bool member(int a, const Word& xs, const EqFn& eq) {
  return word_ext([&](int y) { return eq(a, y); }, freemon::or_monoid(), xs);
}

bool member(int a, const BagRep& b) { return member(a, b, default_eq); }

bool member(int a, const BagRep& b, const EqFn& eq) {
  CommMonoidOn<bool> disj{false, [](const bool& x, const bool& y) { return x || y; }};
  return bag_ext([&](int y) { return eq(a, y); }, disj, b);
}

bool any_pred(const Pred& p, const Word& xs) {
  return word_ext([&](int y) { return p(y); }, freemon::or_monoid(), xs);
}

bool any_pred(const Pred& p, const BagRep& b) {
  CommMonoidOn<bool> disj{false, [](const bool& x, const bool& y) { return x || y; }};
  return bag_ext([&](int y) { return p(y); }, disj, b);
}

bool all_pred(const Pred& p, const Word& xs) {
  return word_ext([&](int y) { return p(y); }, freemon::and_monoid(), xs);
}

bool all_pred(const Pred& p, const BagRep& b) {
  CommMonoidOn<bool> conj{true, [](const bool& x, const bool& y) { return x && y; }};
  return bag_ext([&](int y) { return p(y); }, conj, b);
}

std::optional<int> head_left(const Word& xs) {
  return word_ext([](int y) { return std::optional<int>(y); },
                  freemon::leftmost_monoid(), xs);
}

std::optional<int> least(const BagRep& b, const orders::MeetSemilattice& meet) {
  if (auto failure = orders::check_meet_semilattice(meet, /*require_total=*/true)) {
    throw std::invalid_argument("least: meet structure rejected: " + failure->axiom);
  }
  CommMonoidOn<std::optional<int>> target{
      std::nullopt,
      [&meet](const std::optional<int>& x,
              const std::optional<int>& y) -> std::optional<int> {
        if (!x) return y;
        if (!y) return x;
        return meet.op(static_cast<std::size_t>(*x), static_cast<std::size_t>(*y));
      }};
  return bag_ext([](int x) { return std::optional<int>(x); }, target, b);
}

bool RelationReport::all_pass() const {
  for (const auto& ax : axioms) {
    if (!ax.pass) return false;
  }
  return true;
}

const RelationAxiom& RelationReport::axiom(const std::string& name) const {
  for (const auto& ax : axioms) {
    if (ax.name == name) return ax;
  }
  throw std::out_of_range("RelationReport: no axiom named " + name);
}

RelationReport check_permutation_relation(
    const WordRel& rel, std::size_t carrier_size, std::size_t max_len,
    const std::vector<FiniteCommMonoid>& targets) {
  const std::vector<Word> words = freemon::enumerate_words(carrier_size, max_len);
  const std::size_t count = words.size();

  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) index[words[i]] = i;

  std::vector<std::uint8_t> related(count * count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      related[i * count + j] = rel(words[i], words[j]) ? 1 : 0;
    }
  }
  const auto rel_at = [&](std::size_t i, std::size_t j) {
    return related[i * count + j] != 0;
  };

  RelationReport report;

  {
    RelationAxiom ax;
    ax.name = "reflexivity";
    for (std::size_t i = 0; i < count && ax.pass; ++i) {
      if (!rel_at(i, i)) {
        ax.pass = false;
        ax.witness = {words[i]};
      }
    }
    report.axioms.push_back(std::move(ax));
  }

  {
    RelationAxiom ax;
    ax.name = "symmetry";
    for (std::size_t i = 0; i < count && ax.pass; ++i) {
      for (std::size_t j = 0; j < count && ax.pass; ++j) {
        if (rel_at(i, j) && !rel_at(j, i)) {
          ax.pass = false;
          ax.witness = {words[i], words[j]};
        }
      }
    }
    report.axioms.push_back(std::move(ax));
  }

  {
    RelationAxiom ax;
    ax.name = "transitivity";
    for (std::size_t i = 0; i < count && ax.pass; ++i) {
      for (std::size_t j = 0; j < count && ax.pass; ++j) {
        if (!rel_at(i, j)) continue;
        for (std::size_t k = 0; k < count && ax.pass; ++k) {
          if (rel_at(j, k) && !rel_at(i, k)) {
            ax.pass = false;
            ax.witness = {words[i], words[j], words[k]};
          }
        }
      }
    }
    report.axioms.push_back(std::move(ax));
  }

  // Congruence and commutativity quantify over quadruples/pairs whose
  // concatenations stay inside the bounded universe.
  {
    RelationAxiom ax;
    ax.name = "congruence";
    for (std::size_t a = 0; a < count && ax.pass; ++a) {
      for (std::size_t b = 0; b < count && ax.pass; ++b) {
        if (!rel_at(a, b)) continue;
        for (std::size_t c = 0; c < count && ax.pass; ++c) {
          if (words[a].size() + words[c].size() > max_len) continue;
          for (std::size_t d = 0; d < count && ax.pass; ++d) {
            if (words[b].size() + words[d].size() > max_len) continue;
            if (!rel_at(c, d)) continue;
            const std::size_t ac = index.at(freemon::word_concat(words[a], words[c]));
            const std::size_t bd = index.at(freemon::word_concat(words[b], words[d]));
            if (!rel_at(ac, bd)) {
              ax.pass = false;
              ax.witness = {words[a], words[b], words[c], words[d]};
            }
          }
        }
      }
    }
    report.axioms.push_back(std::move(ax));
  }

  {
    RelationAxiom ax;
    ax.name = "commutativity";
    for (std::size_t a = 0; a < count && ax.pass; ++a) {
      for (std::size_t b = 0; b < count && ax.pass; ++b) {
        if (words[a].size() + words[b].size() > max_len) continue;
        const std::size_t ab = index.at(freemon::word_concat(words[a], words[b]));
        const std::size_t ba = index.at(freemon::word_concat(words[b], words[a]));
        if (!rel_at(ab, ba)) {
          ax.pass = false;
          ax.witness = {words[a], words[b]};
        }
      }
    }
    report.axioms.push_back(std::move(ax));
  }

  {
    RelationAxiom ax;
    ax.name = "ext-respect";
    for (std::size_t i = 0; i < count && ax.pass; ++i) {
      for (std::size_t j = 0; j < count && ax.pass; ++j) {
        if (!rel_at(i, j)) continue;
        for (std::size_t t = 0; t < targets.size() && ax.pass; ++t) {
          const freemon::MonoidOn<int> m = targets[t].as_comm_monoid().as_monoid();
          std::vector<int> f(carrier_size, 0);
          do {
            const auto valuation = [&f](int x) { return f.at(x); };
            if (freemon::word_ext(valuation, m, words[i]) !=
                freemon::word_ext(valuation, m, words[j])) {
              ax.pass = false;
              ax.witness = {words[i], words[j]};
              std::ostringstream detail;
              detail << "target=" << t << " f=(";
              for (std::size_t v = 0; v < f.size(); ++v) {
                if (v > 0) detail << ',';
                detail << f[v];
              }
              detail << ')';
              ax.detail = detail.str();
              break;
            }
          } while (ualg::next_tuple(f, targets[t].m.size));
        }
      }
    }
    report.axioms.push_back(std::move(ax));
  }

  return report;
}

}  // namespace fcm

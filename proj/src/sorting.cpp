#include "sortcheck/sorting.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sorting {

std::string format_word(const Word& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) os << ',';
    os << w[i];
  }
  os << ']';
  return os.str();
}

std::string format_tuple(const std::vector<int>& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) os << ',';
    os << t[i];
  }
  os << ')';
  return os.str();
}

namespace {

std::size_t checked_element(const orders::TotalOrder& t, int x) {
  if (x < 0 || static_cast<std::size_t>(x) >= t.n) {
    throw std::invalid_argument("word element outside the order's carrier");
  }
  return static_cast<std::size_t>(x);
}

}  // namespace

Word insertion_sort_word(const orders::TotalOrder& t, const Word& xs) {
  Word out;
  out.reserve(xs.size());
  for (int x : xs) {
    const std::size_t ex = checked_element(t, x);
    auto it = out.begin();
    while (it != out.end() && t.le(checked_element(t, *it), ex)) ++it;
    out.insert(it, x);
  }
  return out;
}

SectionCandidate insertion_sort_section(const orders::TotalOrder& t, Domain d) {
  const orders::TotalOrder ord = t;
  return {"insertion_sort",
          [ord](const Word& xs) { return insertion_sort_word(ord, xs); }, d};
}

std::optional<WellDefinedFailure> check_well_defined(const SectionCandidate& s) {
  // Permutation sweeps are capped at word length 6.
  const std::size_t sweep_len = std::min<std::size_t>(s.domain.max_len, 6);
  for (const Word& w : freemon::enumerate_words(s.domain.carrier, sweep_len)) {
    const Word base = s.apply(w);
    Word p = w;
    std::sort(p.begin(), p.end());
    do {
      if (s.apply(p) != base) return WellDefinedFailure{w, p};
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return std::nullopt;
}

std::optional<SectionFailure> check_is_section(const SectionCandidate& s) {
  for (const Word& w : freemon::enumerate_words(s.domain.carrier, s.domain.max_len)) {
    const Word out = s.apply(w);
    if (!fcm::bag_equiv(freemon::to_array(out), freemon::to_array(w))) {
      return SectionFailure{w};
    }
  }
  return std::nullopt;
}

std::optional<orders::TotalOrder> derived_leq(const SectionCandidate& s) {
  const std::size_t n = s.domain.carrier;
  orders::TotalOrder t{n, std::vector<std::uint8_t>(n * n, 0)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Word out = s.apply({static_cast<int>(x), static_cast<int>(y)});
      const bool keeps_pair =
          out.size() == 2 &&
          ((out[0] == static_cast<int>(x) && out[1] == static_cast<int>(y)) ||
           (out[0] == static_cast<int>(y) && out[1] == static_cast<int>(x)));
      if (!keeps_pair) return std::nullopt;  // not a section on pairs
      t.set(x, y, out[0] == static_cast<int>(x));
    }
  }
  return t;
}

bool in_image(const SectionCandidate& s, const Word& xs) {
  return s.apply(xs) == xs;
}

std::optional<HeadLeastFailure> check_head_least(const SectionCandidate& s) {
  for (const Word& w : freemon::enumerate_words(s.domain.carrier, s.domain.max_len)) {
    if (w.empty() || !in_image(s, w)) continue;
    const int x = w[0];
    for (int y : w) {
      if (!in_image(s, {x, y})) {
        return HeadLeastFailure{x, y, Word(w.begin() + 1, w.end())};
      }
    }
  }
  return std::nullopt;
}

std::optional<TailSortFailure> check_tail_sort(const SectionCandidate& s) {
  for (const Word& w : freemon::enumerate_words(s.domain.carrier, s.domain.max_len)) {
    if (w.empty() || !in_image(s, w)) continue;
    const Word tail(w.begin() + 1, w.end());
    if (!in_image(s, tail)) return TailSortFailure{w[0], tail};
  }
  return std::nullopt;
}

SectionCandidate counterexample_swap_pair(const orders::TotalOrder& base, int a,
                                          int b, Domain d) {
  if (a == b) {
    throw std::invalid_argument("swap_pair: the two elements must differ");
  }
  checked_element(base, a);
  checked_element(base, b);
  if (!base.le(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) {
    throw std::invalid_argument("swap_pair: requires a <= b under the base order");
  }
  const orders::TotalOrder ord = base;
  std::string name = "swap_pair:" + std::to_string(a) + "," + std::to_string(b);
  return {std::move(name),
          [ord, a, b](const Word& xs) -> Word {
            const bool is_the_pair =
                xs.size() == 2 && ((xs[0] == a && xs[1] == b) ||
                                   (xs[0] == b && xs[1] == a));
            if (is_the_pair) return Word{b, a};
            return insertion_sort_word(ord, xs);
          },
          d};
}

SectionCandidate counterexample_reverse_tail(const orders::TotalOrder& base,
                                             Domain d) {
  const orders::TotalOrder ord = base;
  return {"reverse_tail",
          [ord](const Word& xs) -> Word {
            Word out = insertion_sort_word(ord, xs);
            if (out.size() > 1) std::reverse(out.begin() + 1, out.end());
            return out;
          },
          d};
}

bool is_sorted(const orders::TotalOrder& t, const Word& xs) {
  if (xs.size() <= 1) return true;
  if (!t.le(checked_element(t, xs[0]), checked_element(t, xs[1]))) return false;
  return is_sorted(t, Word(xs.begin() + 1, xs.end()));
}

bool roundtrip_order(const orders::TotalOrder& t) {
  const SectionCandidate s = insertion_sort_section(t, Domain{t.n, 2});
  const auto derived = derived_leq(s);
  return derived.has_value() && *derived == t;
}

RoundtripSectionResult roundtrip_section(const SectionCandidate& s) {
  RoundtripSectionResult r;
  const auto refuse = [&r](const std::string& axiom, const std::string& witness) {
    r.status = RoundtripSectionResult::Status::refused;
    r.refused_axiom = axiom;
    r.refused_witness = witness;
  };

  if (auto wd = check_well_defined(s)) {
    refuse("well-defined", format_word(wd->permuted));
    return r;
  }
  if (auto sec = check_is_section(s)) {
    refuse("section", format_word(sec->input));
    return r;
  }
  if (auto hl = check_head_least(s)) {
    refuse("head-least", format_word({hl->x, hl->y}));
    return r;
  }
  if (auto ts = check_tail_sort(s)) {
    refuse("tail-sort", format_word(ts->tail));
    return r;
  }

  const auto derived = derived_leq(s);
  if (!derived) {  // unreachable for a checked section; refuse defensively
    refuse("section", "[]");
    return r;
  }
  const SectionCandidate canon = insertion_sort_section(*derived, s.domain);
  for (const Word& w : freemon::enumerate_words(s.domain.carrier, s.domain.max_len)) {
    if (canon.apply(w) != s.apply(w)) {
      r.status = RoundtripSectionResult::Status::fail;
      r.fail_word = w;
      return r;
    }
  }
  r.status = RoundtripSectionResult::Status::pass;
  return r;
}

std::optional<TriangleFailure> sort_correctness_triangle(const SectionCandidate& s) {
  const auto derived = derived_leq(s);
  if (!derived) return TriangleFailure{{}, "no-derived-order"};
  for (const Word& w : freemon::enumerate_words(s.domain.carrier, s.domain.max_len)) {
    const Word out = s.apply(w);
    if (!is_sorted(*derived, out)) return TriangleFailure{w, "not-sorted"};
    if (!fcm::bag_equiv(freemon::to_array(out), freemon::to_array(w))) {
      return TriangleFailure{w, "multiset-changed"};
    }
  }
  return std::nullopt;
}

bool SortReport::all_pass() const {
  if (well_defined || section || head_least || tail_sort) return false;
  if (!derived) return false;
  for (const auto& row : order_axioms) {
    if (!row.pass) return false;
  }
  return roundtrip_order_pass && roundtrip.passed();
}

SortReport certify(const SectionCandidate& s, const orders::TotalOrder& base) {
  SortReport r;
  r.section_name = s.name;
  r.well_defined = check_well_defined(s);
  r.section = check_is_section(s);
  r.head_least = check_head_least(s);
  r.tail_sort = check_tail_sort(s);
  r.derived = derived_leq(s);
  if (r.derived) {
    const auto row = [](std::string name, std::optional<orders::AxiomFailure> f) {
      return SortReport::OrderAxiomRow{std::move(name), !f.has_value(),
                                       f ? f->witness : std::vector<int>{}};
    };
    r.order_axioms.push_back(row("reflexivity", orders::check_reflexive(*r.derived)));
    r.order_axioms.push_back(
        row("antisymmetry", orders::check_antisymmetric(*r.derived)));
    r.order_axioms.push_back(row("totality", orders::check_total(*r.derived)));
    r.order_axioms.push_back(
        row("transitivity", orders::check_transitive(*r.derived)));
  }
  r.roundtrip_order_pass = roundtrip_order(base);
  r.roundtrip = roundtrip_section(s);
  return r;
}

void write_report(std::ostream& out, const SortReport& r) {
  if (r.well_defined) {
    out << "AXIOM well-defined: FAIL witness=" << format_word(r.well_defined->permuted)
        << " differs-from=" << format_word(r.well_defined->input) << '\n';
  } else {
    out << "AXIOM well-defined: PASS\n";
  }

  if (r.section) {
    out << "AXIOM section: FAIL witness=" << format_word(r.section->input) << '\n';
  } else {
    out << "AXIOM section: PASS\n";
  }

  if (r.head_least) {
    Word image_word{r.head_least->x};
    image_word.insert(image_word.end(), r.head_least->tail.begin(),
                      r.head_least->tail.end());
    out << "AXIOM head-least: FAIL witness=" << format_word(image_word)
        << " pair=" << format_word({r.head_least->x, r.head_least->y}) << '\n';
  } else {
    out << "AXIOM head-least: PASS\n";
  }

  if (r.tail_sort) {
    Word image_word{r.tail_sort->head};
    image_word.insert(image_word.end(), r.tail_sort->tail.begin(),
                      r.tail_sort->tail.end());
    out << "AXIOM tail-sort: FAIL witness=" << format_word(image_word)
        << " tail=" << format_word(r.tail_sort->tail) << '\n';
  } else {
    out << "AXIOM tail-sort: PASS\n";
  }

  for (const auto& row : r.order_axioms) {
    out << "ORDER " << row.name << ": ";
    if (row.pass) {
      out << "PASS\n";
    } else {
      out << "FAIL witness=" << format_tuple(row.witness) << '\n';
    }
  }

  if (r.derived) {
    out << "DERIVED ORDER:\n" << orders::order_to_text(*r.derived);
  } else {
    out << "DERIVED ORDER: REFUSED\n";
  }

  out << "ROUNDTRIP order: " << (r.roundtrip_order_pass ? "PASS" : "FAIL") << '\n';

  switch (r.roundtrip.status) {
    case RoundtripSectionResult::Status::pass:
      out << "ROUNDTRIP section: PASS\n";
      break;
    case RoundtripSectionResult::Status::fail:
      out << "ROUNDTRIP section: FAIL witness=" << format_word(r.roundtrip.fail_word)
          << '\n';
      break;
    case RoundtripSectionResult::Status::refused:
      out << "ROUNDTRIP section: REFUSED axiom=" << r.roundtrip.refused_axiom
          << " witness=" << r.roundtrip.refused_witness << '\n';
      break;
  }
}

std::optional<SectionCandidate> make_registered_section(
    const std::string& name, const orders::TotalOrder& base, Domain d) {
  try {
    if (name == "insertion_sort") return insertion_sort_section(base, d);
    if (name == "reverse_tail") return counterexample_reverse_tail(base, d);
    const std::string prefix = "swap_pair:";
    if (name.rfind(prefix, 0) == 0) {
      const std::string params = name.substr(prefix.size());
      const std::size_t comma = params.find(',');
      if (comma == std::string::npos) return std::nullopt;
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const int a = std::stoi(params.substr(0, comma), &used_a);
      const std::string rest = params.substr(comma + 1);
      const int b = std::stoi(rest, &used_b);
      if (used_a != comma || used_b != rest.size()) return std::nullopt;
      return counterexample_swap_pair(base, a, b, d);
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace sorting

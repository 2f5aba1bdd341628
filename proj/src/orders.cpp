#include "sortcheck/orders.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orders {

TotalOrder TotalOrder::numeric(std::size_t n) {
  TotalOrder t{n, std::vector<std::uint8_t>(n * n, 0)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t.set(x, y, x <= y);
  }
  return t;
}

namespace {

int i(std::size_t v) { return static_cast<int>(v); }

}  // namespace

std::optional<AxiomFailure> check_reflexive(const TotalOrder& t) {
  for (std::size_t x = 0; x < t.n; ++x) {
    if (!t.le(x, x)) return AxiomFailure{"reflexivity", {i(x)}};
  }
  return std::nullopt;
}

std::optional<AxiomFailure> check_transitive(const TotalOrder& t) {
  for (std::size_t x = 0; x < t.n; ++x) {
    for (std::size_t y = 0; y < t.n; ++y) {
      for (std::size_t z = 0; z < t.n; ++z) {
        if (t.le(x, y) && t.le(y, z) && !t.le(x, z)) {
          return AxiomFailure{"transitivity", {i(x), i(y), i(z)}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<AxiomFailure> check_antisymmetric(const TotalOrder& t) {
  for (std::size_t x = 0; x < t.n; ++x) {
    for (std::size_t y = 0; y < t.n; ++y) {
      if (t.le(x, y) && t.le(y, x) && x != y) {
        return AxiomFailure{"antisymmetry", {i(x), i(y)}};
      }
    }
  }
  return std::nullopt;
}

std::optional<AxiomFailure> check_total(const TotalOrder& t) {
  for (std::size_t x = 0; x < t.n; ++x) {
    for (std::size_t y = 0; y < t.n; ++y) {
      if (!t.le(x, y) && !t.le(y, x)) {
        return AxiomFailure{"totality", {i(x), i(y)}};
      }
    }
  }
  return std::nullopt;
}

std::optional<AxiomFailure> check_total_order(const TotalOrder& t) {
  if (auto f = check_reflexive(t)) return f;
  if (auto f = check_transitive(t)) return f;
  if (auto f = check_antisymmetric(t)) return f;
  return check_total(t);
}

std::optional<AxiomFailure> check_strict_total_order(const StrictTotalOrder& s) {
  for (std::size_t x = 0; x < s.n; ++x) {
    if (s.less(x, x)) return AxiomFailure{"irreflexivity", {i(x)}};
  }
  for (std::size_t x = 0; x < s.n; ++x) {
    for (std::size_t y = 0; y < s.n; ++y) {
      for (std::size_t z = 0; z < s.n; ++z) {
        if (s.less(x, y) && s.less(y, z) && !s.less(x, z)) {
          return AxiomFailure{"transitivity", {i(x), i(y), i(z)}};
        }
      }
    }
  }
  for (std::size_t x = 0; x < s.n; ++x) {
    for (std::size_t y = 0; y < s.n; ++y) {
      if (s.less(x, y) && s.less(y, x)) {
        return AxiomFailure{"asymmetry", {i(x), i(y)}};
      }
    }
  }
  // cotransitivity: x < z implies x < y or y < z, for every y
  for (std::size_t x = 0; x < s.n; ++x) {
    for (std::size_t y = 0; y < s.n; ++y) {
      for (std::size_t z = 0; z < s.n; ++z) {
        if (s.less(x, z) && !s.less(x, y) && !s.less(y, z)) {
          return AxiomFailure{"cotransitivity", {i(x), i(y), i(z)}};
        }
      }
    }
  }
  for (std::size_t x = 0; x < s.n; ++x) {
    for (std::size_t y = 0; y < s.n; ++y) {
      if (!s.less(x, y) && !s.less(y, x) && x != y) {
        return AxiomFailure{"connectedness", {i(x), i(y)}};
      }
    }
  }
  return std::nullopt;
}

std::optional<AxiomFailure> check_meet_semilattice(const MeetSemilattice& m,
                                                   bool require_total) {
  for (int v : m.meet) {
    if (v < 0 || static_cast<std::size_t>(v) >= m.n) {
      throw std::invalid_argument("check_meet_semilattice: entry outside carrier");
    }
  }
  for (std::size_t x = 0; x < m.n; ++x) {
    if (m.op(x, x) != i(x)) return AxiomFailure{"idempotence", {i(x)}};
  }
  for (std::size_t x = 0; x < m.n; ++x) {
    for (std::size_t y = 0; y < m.n; ++y) {
      for (std::size_t z = 0; z < m.n; ++z) {
        if (m.op(m.op(x, y), z) != m.op(x, m.op(y, z))) {
          return AxiomFailure{"associativity", {i(x), i(y), i(z)}};
        }
      }
    }
  }
  for (std::size_t x = 0; x < m.n; ++x) {
    for (std::size_t y = 0; y < m.n; ++y) {
      if (m.op(x, y) != m.op(y, x)) {
        return AxiomFailure{"commutativity", {i(x), i(y)}};
      }
    }
  }
  if (require_total) {
    for (std::size_t x = 0; x < m.n; ++x) {
      for (std::size_t y = 0; y < m.n; ++y) {
        if (m.op(x, y) != i(x) && m.op(x, y) != i(y)) {
          return AxiomFailure{"totality", {i(x), i(y)}};
        }
      }
    }
  }
  return std::nullopt;
}

StrictTotalOrder total_to_strict(const TotalOrder& t) {
  StrictTotalOrder s{t.n, std::vector<std::uint8_t>(t.n * t.n, 0)};
  for (std::size_t x = 0; x < t.n; ++x) {
    for (std::size_t y = 0; y < t.n; ++y) s.set(x, y, t.le(x, y) && x != y);
  }
  return s;
}

TotalOrder strict_to_total(const StrictTotalOrder& s) {
  TotalOrder t{s.n, std::vector<std::uint8_t>(s.n * s.n, 0)};
  for (std::size_t x = 0; x < s.n; ++x) {
    for (std::size_t y = 0; y < s.n; ++y) t.set(x, y, s.less(x, y) || x == y);
  }
  return t;
}

MeetSemilattice order_to_meet(const TotalOrder& t) {
  MeetSemilattice m{t.n, std::vector<int>(t.n * t.n, 0)};
  for (std::size_t x = 0; x < t.n; ++x) {
    for (std::size_t y = 0; y < t.n; ++y) {
      m.meet[x * t.n + y] = t.le(x, y) ? i(x) : i(y);
    }
  }
  return m;
}

TotalOrder meet_to_order(const MeetSemilattice& m) {
  for (std::size_t x = 0; x < m.n; ++x) {
    for (std::size_t y = 0; y < m.n; ++y) {
      if (m.op(x, y) != i(x) && m.op(x, y) != i(y)) {
        throw std::invalid_argument("meet_to_order: meet not total at (" +
                                    std::to_string(x) + "," + std::to_string(y) +
                                    ")");
      }
    }
  }
  TotalOrder t{m.n, std::vector<std::uint8_t>(m.n * m.n, 0)};
  for (std::size_t x = 0; x < m.n; ++x) {
    for (std::size_t y = 0; y < m.n; ++y) t.set(x, y, m.op(x, y) == i(x));
  }
  return t;
}

std::vector<TotalOrder> enumerate_total_orders(std::size_t n) {
  if (n > 6) {
    throw std::invalid_argument("enumerate_total_orders: carrier too large (max 6)");
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> rank(n);
  std::vector<TotalOrder> out;
  do {
    for (std::size_t pos = 0; pos < n; ++pos) rank[perm[pos]] = pos;
    TotalOrder t{n, std::vector<std::uint8_t>(n * n, 0)};
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) t.set(x, y, rank[x] <= rank[y]);
    }
    out.push_back(std::move(t));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string order_to_text(const TotalOrder& t) {
  std::ostringstream os;
  for (std::size_t x = 0; x < t.n; ++x) {
    for (std::size_t y = 0; y < t.n; ++y) {
      if (y > 0) os << ' ';
      os << (t.le(x, y) ? '1' : '0');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace orders

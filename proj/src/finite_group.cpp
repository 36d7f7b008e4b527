#include "extcorr/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace extcorr {

CayleyTable::CayleyTable(std::size_t n, std::vector<std::uint32_t> products)
    : n_(n), prod_(std::move(products)) {
  if (prod_.size() != n_ * n_) {
    throw Error(ErrorKind::InvalidInput, "Cayley table has wrong size");
  }
  for (auto v : prod_) {
    if (v >= n_) throw Error(ErrorKind::InvalidInput, "Cayley table entry out of range");
  }
}

std::optional<std::size_t> CayleyTable::identity() const {
  for (std::size_t e = 0; e < n_; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n_ && ok; ++x) {
      ok = (*this)(e, x) == x && (*this)(x, e) == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

bool CayleyTable::is_latin_square() const {
  std::vector<char> seen(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n_; ++b) {
      if (seen[(*this)(a, b)]++) return false;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n_; ++b) {
      if (seen[(*this)(b, a)]++) return false;
    }
  }
  return true;
}

bool CayleyTable::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      if ((*this)(a, b) != (*this)(b, a)) return false;
    }
  }
  return true;
}

bool CayleyTable::associative_on(std::span<const std::size_t> generators) const {
  for (std::size_t g : generators) {
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        if ((*this)((*this)(x, y), g) != (*this)(x, (*this)(y, g))) return false;
      }
    }
  }
  return true;
}

bool CayleyTable::associative() const {
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      const std::size_t xy = (*this)(x, y);
      for (std::size_t z = 0; z < n_; ++z) {
        if ((*this)(xy, z) != (*this)(x, (*this)(y, z))) return false;
      }
    }
  }
  return true;
}

std::size_t CayleyTable::generated_size(
    std::span<const std::size_t> generators) const {
  // Closure under right multiplication; in a finite magma this is the
  // sub-magma generated by the set.
  std::vector<char> in(n_, 0);
  std::vector<std::size_t> frontier;
  for (std::size_t g : generators) {
    if (!in[g]) {
      in[g] = 1;
      frontier.push_back(g);
    }
  }
  std::size_t count = frontier.size();
  while (!frontier.empty()) {
    const std::size_t x = frontier.back();
    frontier.pop_back();
    for (std::size_t g : generators) {
      const std::size_t y = (*this)(x, g);
      if (!in[y]) {
        in[y] = 1;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  return count;
}

std::vector<std::uint64_t> CayleyTable::element_orders() const {
  const auto e = identity();
  if (!e) throw Error(ErrorKind::InvalidInput, "table has no identity");
  std::vector<std::uint64_t> orders(n_, 0);
  for (std::size_t x = 0; x < n_; ++x) {
    std::size_t p = x;
    std::uint64_t k = 1;
    while (p != *e) {
      p = (*this)(p, x);
      if (++k > n_) throw Error(ErrorKind::InvalidInput, "element of infinite order");
    }
    orders[x] = k;
  }
  return orders;
}

namespace {

std::map<Int, int> factorize(Int n) {
  std::map<Int, int> out;
  for (Int p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

// Combines prime-power cyclic factors into invariant factors.
std::vector<Int> combine_primary(const std::map<Int, std::vector<int>>& primary) {
  std::size_t width = 0;
  for (const auto& [p, exps] : primary) width = std::max(width, exps.size());
  std::vector<Int> out(width, 1);
  for (const auto& [p, exps] : primary) {
    // exps sorted descending; largest goes to the last invariant factor.
    for (std::size_t i = 0; i < exps.size(); ++i) {
      Int pk = 1;
      for (int j = 0; j < exps[i]; ++j) pk = checked::mul(pk, p);
      out[width - 1 - i] = checked::mul(out[width - 1 - i], pk);
    }
  }
  return out;
}

}  // namespace

std::vector<Int> abelian_invariants(std::span<const std::uint64_t> orders) {
  const Int n = static_cast<Int>(orders.size());
  std::map<Int, std::vector<int>> primary;
  for (const auto& [p, total] : factorize(n)) {
    // c[k] = log_p #{x : x^(p^k) = 1}; the number of cyclic p-factors of
    // order >= p^k is c[k] - c[k-1].
    std::vector<int> at_least;
    int prev = 0;
    Int pk = 1;
    for (int k = 1; prev < total && k <= total; ++k) {
      pk *= p;
      Int count = 0;
      for (auto o : orders) count += (pk % static_cast<Int>(o) == 0);
      int c = 0;
      for (Int v = count; v > 1; v /= p) ++c;
      at_least.push_back(c - prev);
      prev = c;
    }
    // at_least[k-1] = #factors with exponent >= k; convert to exponent list.
    std::vector<int> exps;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (int j = 0; j < at_least[k] - next; ++j) {
        exps.push_back(static_cast<int>(k + 1));
      }
    }
    std::sort(exps.rbegin(), exps.rend());
    primary[p] = exps;
  }
  return combine_primary(primary);
}

std::vector<Int> invariant_factors(std::span<const Int> cyclic_orders) {
  std::map<Int, std::vector<int>> primary;
  for (Int n : cyclic_orders) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "cyclic order must be >= 1");
    for (const auto& [p, k] : factorize(n)) primary[p].push_back(k);
  }
  for (auto& [p, exps] : primary) std::sort(exps.rbegin(), exps.rend());
  return combine_primary(primary);
}

std::string render_abelian(std::span<const Int> invariants) {
  if (invariants.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < invariants.size();) {
    std::size_t j = i;
    while (j < invariants.size() && invariants[j] == invariants[i]) ++j;
    const std::string cyclic = "ℤ/" + std::to_string(invariants[i]);
    if (!out.empty()) out += " × ";
    out += j - i == 1 ? cyclic
                      : "(" + cyclic + ")^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace extcorr

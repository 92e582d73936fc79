#include "qtriv/smith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qtriv {

namespace {

using Row = std::vector<BigInt>;

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Truncating division: the remainder is smaller than the pivot in absolute value.
BigInt quotient(const BigInt& x, const BigInt& p) { return x / p; }

struct Reducer {
  std::vector<Row> a;  // working copy, rows x cols
  int rows, cols;
  std::vector<Row> v, v_inv;

  Reducer(const IntMatrix& m, int c) : rows(static_cast<int>(m.size())), cols(c) {
    a.reserve(rows);
    for (const auto& r : m) {
      if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged matrix");
      bool any = std::any_of(r.begin(), r.end(), [](std::int64_t x) { return x != 0; });
      if (!any) continue;  // zero rows do not affect the column side
      a.emplace_back(r.begin(), r.end());
    }
    rows = static_cast<int>(a.size());
    v.assign(cols, Row(cols, 0));
    v_inv.assign(cols, Row(cols, 0));
    for (int i = 0; i < cols; ++i) v[i][i] = v_inv[i][i] = 1;
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
    std::swap(v_inv[i], v_inv[j]);
  }
  // col_j += q * col_i
  void add_col(int j, int i, const BigInt& q) {
    if (q == 0) return;
    for (auto& r : a)
      if (r[i] != 0) r[j] += q * r[i];
    for (auto& r : v)
      if (r[i] != 0) r[j] += q * r[i];
    for (int c = 0; c < cols; ++c)
      if (v_inv[j][c] != 0) v_inv[i][c] -= q * v_inv[j][c];
  }
  void negate_col(int i) {
    for (auto& r : a) r[i] = -r[i];
    for (auto& r : v) r[i] = -r[i];
    for (auto& x : v_inv[i]) x = -x;
  }
  void add_row(int j, int i, const BigInt& q) {
    if (q == 0) return;
    for (int c = 0; c < cols; ++c)
      if (a[i][c] != 0) a[j][c] += q * a[i][c];
  }

  // Position of the smallest nonzero |entry| in the submatrix from (t, t).
  bool find_pivot(int t, int& pr, int& pc) {
    bool found = false;
    BigInt best;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c) {
        if (a[r][c] == 0) continue;
        BigInt m = abs_big(a[r][c]);
        if (!found || m < best) {
          best = m;
          pr = r;
          pc = c;
          found = true;
          if (best == 1) return true;
        }
      }
    return found;
  }

  std::vector<BigInt> run() {
    std::vector<BigInt> diag;
    const int limit = std::min(rows, cols);
    for (int t = 0; t < limit; ++t) {
      int pr, pc;
      if (!find_pivot(t, pr, pc)) break;
      std::swap(a[t], a[pr]);
      swap_cols(t, pc);
      while (true) {
        bool clean = true;
        // Clear column t below the pivot.
        for (int r = t + 1; r < rows; ++r) {
          if (a[r][t] == 0) continue;
          BigInt q = quotient(a[r][t], a[t][t]);
          add_row(r, t, -q);
          if (a[r][t] != 0) {
            clean = false;
            if (abs_big(a[r][t]) < abs_big(a[t][t])) std::swap(a[t], a[r]);
          }
        }
        // Clear row t right of the pivot.
        for (int c = t + 1; c < cols; ++c) {
          if (a[t][c] == 0) continue;
          BigInt q = quotient(a[t][c], a[t][t]);
          add_col(c, t, -q);
          if (a[t][c] != 0) {
            clean = false;
            if (abs_big(a[t][c]) < abs_big(a[t][t])) swap_cols(t, c);
          }
        }
        if (!clean) continue;
        // Enforce divisibility of the remaining block by the pivot.
        int bad = -1;
        for (int r = t + 1; r < rows && bad < 0; ++r)
          for (int c = t + 1; c < cols; ++c)
            if (a[r][c] % a[t][t] != 0) {
              bad = r;
              break;
            }
        if (bad < 0) break;
        add_row(t, bad, 1);
      }
      if (a[t][t] < 0) negate_col(t);
      diag.push_back(a[t][t]);
    }
    return diag;
  }
};

std::int64_t to_i64_mod(const BigInt& x, std::int64_t n) {
  BigInt m = x % n;
  if (m < 0) m += n;
  return static_cast<std::int64_t>(m);
}

std::int64_t gcd_mod(const BigInt& d, std::int64_t n) {
  return std::gcd(to_i64_mod(d, n), n);  // gcd(0, n) = n
}

std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out;
  if (__builtin_mul_overflow(x, y, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, int cols) {
  Reducer red(a, cols);
  SmithForm f;
  f.rows = static_cast<int>(a.size());
  f.cols = cols;
  f.diagonal = red.run();
  f.v = std::move(red.v);
  f.v_inv = std::move(red.v_inv);
  return f;
}

SolutionModule::SolutionModule(const SmithForm& form, std::int64_t n)
    : n_(n), rank_(form.rank()), diagonal_(form.diagonal), v_inv_(form.v_inv) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  const int cols = form.cols;
  // x = V y; y_i ranges over (n / gcd(d_i, n)) Z_n for i < rank, freely otherwise.
  for (int i = 0; i < cols; ++i) {
    std::int64_t step = 1, order = n;
    if (i < rank_) {
      std::int64_t g = gcd_mod(form.diagonal[i], n);
      step = n / g;
      order = g;
    }
    if (order == 1) continue;
    std::vector<std::int64_t> gen(cols);
    for (int r = 0; r < cols; ++r) gen[r] = to_i64_mod(form.v[r][i] * step, n);
    gens_.push_back(std::move(gen));
    orders_.push_back(order);
  }
}

std::uint64_t SolutionModule::order() const {
  std::uint64_t out = 1;
  for (auto o : orders_) out = sat_mul(out, static_cast<std::uint64_t>(o));
  return out;
}

bool SolutionModule::contains(const std::vector<std::int64_t>& x) const {
  const int cols = static_cast<int>(v_inv_.size());
  if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("vector length mismatch");
  for (int i = 0; i < rank_; ++i) {
    BigInt y = 0;
    for (int c = 0; c < cols; ++c)
      if (x[c] != 0) y += v_inv_[i][c] * x[c];
    if ((diagonal_[i] * y) % n_ != 0) return false;
  }
  return true;
}

std::uint64_t count_solutions_mod(const IntMatrix& a, int cols, std::int64_t n) {
  SmithForm f = smith_normal_form(a, cols);
  std::uint64_t out = 1;
  for (int i = 0; i < cols; ++i) {
    std::int64_t g = i < f.rank() ? gcd_mod(f.diagonal[i], n) : n;
    out = sat_mul(out, static_cast<std::uint64_t>(g));
  }
  return out;
}

}  // namespace qtriv

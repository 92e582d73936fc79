#include "qtriv/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qtriv {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<int> flatten_checked(const Table& t, int n, const char* which) {
  if (static_cast<int>(t.size()) != n) {
    throw StructureError(std::string(which) + " table has " + std::to_string(t.size()) +
                         " rows, expected " + std::to_string(n));
  }
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(t[x].size()) != n) {
      throw StructureError(std::string(which) + " table row " + std::to_string(x + 1) +
                           " has " + std::to_string(t[x].size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (int y = 0; y < n; ++y) {
      int v = t[x][y];
      if (v < 0 || v >= n) {
        throw StructureError(std::string(which) + " entry (" + std::to_string(x + 1) + "," +
                             std::to_string(y + 1) + ") = " + std::to_string(v + 1) +
                             " is out of range 1.." + std::to_string(n));
      }
      flat.push_back(v);
    }
  }
  return flat;
}

// Column inverse: inv[y*n + v] = x with table[x][y] == v, or -1.
std::vector<int> column_inverse(const std::vector<int>& flat, int n) {
  std::vector<int> inv(static_cast<size_t>(n) * n, -1);
  for (int y = 0; y < n; ++y) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      int& slot = inv[y * n + flat[x * n + y]];
      if (slot >= 0) ok = false;
      slot = x;
    }
    if (!ok) std::fill(inv.begin() + y * n, inv.begin() + (y + 1) * n, -1);
  }
  return inv;
}

}  // namespace

std::string ValidationReport::describe() const {
  std::ostringstream os;
  os << (valid ? "valid" : "invalid");
  if (valid && kei) os << " (kei)";
  os << '\n';
  for (const auto& v : violations) {
    os << "  " << v.law << " fails at (";
    for (size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i] + 1;
    os << ")\n";
  }
  return os.str();
}

FiniteBiquandle::FiniteBiquandle(const Table& under, const Table& over,
                                 std::vector<std::string> labels)
    : n_(static_cast<int>(under.size())) {
  if (n_ == 0) throw StructureError("empty operation table");
  under_ = flatten_checked(under, n_, "under");
  over_ = flatten_checked(over, n_, "over");
  if (labels.empty()) labels = default_labels(n_);
  if (static_cast<int>(labels.size()) != n_) throw StructureError("label count does not match size");
  labels_ = std::move(labels);

  under_inv_ = column_inverse(under_, n_);
  over_inv_ = column_inverse(over_, n_);

  sideways_inv_.assign(static_cast<size_t>(n_) * n_, -1);
  bool bijective = true;
  for (int x = 0; x < n_ && bijective; ++x) {
    for (int y = 0; y < n_; ++y) {
      int r = this->over(y, x), t = this->under(x, y);
      int& slot = sideways_inv_[r * n_ + t];
      if (slot >= 0) {
        bijective = false;
        break;
      }
      slot = x * n_ + y;
    }
  }
  if (!bijective) std::fill(sideways_inv_.begin(), sideways_inv_.end(), -1);
}

FiniteBiquandle FiniteBiquandle::from_quandle(const Table& table,
                                              std::vector<std::string> labels) {
  int n = static_cast<int>(table.size());
  Table identity(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) std::fill(identity[x].begin(), identity[x].end(), x);
  return FiniteBiquandle(table, identity, std::move(labels));
}

bool FiniteBiquandle::over_is_trivial() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (over(x, y) != x) return false;
  return true;
}

Table FiniteBiquandle::under_table() const {
  Table t(n_, std::vector<int>(n_));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) t[x][y] = under(x, y);
  return t;
}

Table FiniteBiquandle::over_table() const {
  Table t(n_, std::vector<int>(n_));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) t[x][y] = over(x, y);
  return t;
}

// --- verification -------------------------------------------------------------

ValidationReport verify_quandle(const Table& table) {
  // Range/shape errors surface as StructureError from here.
  const FiniteBiquandle q = FiniteBiquandle::from_quandle(table);
  const int n = q.size();
  ValidationReport report;
  auto op = [&](int x, int y) { return q.under(x, y); };

  for (int x = 0; x < n; ++x) {
    std::vector<int> hits(n, 0);
    for (int z = 0; z < n; ++z) ++hits[op(z, x)];
    for (int y = 0; y < n; ++y) {
      if (hits[y] != 1) {
        report.violations.push_back({"right-invertibility", {x, y}});
        break;
      }
    }
  }
  bool dist_done = false;
  for (int x = 0; x < n && !dist_done; ++x)
    for (int y = 0; y < n && !dist_done; ++y)
      for (int z = 0; z < n && !dist_done; ++z)
        if (op(op(x, y), z) != op(op(x, z), op(y, z))) {
          report.violations.push_back({"right-distributivity", {x, y, z}});
          dist_done = true;
        }
  for (int x = 0; x < n; ++x)
    if (op(x, x) != x) {
      report.violations.push_back({"idempotency", {x}});
      break;
    }
  report.valid = report.violations.empty();

  report.kei = true;
  for (int x = 0; x < n && report.kei; ++x)
    for (int y = 0; y < n; ++y)
      if (op(op(x, y), y) != x) {
        report.kei = false;
        break;
      }
  return report;
}

ValidationReport verify_biquandle(const FiniteBiquandle& b) {
  const int n = b.size();
  ValidationReport report;
  auto U = [&](int x, int y) { return b.under(x, y); };
  auto O = [&](int x, int y) { return b.over(x, y); };

  for (int x = 0; x < n; ++x)
    if (O(x, x) != U(x, x)) {
      report.violations.push_back({"diagonal", {x}});
      break;
    }
  for (int y = 0; y < n; ++y)
    if (b.under_preimage(y, 0) < 0) {  // -1 throughout a non-bijective column
      report.violations.push_back({"under-column-bijectivity", {y}});
      break;
    }
  for (int y = 0; y < n; ++y)
    if (b.over_preimage(y, 0) < 0) {
      report.violations.push_back({"over-column-bijectivity", {y}});
      break;
    }
  {
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    bool done = false;
    for (int x = 0; x < n && !done; ++x)
      for (int y = 0; y < n && !done; ++y) {
        char& s = seen[O(y, x) * n + U(x, y)];
        if (s) {
          report.violations.push_back({"sideways-bijectivity", {x, y}});
          done = true;
        }
        s = 1;
      }
  }
  const char* names[3] = {"exchange-under", "exchange-mixed", "exchange-over"};
  bool found[3] = {false, false, false};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        bool ok[3] = {
            U(U(x, y), U(z, y)) == U(U(x, z), O(y, z)),
            U(O(x, y), O(z, y)) == O(U(x, z), U(y, z)),
            O(O(x, y), O(z, y)) == O(O(x, z), U(y, z)),
        };
        for (int law = 0; law < 3; ++law)
          if (!ok[law] && !found[law]) {
            found[law] = true;
            report.violations.push_back({names[law], {x, y, z}});
          }
      }
  report.valid = report.violations.empty();
  if (b.over_is_trivial()) {
    report.kei = true;
    for (int x = 0; x < n && report.kei; ++x)
      for (int y = 0; y < n; ++y)
        if (U(U(x, y), y) != x) {
          report.kei = false;
          break;
        }
  }
  return report;
}

// --- orbits -------------------------------------------------------------------

OrbitDecomposition orbit_decomposition(const FiniteBiquandle& b) {
  const int n = b.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      unite(x, b.under(x, y));
      unite(x, b.over(x, y));
    }

  OrbitDecomposition out;
  out.orbit_of.assign(n, -1);
  std::vector<int> id_of_root(n, -1);
  for (int x = 0; x < n; ++x) {
    int r = find(x);
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<int>(out.orbits.size());
      out.orbits.emplace_back();
    }
    out.orbit_of[x] = id_of_root[r];
    out.orbits[id_of_root[r]].push_back(x);
  }
  return out;
}

QuasiTrivialResult is_quasi_trivial(const FiniteBiquandle& b, const OrbitDecomposition& orbits) {
  const int n = b.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (orbits.same_orbit(x, y) && (b.under(x, y) != x || b.over(x, y) != x))
        return {false, std::make_pair(x, y)};
  return {};
}

QuasiTrivialResult is_quasi_trivial(const FiniteBiquandle& b) {
  return is_quasi_trivial(b, orbit_decomposition(b));
}

FiniteBiquandle restrict_to(const FiniteBiquandle& b, const std::vector<int>& elements) {
  const int m = static_cast<int>(elements.size());
  std::vector<int> pos(b.size(), -1);
  for (int i = 0; i < m; ++i) pos[elements[i]] = i;
  Table under(m, std::vector<int>(m)), over(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    labels.push_back(b.label(elements[i]));
    for (int j = 0; j < m; ++j) {
      int u = pos[b.under(elements[i], elements[j])];
      int o = pos[b.over(elements[i], elements[j])];
      if (u < 0 || o < 0) throw StructureError("subset is not closed under the operations");
      under[i][j] = u;
      over[i][j] = o;
    }
  }
  return FiniteBiquandle(under, over, std::move(labels));
}

bool is_trivial_biquandle(const FiniteBiquandle& b) {
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      if (b.under(x, y) != x || b.over(x, y) != x) return false;
  return true;
}

// --- groups -------------------------------------------------------------------

void validate_group(const GroupTable& g) {
  const int n = static_cast<int>(g.mult.size());
  if (n == 0) throw StructureError("empty Cayley table");
  for (const auto& row : g.mult) {
    if (static_cast<int>(row.size()) != n) throw StructureError("Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw StructureError("Cayley table entry out of range");
  }
  auto mul = [&](int a, int b) { return g.mult[a][b]; };
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool id = true;
    for (int x = 0; x < n && id; ++x) id = mul(a, x) == x && mul(x, a) == x;
    if (id) e = a;
  }
  if (e < 0) throw StructureError("Cayley table has no identity");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n && !has_inverse; ++b) has_inverse = mul(a, b) == e && mul(b, a) == e;
    if (!has_inverse) throw StructureError("Cayley table element without inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw StructureError("Cayley table is not associative");
}

namespace {

std::vector<int> group_inverses(const GroupTable& g) {
  const int n = static_cast<int>(g.mult.size());
  int e = 0;
  for (int a = 0; a < n; ++a)
    if (g.mult[a][a] == a) e = a;
  std::vector<int> inv(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mult[a][b] == e) inv[a] = b;
  return inv;
}

}  // namespace

GroupTable quaternion_group() {
  // Elements: 1, -1, i, -i, j, -j, k, -k encoded as (unit, sign).
  const std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // Unit product table for 1,i,j,k: result unit and sign.
  const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  GroupTable g;
  g.names = names;
  g.mult.assign(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sign_mul[ua][ub];
      g.mult[a][b] = 2 * unit_mul[ua][ub] + (sign < 0 ? 1 : 0);
    }
  return g;
}

GroupTable symmetric_group3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  GroupTable g;
  for (const auto& q : perms) g.names.push_back("[" + std::to_string(q[0] + 1) +
                                                std::to_string(q[1] + 1) +
                                                std::to_string(q[2] + 1) + "]");
  const int n = static_cast<int>(perms.size());
  g.mult.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // (a*b)(i) = a(b(i))
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      g.mult[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

// --- constructors ---------------------------------------------------------------

FiniteBiquandle make_trivial(int n) {
  if (n < 1) throw StructureError("trivial quandle needs n >= 1");
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) std::fill(t[x].begin(), t[x].end(), x);
  return FiniteBiquandle::from_quandle(t);
}

FiniteBiquandle make_dihedral(int n) {
  if (n < 1) throw StructureError("dihedral quandle needs n >= 1");
  Table t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    labels.push_back(std::to_string(x));
    for (int y = 0; y < n; ++y) t[x][y] = (((2 * y - x) % n) + n) % n;
  }
  return FiniteBiquandle::from_quandle(t, labels);
}

FiniteBiquandle make_conj(const GroupTable& g) {
  validate_group(g);
  const auto inv = group_inverses(g);
  const int n = static_cast<int>(g.mult.size());
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = g.mult[g.mult[inv[y]][x]][y];
  return FiniteBiquandle::from_quandle(t, g.names);
}

FiniteBiquandle make_core(const GroupTable& g) {
  validate_group(g);
  const auto inv = group_inverses(g);
  const int n = static_cast<int>(g.mult.size());
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = g.mult[g.mult[y][inv[x]]][y];
  return FiniteBiquandle::from_quandle(t, g.names);
}

FiniteBiquandle make_alexander_quandle_mod(int k) {
  if (k < 1) throw StructureError("Alexander quandle modulus must be >= 1");
  const int n = k * k;
  Table t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      labels.push_back(std::to_string(a) + "+" + std::to_string(b) + "(1-t)");
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          int nb = (((b - a + c) % k) + k) % k;
          t[a * k + b][c * k + d] = a * k + nb;
        }
    }
  return FiniteBiquandle::from_quandle(t, labels);
}

FiniteBiquandle make_alexander_biquandle(int m, int t, int s) {
  if (m < 1) throw StructureError("Alexander biquandle modulus must be >= 1");
  auto unit = [m](int v) { return std::gcd(((v % m) + m) % m, m) == 1; };
  if (!unit(t) || !unit(s)) throw StructureError("t and s must be units modulo m");
  auto residue = [m](int index) { return (index + 1) % m; };
  auto index = [m](long long r) { return static_cast<int>((((r - 1) % m) + m) % m); };
  Table under(m, std::vector<int>(m)), over(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    labels.push_back(std::to_string(residue(i)));
    for (int j = 0; j < m; ++j) {
      long long x = residue(i), y = residue(j);
      under[i][j] = index(static_cast<long long>(t) * x + static_cast<long long>(s - t) * y);
      over[i][j] = index(static_cast<long long>(s) * x);
    }
  }
  return FiniteBiquandle(under, over, labels);
}

FiniteBiquandle make_constant_action(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<char> seen(n, 0);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v]) throw StructureError("constant action needs a permutation");
    seen[v] = 1;
  }
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) std::fill(t[x].begin(), t[x].end(), sigma[x]);
  return FiniteBiquandle(t, t);
}

// --- text format ----------------------------------------------------------------

FiniteBiquandle parse_operation_table(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n < 1) throw StructureError("operation table: missing or invalid size line");
  std::vector<long long> values;
  long long v;
  while (in >> v) values.push_back(v);
  if (!in.eof()) throw StructureError("operation table: non-numeric entry");
  const size_t cells = static_cast<size_t>(n * n);
  bool biquandle;
  if (values.size() == cells) biquandle = false;
  else if (values.size() == 2 * cells) biquandle = true;
  else
    throw StructureError("operation table: expected " + std::to_string(cells) + " or " +
                         std::to_string(2 * cells) + " entries, got " +
                         std::to_string(values.size()));
  const int width = biquandle ? 2 * static_cast<int>(n) : static_cast<int>(n);
  Table under(n, std::vector<int>(n)), over(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int c = 0; c < width; ++c) {
      long long e = values[static_cast<size_t>(x) * width + c];
      if (e < 1 || e > n)
        throw StructureError("operation table: entry (" + std::to_string(x + 1) + "," +
                             std::to_string(c + 1) + ") = " + std::to_string(e) +
                             " out of range 1.." + std::to_string(n));
      if (c < n) under[x][c] = static_cast<int>(e - 1);
      else over[x][c - n] = static_cast<int>(e - 1);
    }
  if (!biquandle) return FiniteBiquandle::from_quandle(under);
  return FiniteBiquandle(under, over);
}

std::string write_operation_table(const FiniteBiquandle& b) {
  const int n = b.size();
  const bool quandle = b.over_is_trivial();
  std::ostringstream os;
  os << n << '\n';
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) os << (y ? " " : "") << b.under(x, y) + 1;
    if (!quandle)
      for (int y = 0; y < n; ++y) os << ' ' << b.over(x, y) + 1;
    os << '\n';
  }
  return os.str();
}

}  // namespace qtriv

#include "qtriv/cohomology.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "qtriv/links.hpp"

namespace qtriv {

Chain boundary(const FiniteBiquandle& b, const Tuple& x) {
  Chain out;
  const int n = static_cast<int>(x.size());
  for (int k = 0; k < n; ++k) {
    long long sign = (k + 1) % 2 == 0 ? 1 : -1;  // (-1)^k with k 1-based
    Tuple face0, face1;
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      face0.push_back(x[i]);
      face1.push_back(i < k ? b.under(x[i], x[k]) : b.over(x[i], x[k]));
    }
    out[face0] += sign;
    out[face1] -= sign;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Chain boundary(const FiniteBiquandle& b, const Chain& c) {
  Chain out;
  for (const auto& [t, coef] : c)
    for (const auto& [u, e] : boundary(b, t)) out[u] += coef * e;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// --- Cochain2 -------------------------------------------------------------------

Cochain2::Cochain2(int size, std::int64_t modulus)
    : size_(size), n_(modulus), coeff_(static_cast<size_t>(size) * size, 0) {
  if (size < 1) throw std::invalid_argument("cochain needs a nonempty structure");
  if (modulus < 2) throw std::invalid_argument("cochain modulus must be at least 2");
}

void Cochain2::set(int x, int y, std::int64_t c) {
  if (x < 0 || y < 0 || x >= size_ || y >= size_) throw std::out_of_range("cochain index");
  c %= n_;
  if (c < 0) c += n_;
  coeff_[x * size_ + y] = c;
}

bool Cochain2::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t Cochain2::evaluate(const Chain& c) const {
  std::int64_t s = 0;
  for (const auto& [t, coef] : c) {
    if (t.size() != 2) throw std::invalid_argument("2-cochain evaluated on a chain of other degree");
    s = (s + (coef % n_) * (*this)(t[0], t[1])) % n_;
  }
  return s < 0 ? s + n_ : s;
}

std::string format_cochain(const Cochain2& phi) {
  std::ostringstream os;
  os << phi.modulus() << ';';
  for (int x = 0; x < phi.size(); ++x)
    for (int y = 0; y < phi.size(); ++y)
      if (phi(x, y) != 0) os << " (" << x + 1 << ',' << y + 1 << ")=" << phi(x, y) << ';';
  return os.str();
}

std::string format_chi(const Cochain2& phi) {
  std::ostringstream os;
  bool first = true;
  for (int x = 0; x < phi.size(); ++x)
    for (int y = 0; y < phi.size(); ++y) {
      std::int64_t c = phi(x, y);
      if (c == 0) continue;
      os << (first ? "" : "+");
      if (c != 1) os << c;
      os << "χ(" << x + 1 << ',' << y + 1 << ')';
      first = false;
    }
  return first ? "0" : os.str();
}

Cochain2 parse_cochain(const std::string& text, int size) {
  size_t semi = text.find(';');
  std::string head = text.substr(0, semi);
  size_t used = 0;
  long long n = 0;
  try {
    n = std::stoll(head, &used);
  } catch (const std::exception&) {
    throw ParseError("expected modulus", 0);
  }
  if (head.find_first_not_of(" \t\r\n", used) != std::string::npos)
    throw ParseError("unexpected text after modulus", used);
  if (n < 2) throw ParseError("modulus must be at least 2", 0);
  Cochain2 phi(size, n);
  if (semi == std::string::npos) return phi;
  size_t pos = semi + 1;
  while (pos < text.size()) {
    size_t end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(pos, end - pos);
    if (item.find_first_not_of(" \t\r\n") != std::string::npos) {
      int x, y;
      long long c;
      char tail;
      if (std::sscanf(item.c_str(), " ( %d , %d ) = %lld %c", &x, &y, &c, &tail) != 3)
        throw ParseError("expected (x,y)=c", pos);
      if (x < 1 || y < 1 || x > size || y > size) throw ParseError("element out of range", pos);
      phi.add(x - 1, y - 1, c);
    }
    pos = end + 1;
  }
  return phi;
}

// --- cocycle tests ----------------------------------------------------------------

CocycleCheck is_cocycle2(const Cochain2& phi, const FiniteBiquandle& b) {
  if (phi.size() != b.size()) throw std::invalid_argument("cochain size does not match structure");
  const int n = b.size();
  const std::int64_t m = phi.modulus();
  auto U = [&](int x, int y) { return b.under(x, y); };
  auto O = [&](int x, int y) { return b.over(x, y); };
  CocycleCheck out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        std::int64_t v = -phi(y, z) + phi(O(y, x), O(z, x)) + phi(x, z) - phi(U(x, y), O(z, y)) -
                         phi(x, y) + phi(U(x, z), U(y, z));
        v %= m;
        bool zero = v == 0;
        bool zero_by_chain = phi.evaluate(boundary(b, Tuple{x, y, z})) == 0;
        if (zero != zero_by_chain) throw std::logic_error("cocycle expansion disagrees with ∂_3");
        if (!zero && out.cocycle) {
          out.cocycle = false;
          out.witness = std::array<int, 3>{x, y, z};
        }
      }
  return out;
}

bool is_quasi_trivial_cochain(const Cochain2& phi, const FiniteBiquandle& b) {
  OrbitDecomposition orb = orbit_decomposition(b);
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      if (orb.same_orbit(x, y) && phi(x, y) != 0) return false;
  return true;
}

Cochain2 coboundary1(const std::vector<std::int64_t>& g, const FiniteBiquandle& b,
                     std::int64_t modulus) {
  if (static_cast<int>(g.size()) != b.size()) throw std::invalid_argument("1-cochain size mismatch");
  Cochain2 out(b.size(), modulus);
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y) {
      std::int64_t v = 0;
      for (const auto& [t, c] : boundary(b, Tuple{x, y})) v += c * g[t[0]];
      out.set(x, y, v);
    }
  return out;
}

// --- search -----------------------------------------------------------------------

namespace {

using Vec = std::vector<std::int64_t>;

// Closure of `gens` under addition mod n; nullopt beyond `cap` elements.
std::optional<std::set<Vec>> span(const std::vector<Vec>& gens, size_t dim, std::int64_t n,
                                  std::uint64_t cap) {
  std::set<Vec> seen{Vec(dim, 0)};
  std::vector<Vec> frontier{Vec(dim, 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        Vec w(dim);
        for (size_t i = 0; i < dim; ++i) w[i] = (v[i] + g[i]) % n;
        if (seen.insert(w).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(std::move(w));
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

bool CocycleSearchResult::contains(const Cochain2& phi) const {
  if (!module || phi.modulus() != modulus) return false;
  std::vector<bool> allowed(phi.coefficients().size(), false);
  Vec x;
  for (auto [a, c] : variables) {
    allowed[a * phi.size() + c] = true;
    x.push_back(phi(a, c));
  }
  for (size_t i = 0; i < allowed.size(); ++i)
    if (!allowed[i] && phi.coefficients()[i] != 0) return false;
  return module->contains(x);
}

CocycleSearchResult search_cocycles2(const FiniteBiquandle& b, std::int64_t modulus,
                                     const SearchOptions& options) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  const int n = b.size();
  CocycleSearchResult res;
  res.modulus = modulus;
  OrbitDecomposition orb = orbit_decomposition(b);
  std::vector<int> var_of(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool keep = options.quasi_trivial ? !orb.same_orbit(x, y) : x != y;
      if (!keep) continue;
      var_of[x * n + y] = static_cast<int>(res.variables.size());
      res.variables.push_back({x, y});
    }
  const int cols = static_cast<int>(res.variables.size());
  if (cols > options.variable_cap)
    throw ResourceError(std::to_string(cols) + " unknowns exceed the cap of " +
                        std::to_string(options.variable_cap));

  std::set<Vec> rows;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec r(cols, 0);
        bool any = false;
        for (const auto& [t, c] : boundary(b, Tuple{x, y, z})) {
          int v = var_of[t[0] * n + t[1]];
          if (v < 0) continue;
          r[v] += c;
          any = true;
        }
        if (any && std::any_of(r.begin(), r.end(), [](std::int64_t c) { return c != 0; }))
          rows.insert(std::move(r));
      }
  IntMatrix a(rows.begin(), rows.end());
  res.module.emplace(smith_normal_form(a, cols), modulus);

  auto to_cochain = [&](const Vec& v) {
    Cochain2 phi(n, modulus);
    for (int i = 0; i < cols; ++i) phi.set(res.variables[i].first, res.variables[i].second, v[i]);
    return phi;
  };
  for (const auto& g : res.module->generators()) res.generators.push_back(to_cochain(g));
  res.orders = res.module->orders();
  res.group_order = res.module->order();

  if (res.group_order > options.enumerate_cap) return res;
  auto all = span(res.module->generators(), cols, modulus, options.enumerate_cap);
  if (!all) return res;

  if (!options.mod_coboundaries) {
    for (const auto& v : *all) res.elements.push_back(to_cochain(v));
    res.enumerated = true;
    return res;
  }

  // Coboundaries δχ_x of the 1-cochain basis, kept when they lie in the support.
  std::vector<Vec> cob;
  for (int x = 0; x < n; ++x) {
    std::vector<std::int64_t> g(n, 0);
    g[x] = 1;
    Cochain2 d = coboundary1(g, b, modulus);
    Vec v(cols);
    bool inside = true;
    for (int a2 = 0; a2 < n && inside; ++a2)
      for (int c = 0; c < n; ++c) {
        int idx = var_of[a2 * n + c];
        if (idx >= 0) v[idx] = d(a2, c);
        else if (d(a2, c) != 0) inside = false;
      }
    if (inside) cob.push_back(std::move(v));
  }
  auto bset = span(cob, cols, modulus, options.enumerate_cap);
  if (!bset) return res;
  std::set<Vec> covered;
  for (const auto& v : *all) {
    if (covered.count(v)) continue;
    res.elements.push_back(to_cochain(v));
    for (const auto& w : *bset) {
      Vec s(cols);
      for (int i = 0; i < cols; ++i) s[i] = (v[i] + w[i]) % modulus;
      covered.insert(std::move(s));
    }
  }
  res.enumerated = true;
  return res;
}

}  // namespace qtriv

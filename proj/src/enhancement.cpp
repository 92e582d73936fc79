#include "qtriv/enhancement.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qtriv {

InvariantPolynomial::InvariantPolynomial(std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  counts_.assign(static_cast<size_t>(modulus), 0);
}

void InvariantPolynomial::add(std::int64_t exponent, std::uint64_t multiplicity) {
  std::int64_t n = modulus();
  exponent %= n;
  if (exponent < 0) exponent += n;
  counts_[exponent] += multiplicity;
}

std::uint64_t InvariantPolynomial::total() const {
  std::uint64_t s = 0;
  for (auto c : counts_) s += c;
  return s;
}

std::string InvariantPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::int64_t b = modulus() - 1; b >= 0; --b) {
    std::uint64_t c = counts_[b];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (b == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'u';
    if (b != 1) os << '^' << b;
  }
  return first ? "0" : os.str();
}

std::string InvariantPolynomial::to_pairs() const {
  std::ostringstream os;
  bool first = true;
  for (std::int64_t b = 0; b < modulus(); ++b) {
    if (counts_[b] == 0) continue;
    os << (first ? "" : " ") << b << ':' << counts_[b];
    first = false;
  }
  return os.str();
}

std::int64_t boltzmann_weight(const LinkDiagram& d, const std::vector<int>& f, const Cochain2& phi) {
  const std::int64_t n = phi.modulus();
  std::int64_t w = 0;
  for (const auto& x : d.crossings()) {
    SidewaysForm s = sideways_form(x);
    w += x.sign * phi(f[s.p], f[s.q]);
  }
  w %= n;
  return w < 0 ? w + n : w;
}

InvariantPolynomial cocycle_invariant(const LinkDiagram& d, const FiniteBiquandle& b,
                                      const Cochain2& phi) {
  if (phi.size() != b.size()) throw std::invalid_argument("cochain size does not match structure");
  InvariantPolynomial poly(phi.modulus());
  const bool check = is_quasi_trivial(b).quasi_trivial && is_quasi_trivial_cochain(phi, b);
  std::vector<SidewaysForm> self;
  if (check)
    for (int c : d.self_crossings()) self.push_back(sideways_form(d.crossings()[c]));

  std::uint64_t per = 1;
  for (int i = 0; i < d.free_loops(); ++i) per *= static_cast<std::uint64_t>(b.size());
  for_each_semiarc_coloring(d, b, [&](const std::vector<int>& f) {
    for (const auto& s : self)
      if (phi(f[s.p], f[s.q]) != 0)
        throw std::logic_error("single-component crossing contributes a nonzero weight");
    poly.add(boltzmann_weight(d, f, phi), per);
    return true;
  });
  return poly;
}

std::vector<InvariantPolynomial> cocycle_invariant_orientations(const LinkDiagram& d,
                                                                const FiniteBiquandle& b,
                                                                const Cochain2& phi) {
  std::vector<InvariantPolynomial> out;
  for (const auto& v : enumerate_orientations(d)) out.push_back(cocycle_invariant(v, b, phi));
  return out;
}

std::string InvariantTable::to_text() const {
  std::vector<size_t> width(columns.size() + 1, 0);
  width[0] = 4;
  for (const auto& r : rows) width[0] = std::max(width[0], r.size());
  for (size_t j = 0; j < columns.size(); ++j) {
    width[j + 1] = columns[j].size();
    for (const auto& row : cells) width[j + 1] = std::max(width[j + 1], row[j].to_string().size());
  }
  if (!columns.empty()) width.back() = 0;  // no padding after the last column
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width[0])) << "link";
  for (size_t j = 0; j < columns.size(); ++j)
    os << "  " << std::setw(static_cast<int>(width[j + 1])) << columns[j];
  os << '\n';
  for (size_t i = 0; i < rows.size(); ++i) {
    os << std::setw(static_cast<int>(width[0])) << rows[i];
    for (size_t j = 0; j < columns.size(); ++j)
      os << "  " << std::setw(static_cast<int>(width[j + 1])) << cells[i][j].to_string();
    os << '\n';
  }
  return os.str();
}

std::string InvariantTable::to_csv() const {
  std::ostringstream os;
  os << "link,cocycle,polynomial,pairs\n";
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < columns.size(); ++j)
      os << rows[i] << ',' << columns[j] << ',' << cells[i][j].to_string() << ','
         << cells[i][j].to_pairs() << '\n';
  return os.str();
}

InvariantTable invariant_table(const std::vector<NamedDiagram>& links, const FiniteBiquandle& b,
                               const std::vector<NamedCochain>& cocycles) {
  InvariantTable t;
  for (const auto& c : cocycles) t.columns.push_back(c.name);
  for (const auto& l : links) {
    t.rows.push_back(l.name);
    std::vector<InvariantPolynomial> row;
    for (const auto& c : cocycles) row.push_back(cocycle_invariant(l.diagram, b, c.phi));
    t.cells.push_back(std::move(row));
  }
  return t;
}

}  // namespace qtriv

#pragma once

// Boltzmann weights and the cocycle enhancement of the coloring count.
//
// The weight of a coloring is Σ_c sign(c) φ(f(p_c), f(q_c)) mod n, where
// (p_c, q_c) are the inputs of the sideways form of crossing c (see coloring.hpp).

#include <cstdint>
#include <string>
#include <vector>

#include "qtriv/cohomology.hpp"
#include "qtriv/coloring.hpp"

namespace qtriv {

class InvariantPolynomial {
 public:
  explicit InvariantPolynomial(std::int64_t modulus = 2);

  std::int64_t modulus() const { return static_cast<std::int64_t>(counts_.size()); }
  std::uint64_t coefficient(std::int64_t exponent) const { return counts_.at(exponent); }
  void add(std::int64_t exponent, std::uint64_t multiplicity = 1);
  // u = 1: the number of colorings.
  std::uint64_t total() const;

  // Descending exponents, "c u^b", u^1 as u, constant last, e.g. "6u^2+36u+29".
  std::string to_string() const;
  // "b:c" pairs in ascending exponent, separated by spaces.
  std::string to_pairs() const;
  bool operator==(const InvariantPolynomial&) const = default;

 private:
  std::vector<std::uint64_t> counts_;
};

std::int64_t boltzmann_weight(const LinkDiagram& d, const std::vector<int>& color_of,
                              const Cochain2& phi);

// Multiset of weights over all colorings.  When both `b` and `phi` are
// quasi-trivial, every crossing between strands of one component is checked to
// contribute zero (std::logic_error otherwise).
InvariantPolynomial cocycle_invariant(const LinkDiagram& d, const FiniteBiquandle& b,
                                      const Cochain2& phi);

// One polynomial per orientation from enumerate_orientations.
std::vector<InvariantPolynomial> cocycle_invariant_orientations(const LinkDiagram& d,
                                                                const FiniteBiquandle& b,
                                                                const Cochain2& phi);

struct NamedDiagram {
  std::string name;
  LinkDiagram diagram;
};
struct NamedCochain {
  std::string name;
  Cochain2 phi;
};

struct InvariantTable {
  std::vector<std::string> rows;     // link names
  std::vector<std::string> columns;  // cocycle names
  std::vector<std::vector<InvariantPolynomial>> cells;

  std::string to_text() const;
  // link,cocycle,polynomial,pairs
  std::string to_csv() const;
};

InvariantTable invariant_table(const std::vector<NamedDiagram>& links, const FiniteBiquandle& b,
                               const std::vector<NamedCochain>& cocycles);

}  // namespace qtriv

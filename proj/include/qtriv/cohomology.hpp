#pragma once

// Low-degree birack chains and 2-cochains with coefficients in Z_n.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtriv/algebra.hpp"
#include "qtriv/smith.hpp"

namespace qtriv {

using Tuple = std::vector<int>;
using Chain = std::map<Tuple, long long>;  // zero coefficients are dropped

// ∂_n = Σ_k (-1)^k [∂^{0,k} - ∂^{1,k}], where ∂^{0,k} deletes x_k and
// ∂^{1,k} acts on the others by x_k: under on the left, over on the right.
Chain boundary(const FiniteBiquandle& b, const Tuple& x);
Chain boundary(const FiniteBiquandle& b, const Chain& c);

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Cochain2 {
 public:
  Cochain2(int size, std::int64_t modulus);

  int size() const { return size_; }
  std::int64_t modulus() const { return n_; }
  std::int64_t operator()(int x, int y) const { return coeff_[x * size_ + y]; }
  void set(int x, int y, std::int64_t c);
  void add(int x, int y, std::int64_t c) { set(x, y, (*this)(x, y) + c); }
  const std::vector<std::int64_t>& coefficients() const { return coeff_; }

  bool is_zero() const;
  std::int64_t evaluate(const Chain& c) const;  // mod n, in 0..n-1
  bool operator==(const Cochain2&) const = default;
  bool operator<(const Cochain2& o) const { return coeff_ < o.coeff_; }

 private:
  int size_;
  std::int64_t n_;
  std::vector<std::int64_t> coeff_;
};

// "n; (x,y)=c; ..." with nonzero coefficients, 1-based elements.
std::string format_cochain(const Cochain2& phi);
Cochain2 parse_cochain(const std::string& text, int size);
// The sum Σ c χ_{(x,y)} as it is usually written, e.g. "2χ(2,4)+χ(5,2)".
std::string format_chi(const Cochain2& phi);

struct CocycleCheck {
  bool cocycle = true;
  std::optional<std::array<int, 3>> witness;  // first failing triple
};

// Both the expanded condition and φ∘∂_3 are evaluated; a disagreement throws
// std::logic_error.
CocycleCheck is_cocycle2(const Cochain2& phi, const FiniteBiquandle& b);
bool is_quasi_trivial_cochain(const Cochain2& phi, const FiniteBiquandle& b);
// δ g for a 1-cochain g: (δg)(x, y) = g(∂_2(x, y)).
Cochain2 coboundary1(const std::vector<std::int64_t>& g, const FiniteBiquandle& b,
                     std::int64_t modulus);

struct SearchOptions {
  bool quasi_trivial = true;
  bool mod_coboundaries = false;
  // Enumerate every element when the solution group has at most this many.
  std::uint64_t enumerate_cap = 1u << 16;
  // Refuse systems with more unknowns than this.
  int variable_cap = 400;
};

struct CocycleSearchResult {
  std::int64_t modulus = 0;
  // Cochain support allowed by the options, as (x, y) pairs.
  std::vector<std::pair<int, int>> variables;
  // Generators of the cocycle group and their orders.
  std::vector<Cochain2> generators;
  std::vector<std::int64_t> orders;
  std::uint64_t group_order = 1;
  // All cocycles (or one per coboundary class with mod_coboundaries), in
  // lexicographic order of coefficient vectors; empty if over the cap.
  std::vector<Cochain2> elements;
  bool enumerated = false;
  // Membership test on the full cocycle group.
  bool contains(const Cochain2& phi) const;

  std::optional<SolutionModule> module;
};

CocycleSearchResult search_cocycles2(const FiniteBiquandle& b, std::int64_t modulus,
                                     const SearchOptions& options = {});

}  // namespace qtriv

#pragma once

// Smith normal form of integer matrices and solution modules of A x = 0 over Z_n.

#include <cstdint>
#include <vector>

#include "qtriv/ring.hpp"

namespace qtriv {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct SmithForm {
  int rows = 0;
  int cols = 0;
  // Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  std::vector<BigInt> diagonal;
  // Unimodular V (cols x cols) with U A V = diag for some unimodular U, and V^{-1}.
  std::vector<std::vector<BigInt>> v;
  std::vector<std::vector<BigInt>> v_inv;

  int rank() const { return static_cast<int>(diagonal.size()); }
};

SmithForm smith_normal_form(const IntMatrix& a, int cols);

// Solutions of A x ≡ 0 (mod n) for the matrix the form was computed from.
class SolutionModule {
 public:
  SolutionModule(const SmithForm& form, std::int64_t n);

  std::int64_t modulus() const { return n_; }
  // Generators in x-coordinates; generator i has additive order orders()[i].
  const std::vector<std::vector<std::int64_t>>& generators() const { return gens_; }
  const std::vector<std::int64_t>& orders() const { return orders_; }
  // Group order; saturates at UINT64_MAX.
  std::uint64_t order() const;
  bool contains(const std::vector<std::int64_t>& x) const;

 private:
  std::int64_t n_;
  int rank_;
  std::vector<BigInt> diagonal_;
  std::vector<std::vector<BigInt>> v_inv_;
  std::vector<std::vector<std::int64_t>> gens_;
  std::vector<std::int64_t> orders_;
};

// Number of solutions of A x ≡ 0 (mod n); saturates at UINT64_MAX.
std::uint64_t count_solutions_mod(const IntMatrix& a, int cols, std::int64_t n);

}  // namespace qtriv

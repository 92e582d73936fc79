#pragma once

// Finite quandles and biquandles stored as operation tables.
//
// Elements are 0-based indices internally; text I/O is 1-based so that files
// read the same as the usual block matrices [under | over].  A quandle is a
// biquandle whose over-operation is the identity (x over y == x).

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtriv {

/// A table entry is out of range or the table is not square.  Distinct from an
/// axiom violation, which is reported through ValidationReport.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Table = std::vector<std::vector<int>>;

struct Violation {
  std::string law;
  std::vector<int> witness;  // elements, 0-based
};

struct ValidationReport {
  bool valid = true;
  bool kei = false;  // only meaningful for quandles
  std::vector<Violation> violations;

  // Human-readable lines, 1-based witnesses.
  std::string describe() const;
};

class FiniteBiquandle {
 public:
  // under[x][y] = x ⊳̲ y, over[x][y] = x ⊳̄ y.  Throws StructureError on shape
  // or range problems; axioms are checked separately by verify_biquandle.
  FiniteBiquandle(const Table& under, const Table& over,
                  std::vector<std::string> labels = {});

  static FiniteBiquandle from_quandle(const Table& table,
                                      std::vector<std::string> labels = {});

  int size() const { return n_; }
  int under(int x, int y) const { return under_[x * n_ + y]; }
  int over(int x, int y) const { return over_[x * n_ + y]; }

  // Inverses of the column maps beta_y = (. ⊳̲ y) and alpha_y = (. ⊳̄ y).
  // Return -1 when the column is not a bijection.
  int under_preimage(int y, int value) const { return under_inv_[y * n_ + value]; }
  int over_preimage(int y, int value) const { return over_inv_[y * n_ + value]; }
  // Inverse of S(x, y) = (y ⊳̄ x, x ⊳̲ y); {-1, -1} if S is not bijective.
  std::pair<int, int> sideways_preimage(int r, int t) const {
    int code = sideways_inv_[r * n_ + t];
    if (code < 0) return {-1, -1};
    return {code / n_, code % n_};
  }

  bool over_is_trivial() const;  // true for quandles
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  Table under_table() const;
  Table over_table() const;

  bool operator==(const FiniteBiquandle& other) const {
    return n_ == other.n_ && under_ == other.under_ && over_ == other.over_;
  }

 private:
  int n_;
  std::vector<int> under_;
  std::vector<int> over_;
  std::vector<int> under_inv_;
  std::vector<int> over_inv_;
  std::vector<int> sideways_inv_;
  std::vector<std::string> labels_;
};

struct OrbitDecomposition {
  std::vector<int> orbit_of;
  std::vector<std::vector<int>> orbits;

  bool same_orbit(int x, int y) const { return orbit_of[x] == orbit_of[y]; }
};

struct QuasiTrivialResult {
  bool quasi_trivial = true;
  std::optional<std::pair<int, int>> witness;  // same-orbit pair acting nontrivially
};

ValidationReport verify_quandle(const Table& table);
ValidationReport verify_biquandle(const FiniteBiquandle& b);

OrbitDecomposition orbit_decomposition(const FiniteBiquandle& b);
QuasiTrivialResult is_quasi_trivial(const FiniteBiquandle& b);
QuasiTrivialResult is_quasi_trivial(const FiniteBiquandle& b,
                                    const OrbitDecomposition& orbits);

// Restriction of both operations to `elements`; throws StructureError if the
// subset is not closed.  Elements of the result follow the order given.
FiniteBiquandle restrict_to(const FiniteBiquandle& b, const std::vector<int>& elements);

bool is_trivial_biquandle(const FiniteBiquandle& b);

// --- constructors -----------------------------------------------------------

// Finite group given by its Cayley table (mult[a][b] = a*b), with names.
struct GroupTable {
  Table mult;
  std::vector<std::string> names;
};

GroupTable quaternion_group();
GroupTable symmetric_group3();
// Throws StructureError unless `g` is a group.
void validate_group(const GroupTable& g);

FiniteBiquandle make_trivial(int n);
FiniteBiquandle make_dihedral(int n);
FiniteBiquandle make_conj(const GroupTable& g);
FiniteBiquandle make_core(const GroupTable& g);
// Z_k[t^{±1}]/(1-t)^2 with x ⊳ y = tx + (1-t)y.  Element a + b(1-t) has index
// a*k + b.
FiniteBiquandle make_alexander_quandle_mod(int k);
// Z_m with x ⊳̲ y = tx + (s-t)y, x ⊳̄ y = sx; t, s units.  Index i (0-based)
// holds residue (i+1) mod m, so the last element is zero, as in the usual
// 1-based matrices.
FiniteBiquandle make_alexander_biquandle(int m, int t, int s);
FiniteBiquandle make_constant_action(const std::vector<int>& sigma);

// --- operation-table text format ----------------------------------------------

// First line n, then n rows of n (quandle) or 2n (biquandle) 1-based entries.
FiniteBiquandle parse_operation_table(const std::string& text);
std::string write_operation_table(const FiniteBiquandle& b);

}  // namespace qtriv

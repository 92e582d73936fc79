#pragma once

// Pretzel links up to link-homotopy.
//
// A twist box of j full twists acts on a pair of colors by B^j, an odd box of
// 2k+1 half twists by A^{2k+1}, where A = [[0, 1], [t, 1-t]] and B = A^2 over
// Z_k[t^{±1}]/(1-t)^2.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtriv/links.hpp"
#include "qtriv/ring.hpp"

namespace qtriv {

template <class Int>
TwistMatrix<Int> matrix_a(const PairRing<Int>& r) {
  return {{{r.zero(), r.one()}, {r.t(), r.s()}}};
}

// B^j = [[jt-j+1, j-jt], [j-jt, jt-j+1]].
template <class Int>
TwistMatrix<Int> twist_power(const Int& j, const PairRing<Int>& r) {
  auto diag = r.make(1, -j), off = r.make(0, j);
  return {{{diag, off}, {off, diag}}};
}

// A^{2k+1} = [[k-kt, 1-k+kt], [t-k+kt, 1-kt+k-t]]; valid for negative k too.
template <class Int>
TwistMatrix<Int> odd_twist_power(const Int& k, const PairRing<Int>& r) {
  return {{{r.make(0, k), r.make(1, -k)}, {r.make(1, -k - 1), r.make(0, k + 1)}}};
}

inline TwistMatrix<std::int64_t> twist_power(std::int64_t j, long k) {
  return twist_power<std::int64_t>(j, PairRing<std::int64_t>(k));
}

enum class Verdict { kKnotTrivial, kTrivialLink, kNontrivial };
std::string to_string(Verdict v);

struct HomotopyClass {
  Verdict verdict = Verdict::kNontrivial;
  std::string reason;   // branch label of the decision tree, e.g. "2(c)ii"
  int components = 0;   // N
  int even_count = 0;   // E
};

// Number of components of the pretzel link: N = (3 + (-1)^n) / 2 when all
// twists are odd, otherwise the number of even twists.
int pretzel_component_count(const PretzelSpec& p);

// Throws std::invalid_argument for n = 0.
HomotopyClass classify(const PretzelSpec& p);
bool in_kernel_of_q(const PretzelSpec& p);
// The membership conditions stated case by case, independent of classify.
bool kernel_case_list(const PretzelSpec& p);

struct Certificate {
  int modulus = 0;                  // colors by make_alexander_quandle_mod(modulus)
  std::uint64_t pretzel_count = 0;
  std::uint64_t unlink_count = 0;   // (modulus^2)^N
};

// Moduli tried by distinguishing_certificate, in order.
std::vector<int> certificate_schedule(const PretzelSpec& p, int cap = 16);

// Requires classify(p) to be NONTRIVIAL with at least two components
// (std::invalid_argument otherwise).  nullopt means the schedule ran out.
std::optional<Certificate> distinguishing_certificate(const PretzelSpec& p, int cap = 16);

}  // namespace qtriv

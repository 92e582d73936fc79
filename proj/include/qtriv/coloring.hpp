#pragma once

// Biquandle colorings of link diagrams.
//
// Crossing rule.  Draw both strands upward.  The sideways map
// S(x, y) = (y ⊳̄ x, x ⊳̲ y) carries the colors on the two right-hand semiarcs
// (under, over) to the two left-hand ones (over, under):
//   positive crossing: S(under-in, over-out) = (over-in, under-out)
//   negative crossing: S(under-out, over-in) = (over-out, under-in)
// For a quandle this is under-out = under-in ⊳ over at either sign.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qtriv/algebra.hpp"
#include "qtriv/links.hpp"
#include "qtriv/ring.hpp"

namespace qtriv {

struct Coloring {
  std::vector<int> color_of;     // per semiarc
  std::vector<int> loop_colors;  // per free loop
  bool operator==(const Coloring&) const = default;
};

// The crossing written as S(p, q) = (r, t), semiarc ids by position.
struct SidewaysForm {
  int p, q, r, t;
};
SidewaysForm sideways_form(const Crossing& x);

bool is_coloring(const LinkDiagram& d, const FiniteBiquandle& b, const std::vector<int>& color_of);

// Calls `visit` on each coloring of the semiarcs, in lexicographic order of
// the color vector.  Free loops are not expanded.  Return false to stop.
void for_each_semiarc_coloring(const LinkDiagram& d, const FiniteBiquandle& b,
                               const std::function<bool(const std::vector<int>&)>& visit);

// All colorings including free-loop colors.  Throws std::length_error above `cap`.
std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const FiniteBiquandle& b,
                                          std::size_t cap = 1u << 22);

// Number of colorings; saturates at UINT64_MAX.
std::uint64_t counting_invariant(const LinkDiagram& d, const FiniteBiquandle& b);

// Coloring count for make_alexander_quandle_mod(k), computed as the size of
// the solution module of the linear crossing relations.
std::uint64_t alexander_coloring_count(const LinkDiagram& d, int k);

// CSV with header "coloring,semiarc,element"; all indices 1-based, free loops as U1, U2, ...
std::string colorings_csv(const std::vector<Coloring>& colorings);

// --- braid colorings by Z_k[t^{±1}]/(1-t)^2 -------------------------------------

template <class Int>
using TransferState = std::vector<TwistPair<Int>>;

// sigma_i: (x_i, x_{i+1}) -> (x_{i+1}, x_i ⊳ x_{i+1}); the inverse for -i.
template <class Int>
TransferState<Int> braid_transfer(const BraidWord& w, TransferState<Int> state, const PairRing<Int>& ring) {
  if (static_cast<int>(state.size()) != w.strands)
    throw std::invalid_argument("transfer state has " + std::to_string(state.size()) +
                                " colors for a " + std::to_string(w.strands) + "-strand braid");
  for (int g : w.letters) {
    int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= w.strands) throw std::invalid_argument("generator index out of range");
    auto x = state[i], y = state[i + 1];
    if (g > 0) {
      state[i] = y;
      state[i + 1] = ring.tri(x, y);
    } else {
      state[i] = ring.tri_inv(y, x);
      state[i + 1] = x;
    }
  }
  return state;
}

}  // namespace qtriv

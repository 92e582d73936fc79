#pragma once

// Oriented link diagrams as signed crossings over semiarcs.
//
// A semiarc is an edge of the diagram viewed as a directed 4-valent graph.
// Every crossing records four semiarcs by role; a crossing-free component is
// kept only as a count of free loops.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtriv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum Role : int { kUnderIn = 0, kOverIn = 1, kUnderOut = 2, kOverOut = 3 };

struct Crossing {
  int sign = 1;                 // +1 or -1
  std::array<int, 4> arcs{};    // indexed by Role

  int under_in() const { return arcs[kUnderIn]; }
  int over_in() const { return arcs[kOverIn]; }
  int under_out() const { return arcs[kUnderOut]; }
  int over_out() const { return arcs[kOverOut]; }
  bool operator==(const Crossing&) const = default;
};

class LinkDiagram {
 public:
  LinkDiagram() = default;
  // Validates that every semiarc 0..semiarc_count-1 enters exactly one
  // crossing and leaves exactly one.  Throws DiagramError otherwise.
  LinkDiagram(std::vector<Crossing> crossings, int semiarc_count, int free_loops = 0);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int semiarc_count() const { return semiarc_count_; }
  int free_loops() const { return free_loops_; }
  // Components carrying at least one crossing.
  int strand_components() const { return strand_components_; }
  int component_count() const { return strand_components_ + free_loops_; }
  int component_of(int semiarc) const { return component_of_[semiarc]; }
  const std::vector<int>& component_map() const { return component_of_; }
  // Crossing where the semiarc ends (enters as an input role) and starts.
  int head_crossing(int semiarc) const { return head_[semiarc]; }
  int tail_crossing(int semiarc) const { return tail_[semiarc]; }
  // Semiarc following `semiarc` along its strand.
  int successor(int semiarc) const;

  bool is_self_crossing(int index) const;
  // Indices of crossings whose two strands lie on one component.
  std::vector<int> self_crossings() const;

  bool operator==(const LinkDiagram& other) const {
    return crossings_ == other.crossings_ && semiarc_count_ == other.semiarc_count_ &&
           free_loops_ == other.free_loops_;
  }

 private:
  std::vector<Crossing> crossings_;
  int semiarc_count_ = 0;
  int free_loops_ = 0;
  int strand_components_ = 0;
  std::vector<int> component_of_;
  std::vector<int> head_;
  std::vector<int> tail_;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +i for sigma_i, -i for its inverse (1-based)
};

struct PretzelSpec {
  std::vector<int> twists;
};

// --- parsers and emitters -------------------------------------------------------

// PD[X(i,j,k,l), ..., U(m)]: quadruples counterclockwise from the incoming
// under-edge; U(m) is a crossing-free loop.  Square brackets are accepted in
// place of parentheses for X/U.
LinkDiagram parse_pd(const std::string& text);
std::string emit_pd(const LinkDiagram& d);

// BR[k; s1 s1 -s2 ...]
BraidWord parse_braid(const std::string& text);
std::string format_braid(const BraidWord& w);

// P(p1,p2,...,pn)
PretzelSpec parse_pretzel(const std::string& text);
std::string format_pretzel(const PretzelSpec& p);

// Dispatches on the leading token: PD[...], BR[...] or P(...).
LinkDiagram parse_link(const std::string& text);

// --- constructions and transformations -------------------------------------------

LinkDiagram braid_closure(const BraidWord& w);
LinkDiagram pretzel_diagram(const PretzelSpec& p);

int count_components(const LinkDiagram& d);

LinkDiagram mirror(const LinkDiagram& d);
// Throws DiagramError if the two strands at `index` belong to different components.
LinkDiagram self_crossing_change(const LinkDiagram& d, int index);
LinkDiagram reverse_component(const LinkDiagram& d, int component);
// All 2^(strand components) orientation choices; bit c of the index reverses
// component c.  Entry 0 is `d` itself.
std::vector<LinkDiagram> enumerate_orientations(const LinkDiagram& d);

// Permutation of strand positions induced by a braid word (0-based).
std::vector<int> braid_permutation(const BraidWord& w);

}  // namespace qtriv

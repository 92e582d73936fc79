#include "qtriv/links.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace qtriv {

// --- LinkDiagram --------------------------------------------------------------

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int semiarc_count, int free_loops)
    : crossings_(std::move(crossings)), semiarc_count_(semiarc_count), free_loops_(free_loops) {
  if (semiarc_count_ < 0 || free_loops_ < 0) throw DiagramError("negative size");
  head_.assign(semiarc_count_, -1);
  tail_.assign(semiarc_count_, -1);
  for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
    const Crossing& x = crossings_[c];
    if (x.sign != 1 && x.sign != -1) throw DiagramError("crossing sign must be +1 or -1");
    for (int r = 0; r < 4; ++r) {
      int s = x.arcs[r];
      if (s < 0 || s >= semiarc_count_)
        throw DiagramError("semiarc id " + std::to_string(s) + " out of range");
      auto& slot = (r == kUnderIn || r == kOverIn) ? head_[s] : tail_[s];
      if (slot >= 0)
        throw DiagramError("semiarc " + std::to_string(s) + " used twice in the same direction");
      slot = c;
    }
  }
  for (int s = 0; s < semiarc_count_; ++s)
    if (head_[s] < 0 || tail_[s] < 0)
      throw DiagramError("semiarc " + std::to_string(s) + " is not closed");

  component_of_.assign(semiarc_count_, -1);
  for (int s = 0; s < semiarc_count_; ++s) {
    if (component_of_[s] >= 0) continue;
    int cur = s;
    do {
      component_of_[cur] = strand_components_;
      cur = successor(cur);
    } while (cur != s);
    ++strand_components_;
  }
}

int LinkDiagram::successor(int semiarc) const {
  const Crossing& x = crossings_[head_[semiarc]];
  return x.under_in() == semiarc ? x.under_out() : x.over_out();
}

bool LinkDiagram::is_self_crossing(int index) const {
  const Crossing& x = crossings_.at(index);
  return component_of_[x.under_in()] == component_of_[x.over_in()];
}

std::vector<int> LinkDiagram::self_crossings() const {
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(crossings_.size()); ++c)
    if (is_self_crossing(c)) out.push_back(c);
  return out;
}

// --- planar assembly ------------------------------------------------------------
//
// A crossing in the plane has four ports in counterclockwise order.  The under
// strand occupies ports {u, u+2} for u = under_port in {0, 1}; the over strand the
// other pair.  Orientation is given by the port where each strand enters.

namespace {

struct PlanarCrossing {
  std::array<int, 4> edge{};
  int under_port = 0;
  std::array<int, 2> entry{-1, -1};  // [0] under strand, [1] over strand
};

int strand_at(const PlanarCrossing& c, int port) { return port % 2 == c.under_port ? 0 : 1; }

// Picks an entry port for a strand passage whose component has no fixed entry.
using EntryChooser = std::function<int(int crossing, int strand)>;

class InconsistentOrientation : public std::runtime_error {
 public:
  explicit InconsistentOrientation(int crossing)
      : std::runtime_error("inconsistent orientation"), crossing(crossing) {}
  int crossing;
};

LinkDiagram assemble(std::vector<PlanarCrossing> cs, int edge_count, int free_loops,
                     const EntryChooser& choose) {
  const int nc = static_cast<int>(cs.size());
  std::vector<std::vector<std::pair<int, int>>> ends(edge_count);
  for (int c = 0; c < nc; ++c)
    for (int p = 0; p < 4; ++p) ends.at(cs[c].edge[p]).push_back({c, p});
  for (int e = 0; e < edge_count; ++e)
    if (ends[e].size() != 2) throw DiagramError("edge " + std::to_string(e) + " does not have two ends");

  std::vector<std::array<bool, 2>> visited(nc, {false, false});
  auto walk = [&](int c, int s, int p) {
    while (true) {
      int& entry = cs[c].entry[s];
      if (entry >= 0 && entry != p) throw InconsistentOrientation(c);
      if (visited[c][s]) return;
      entry = p;
      visited[c][s] = true;
      int q = (p + 2) % 4;
      const auto& e = ends[cs[c].edge[q]];
      auto next = e[0] == std::make_pair(c, q) ? e[1] : e[0];
      c = next.first;
      p = next.second;
      s = strand_at(cs[c], p);
    }
  };
  for (int c = 0; c < nc; ++c)
    for (int s = 0; s < 2; ++s)
      if (!visited[c][s] && cs[c].entry[s] >= 0) walk(c, s, cs[c].entry[s]);
  for (int c = 0; c < nc; ++c)
    for (int s = 0; s < 2; ++s)
      if (!visited[c][s]) walk(c, s, choose(c, s));

  std::vector<Crossing> out(nc);
  for (int c = 0; c < nc; ++c) {
    const PlanarCrossing& pc = cs[c];
    int eu = pc.entry[0], eo = pc.entry[1];
    Crossing& x = out[c];
    x.arcs[kUnderIn] = pc.edge[eu];
    x.arcs[kUnderOut] = pc.edge[(eu + 2) % 4];
    x.arcs[kOverIn] = pc.edge[eo];
    x.arcs[kOverOut] = pc.edge[(eo + 2) % 4];
    // Positive iff the port after the under entry (counterclockwise) is the over exit.
    x.sign = (eu + 1) % 4 == (eo + 2) % 4 ? 1 : -1;
  }
  return LinkDiagram(std::move(out), edge_count, free_loops);
}

// Enter each undetermined strand at its lower-numbered port.  With ports
// NE=0, NW=1, SW=2, SE=3 this orients the strand downward.
int enter_from_top(const std::vector<PlanarCrossing>& cs, int c, int s) {
  return s == 0 ? cs[c].under_port : 1 - cs[c].under_port;
}

// Crossings joined by wires through optional pass-through nodes.
class WireGraph {
 public:
  // Ports NE=0, NW=1, SW=2, SE=3.  Positive twists put the over strand on NE-SW.
  int add_crossing(int handedness) {
    int c = static_cast<int>(crossings_.size());
    PlanarCrossing pc;
    pc.under_port = handedness > 0 ? 1 : 0;
    crossings_.push_back(pc);
    base_.push_back(static_cast<int>(adj_.size()));
    for (int p = 0; p < 4; ++p) {
      adj_.emplace_back();
      owner_.push_back({c, p});
    }
    return c;
  }
  int port(int c, int p) const { return base_[c] + p; }
  int add_node() {
    adj_.emplace_back();
    owner_.push_back({-1, -1});
    return static_cast<int>(adj_.size()) - 1;
  }
  void link(int a, int b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }

  LinkDiagram build() {
    const int nodes = static_cast<int>(adj_.size());
    for (int v = 0; v < nodes; ++v) {
      size_t want = owner_[v].first >= 0 ? 1 : 2;
      if (adj_[v].size() != want) throw DiagramError("malformed wire graph");
    }
    std::vector<bool> seen(nodes, false);
    int edges = 0;
    for (int v = 0; v < nodes; ++v) {
      if (owner_[v].first < 0 || seen[v]) continue;
      int prev = v, cur = adj_[v][0];
      seen[v] = true;
      while (owner_[cur].first < 0) {
        seen[cur] = true;
        int next = adj_[cur][0] == prev ? adj_[cur][1] : adj_[cur][0];
        prev = cur;
        cur = next;
      }
      seen[cur] = true;
      crossings_[owner_[v].first].edge[owner_[v].second] = edges;
      crossings_[owner_[cur].first].edge[owner_[cur].second] = edges;
      ++edges;
    }
    int loops = 0;
    for (int v = 0; v < nodes; ++v) {
      if (seen[v]) continue;
      ++loops;
      int prev = -1, cur = v;
      while (!seen[cur]) {
        seen[cur] = true;
        int next = adj_[cur][0] == prev ? adj_[cur][1] : adj_[cur][0];
        prev = cur;
        cur = next;
      }
    }
    const auto& cs = crossings_;
    return assemble(crossings_, edges, loops,
                    [&cs](int c, int s) { return enter_from_top(cs, c, s); });
  }

 private:
  std::vector<PlanarCrossing> crossings_;
  std::vector<int> base_;  // node id of port 0 of each crossing
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> owner_;  // (crossing, port) or (-1, -1)
};

// --- tokenizer ------------------------------------------------------------------

class Cursor {
 public:
  explicit Cursor(const std::string& text) : s_(text) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  size_t pos() const { return i_; }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++i_;
    return true;
  }
  void expect(char ch) {
    if (!accept(ch)) throw ParseError(std::string("expected '") + ch + "'", pos());
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (s_.compare(i_, w.size(), w) != 0) return false;
    i_ += w.size();
    return true;
  }
  long long integer() {
    skip_ws();
    size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) {
      i_ = start;
      throw ParseError("expected integer", start);
    }
    if (i_ - digits > 9) throw ParseError("integer too large", start);
    return std::stoll(s_.substr(start, i_ - start));
  }
  void expect_end() {
    if (!at_end()) throw ParseError("trailing input", pos());
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

char closing(char open) { return open == '(' ? ')' : ']'; }

}  // namespace

// --- PD codes -------------------------------------------------------------------

LinkDiagram parse_pd(const std::string& text) {
  Cursor cur(text);
  if (!cur.accept_word("PD")) throw ParseError("expected 'PD'", cur.pos());
  cur.expect('[');

  struct RawX {
    std::array<long long, 4> labels;
    size_t position;
  };
  std::vector<RawX> xs;
  std::vector<std::pair<long long, size_t>> loops;
  if (!cur.accept(']')) {
    do {
      size_t at = (cur.skip_ws(), cur.pos());
      char kind = cur.peek();
      if (kind != 'X' && kind != 'U') throw ParseError("expected X or U", at);
      cur.accept(kind);
      char open = cur.peek();
      if (open != '(' && open != '[') throw ParseError("expected '(' or '['", cur.pos());
      cur.accept(open);
      std::vector<long long> vals;
      if (cur.peek() != closing(open)) {
        do vals.push_back(cur.integer());
        while (cur.accept(','));
      }
      cur.expect(closing(open));
      size_t want = kind == 'X' ? 4 : 1;
      if (vals.size() != want)
        throw ParseError(std::string(1, kind) + " expects " + std::to_string(want) +
                             " label" + (want > 1 ? "s" : "") + ", got " +
                             std::to_string(vals.size()),
                         at);
      for (long long v : vals)
        if (v < 1) throw ParseError("labels must be positive", at);
      if (kind == 'X')
        xs.push_back({{vals[0], vals[1], vals[2], vals[3]}, at});
      else
        loops.push_back({vals[0], at});
    } while (cur.accept(','));
    cur.expect(']');
  }
  cur.expect_end();

  std::map<long long, int> count;
  std::map<long long, size_t> first_seen;
  for (const auto& x : xs)
    for (long long l : x.labels) {
      ++count[l];
      first_seen.emplace(l, x.position);
    }
  for (const auto& [l, n] : count)
    if (n != 2)
      throw ParseError("label " + std::to_string(l) + " appears " + std::to_string(n) +
                           " times",
                       first_seen[l]);
  for (size_t i = 0; i < loops.size(); ++i) {
    bool clash = count.count(loops[i].first) > 0;
    for (size_t j = 0; j < i; ++j) clash = clash || loops[j].first == loops[i].first;
    if (clash)
      throw ParseError("label " + std::to_string(loops[i].first) + " reused by U", loops[i].second);
  }

  std::map<long long, int> id;
  for (const auto& [l, n] : count) id.emplace(l, static_cast<int>(id.size()));

  std::vector<PlanarCrossing> cs(xs.size());
  for (size_t c = 0; c < xs.size(); ++c) {
    for (int p = 0; p < 4; ++p) cs[c].edge[p] = id[xs[c].labels[p]];
    cs[c].under_port = 0;
    cs[c].entry[0] = 0;
  }
  // Components that never pass under: the over strand runs l -> j when j
  // follows l in label order (with wrap-around).
  auto choose = [&](int c, int) {
    long long j = xs[c].labels[1], l = xs[c].labels[3];
    return (j == l + 1 || l > j + 1) ? 3 : 1;
  };
  try {
    return assemble(std::move(cs), static_cast<int>(id.size()), static_cast<int>(loops.size()),
                    choose);
  } catch (const InconsistentOrientation& e) {
    throw ParseError("inconsistent orientation", xs[e.crossing].position);
  }
}

std::string emit_pd(const LinkDiagram& d) {
  std::ostringstream os;
  os << "PD[";
  bool first = true;
  for (const auto& x : d.crossings()) {
    std::array<int, 4> q = x.sign > 0
                               ? std::array<int, 4>{x.under_in(), x.over_out(), x.under_out(), x.over_in()}
                               : std::array<int, 4>{x.under_in(), x.over_in(), x.under_out(), x.over_out()};
    os << (first ? "" : ", ") << "X(" << q[0] + 1 << ',' << q[1] + 1 << ',' << q[2] + 1 << ','
       << q[3] + 1 << ')';
    first = false;
  }
  for (int i = 0; i < d.free_loops(); ++i) {
    os << (first ? "" : ", ") << "U(" << d.semiarc_count() + i + 1 << ')';
    first = false;
  }
  os << ']';
  return os.str();
}

// --- braids -----------------------------------------------------------------------

BraidWord parse_braid(const std::string& text) {
  Cursor cur(text);
  if (!cur.accept_word("BR")) throw ParseError("expected 'BR'", cur.pos());
  cur.expect('[');
  size_t at = (cur.skip_ws(), cur.pos());
  BraidWord w;
  long long k = cur.integer();
  if (k < 1) throw ParseError("strand count must be positive", at);
  w.strands = static_cast<int>(k);
  if (cur.accept(';')) {
    while (cur.peek() != ']' && cur.peek() != '\0') {
      at = (cur.skip_ws(), cur.pos());
      bool inverse = cur.accept('-');
      if (!cur.accept('s')) throw ParseError("expected generator 'sN'", cur.pos());
      long long g = cur.integer();
      if (g < 1 || g >= k) throw ParseError("generator index out of range", at);
      w.letters.push_back(inverse ? -static_cast<int>(g) : static_cast<int>(g));
      cur.accept(',');
    }
  }
  cur.expect(']');
  cur.expect_end();
  return w;
}

std::string format_braid(const BraidWord& w) {
  std::ostringstream os;
  os << "BR[" << w.strands << ';';
  for (int g : w.letters) os << ' ' << (g < 0 ? "-" : "") << 's' << std::abs(g);
  os << ']';
  return os.str();
}

std::vector<int> braid_permutation(const BraidWord& w) {
  // perm[top position] = bottom position
  std::vector<int> at(w.strands);  // at[position] = strand currently there
  std::iota(at.begin(), at.end(), 0);
  for (int g : w.letters) {
    int i = std::abs(g) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(w.strands);
  for (int p = 0; p < w.strands; ++p) perm[at[p]] = p;
  return perm;
}

LinkDiagram braid_closure(const BraidWord& w) {
  if (w.strands < 1) throw DiagramError("braid needs at least one strand");
  for (int g : w.letters)
    if (g == 0 || std::abs(g) >= w.strands) throw DiagramError("generator index out of range");
  WireGraph g;
  std::vector<int> top(w.strands), cur(w.strands);
  std::vector<bool> touched(w.strands, false);
  for (int p = 0; p < w.strands; ++p) top[p] = cur[p] = g.add_node();
  for (int letter : w.letters) {
    int i = std::abs(letter) - 1;
    int c = g.add_crossing(letter);
    g.link(cur[i], g.port(c, 1));
    g.link(cur[i + 1], g.port(c, 0));
    cur[i] = g.port(c, 2);
    cur[i + 1] = g.port(c, 3);
    touched[i] = touched[i + 1] = true;
  }
  // An untouched position closes to a crossing-free loop; give its node a
  // second pass-through so the wire graph stays 2-regular there.
  for (int p = 0; p < w.strands; ++p) {
    if (touched[p]) {
      g.link(cur[p], top[p]);
    } else {
      int mid = g.add_node();
      g.link(top[p], mid);
      g.link(mid, top[p]);
    }
  }
  return g.build();
}

// --- pretzels --------------------------------------------------------------------

PretzelSpec parse_pretzel(const std::string& text) {
  Cursor cur(text);
  if (!cur.accept('P')) throw ParseError("expected 'P'", cur.pos());
  cur.expect('(');
  PretzelSpec p;
  do p.twists.push_back(static_cast<int>(cur.integer()));
  while (cur.accept(','));
  cur.expect(')');
  cur.expect_end();
  return p;
}

std::string format_pretzel(const PretzelSpec& p) {
  std::ostringstream os;
  os << "P(";
  for (size_t i = 0; i < p.twists.size(); ++i) os << (i ? "," : "") << p.twists[i];
  os << ')';
  return os.str();
}

LinkDiagram pretzel_diagram(const PretzelSpec& p) {
  const int n = static_cast<int>(p.twists.size());
  if (n < 1) throw DiagramError("pretzel needs at least one box");
  WireGraph g;
  // Box terminals: top-left, top-right, bottom-left, bottom-right.
  std::vector<std::array<int, 4>> box(n);
  for (int i = 0; i < n; ++i) {
    int t = p.twists[i];
    if (t == 0) {
      for (auto& v : box[i]) v = g.add_node();
      g.link(box[i][0], box[i][2]);
      g.link(box[i][1], box[i][3]);
      continue;
    }
    int first = -1, prev = -1;
    for (int j = 0; j < std::abs(t); ++j) {
      int c = g.add_crossing(t);
      if (prev >= 0) {
        g.link(g.port(prev, 2), g.port(c, 1));
        g.link(g.port(prev, 3), g.port(c, 0));
      } else {
        first = c;
      }
      prev = c;
    }
    box[i] = {g.port(first, 1), g.port(first, 0), g.port(prev, 2), g.port(prev, 3)};
  }
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    g.link(box[i][1], box[j][0]);
    g.link(box[i][3], box[j][2]);
  }
  return g.build();
}

// --- dispatch and transformations ----------------------------------------------------

LinkDiagram parse_link(const std::string& text) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) throw ParseError("empty link description", 0);
  if (text.compare(i, 2, "PD") == 0) return parse_pd(text);
  if (text.compare(i, 2, "BR") == 0) return braid_closure(parse_braid(text));
  if (text[i] == 'P') return pretzel_diagram(parse_pretzel(text));
  throw ParseError("expected PD[...], BR[...] or P(...)", i);
}

int count_components(const LinkDiagram& d) { return d.component_count(); }

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> cs = d.crossings();
  for (auto& x : cs) {
    auto a = x.arcs;
    x.sign = -x.sign;
    x.arcs[kUnderIn] = a[kOverIn];
    x.arcs[kOverIn] = a[kUnderIn];
    x.arcs[kUnderOut] = a[kOverOut];
    x.arcs[kOverOut] = a[kUnderOut];
  }
  return LinkDiagram(std::move(cs), d.semiarc_count(), d.free_loops());
}

LinkDiagram self_crossing_change(const LinkDiagram& d, int index) {
  if (index < 0 || index >= static_cast<int>(d.crossings().size()))
    throw DiagramError("crossing index out of range");
  if (!d.is_self_crossing(index))
    throw DiagramError("crossing " + std::to_string(index) + " joins two different components");
  std::vector<Crossing> cs = d.crossings();
  Crossing& x = cs[index];
  auto a = x.arcs;
  x.sign = -x.sign;
  x.arcs[kUnderIn] = a[kOverIn];
  x.arcs[kOverIn] = a[kUnderIn];
  x.arcs[kUnderOut] = a[kOverOut];
  x.arcs[kOverOut] = a[kUnderOut];
  return LinkDiagram(std::move(cs), d.semiarc_count(), d.free_loops());
}

LinkDiagram reverse_component(const LinkDiagram& d, int component) {
  if (component < 0 || component >= d.strand_components())
    throw DiagramError("component id out of range");
  std::vector<Crossing> cs = d.crossings();
  for (auto& x : cs) {
    bool ru = d.component_of(x.under_in()) == component;
    bool ro = d.component_of(x.over_in()) == component;
    if (ru) std::swap(x.arcs[kUnderIn], x.arcs[kUnderOut]);
    if (ro) std::swap(x.arcs[kOverIn], x.arcs[kOverOut]);
    if (ru != ro) x.sign = -x.sign;
  }
  return LinkDiagram(std::move(cs), d.semiarc_count(), d.free_loops());
}

std::vector<LinkDiagram> enumerate_orientations(const LinkDiagram& d) {
  const int k = d.strand_components();
  if (k > 20) throw DiagramError("too many components to enumerate orientations");
  std::vector<LinkDiagram> out;
  out.reserve(size_t{1} << k);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    LinkDiagram v = d;
    // Reversal keeps component ids, since they follow the lowest semiarc.
    for (int c = 0; c < k; ++c)
      if (mask >> c & 1u) v = reverse_component(v, c);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace qtriv

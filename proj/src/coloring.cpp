#include "qtriv/coloring.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "qtriv/smith.hpp"

namespace qtriv {

SidewaysForm sideways_form(const Crossing& x) {
  if (x.sign > 0) return {x.under_in(), x.over_out(), x.over_in(), x.under_out()};
  return {x.under_out(), x.over_in(), x.over_out(), x.under_in()};
}

bool is_coloring(const LinkDiagram& d, const FiniteBiquandle& b, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != d.semiarc_count()) return false;
  for (int c : f)
    if (c < 0 || c >= b.size()) return false;
  for (const auto& x : d.crossings()) {
    SidewaysForm s = sideways_form(x);
    if (b.over(f[s.q], f[s.p]) != f[s.r] || b.under(f[s.p], f[s.q]) != f[s.t]) return false;
  }
  return true;
}

namespace {

class Solver {
 public:
  Solver(const LinkDiagram& d, const FiniteBiquandle& b) : b_(b), m_(d.semiarc_count()) {
    for (const auto& x : d.crossings()) forms_.push_back(sideways_form(x));
    touching_.resize(m_);
    for (int c = 0; c < static_cast<int>(forms_.size()); ++c) {
      const auto& s = forms_[c];
      for (int a : {s.p, s.q, s.r, s.t}) {
        auto& list = touching_[a];
        if (list.empty() || list.back() != c) list.push_back(c);
      }
    }
    color_.assign(m_, -1);
  }

  void run(const std::function<bool(const std::vector<int>&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    search(0);
  }

 private:
  bool assign(int a, int v) {
    if (color_[a] >= 0) return color_[a] == v;
    color_[a] = v;
    trail_.push_back(a);
    queue_.push_back(a);
    return true;
  }

  // Deduce whatever a crossing determines from its colored semiarcs.
  bool settle(const SidewaysForm& s) {
    int p = color_[s.p], q = color_[s.q], r = color_[s.r], t = color_[s.t];
    if (p >= 0 && q >= 0) return assign(s.r, b_.over(q, p)) && assign(s.t, b_.under(p, q));
    if (r >= 0 && t >= 0) {
      auto [x, y] = b_.sideways_preimage(r, t);
      if (x < 0) throw std::logic_error("sideways map is not invertible");
      return assign(s.p, x) && assign(s.q, y);
    }
    if (p >= 0 && r >= 0) {
      int y = b_.over_preimage(p, r);
      return assign(s.q, y) && assign(s.t, b_.under(p, y));
    }
    if (q >= 0 && t >= 0) {
      int x = b_.under_preimage(q, t);
      return assign(s.p, x) && assign(s.r, b_.over(q, x));
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      int a = queue_.back();
      queue_.pop_back();
      for (int c : touching_[a])
        if (!settle(forms_[c])) {
          queue_.clear();
          return false;
        }
    }
    return true;
  }

  void search(int from) {
    while (from < m_ && color_[from] >= 0) ++from;
    if (from == m_) {
      if (!(*visit_)(color_)) stop_ = true;
      return;
    }
    for (int v = 0; v < b_.size() && !stop_; ++v) {
      size_t mark = trail_.size();
      assign(from, v);
      if (propagate()) search(from + 1);
      while (trail_.size() > mark) {
        color_[trail_.back()] = -1;
        trail_.pop_back();
      }
    }
  }

  const FiniteBiquandle& b_;
  int m_;
  std::vector<SidewaysForm> forms_;
  std::vector<std::vector<int>> touching_;
  std::vector<int> color_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  bool stop_ = false;
};

std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out;
  if (__builtin_mul_overflow(x, y, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

std::uint64_t sat_pow(std::uint64_t base, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out = sat_mul(out, base);
  return out;
}

}  // namespace

void for_each_semiarc_coloring(const LinkDiagram& d, const FiniteBiquandle& b,
                               const std::function<bool(const std::vector<int>&)>& visit) {
  Solver(d, b).run(visit);
}

std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const FiniteBiquandle& b,
                                          std::size_t cap) {
  const int loops = d.free_loops();
  const std::uint64_t per = sat_pow(static_cast<std::uint64_t>(b.size()), loops);
  std::vector<Coloring> out;
  for_each_semiarc_coloring(d, b, [&](const std::vector<int>& f) {
    if (out.size() + per > cap) throw std::length_error("too many colorings to list");
    std::vector<int> lc(loops, 0);
    for (std::uint64_t i = 0; i < per; ++i) {
      out.push_back({f, lc});
      for (int j = loops - 1; j >= 0; --j) {
        if (++lc[j] < b.size()) break;
        lc[j] = 0;
      }
    }
    return true;
  });
  return out;
}

std::uint64_t counting_invariant(const LinkDiagram& d, const FiniteBiquandle& b) {
  std::uint64_t n = 0;
  for_each_semiarc_coloring(d, b, [&](const std::vector<int>&) {
    ++n;
    return true;
  });
  return sat_mul(n, sat_pow(static_cast<std::uint64_t>(b.size()), d.free_loops()));
}

std::uint64_t alexander_coloring_count(const LinkDiagram& d, int k) {
  if (k < 1) throw std::invalid_argument("modulus must be positive");
  // Variables: semiarc a has coordinates (2a, 2a+1) for a + b(1-t).
  const int cols = 2 * d.semiarc_count();
  IntMatrix rows;
  auto eq = [&](std::initializer_list<std::pair<int, int>> terms) {
    std::vector<std::int64_t> r(cols, 0);
    for (auto [var, coef] : terms) r[var] += coef;
    rows.push_back(std::move(r));
  };
  for (const auto& x : d.crossings()) {
    int oi = x.over_in(), oo = x.over_out();
    // Quandle colors: the over strand keeps its color.
    eq({{2 * oi, 1}, {2 * oo, -1}});
    eq({{2 * oi + 1, 1}, {2 * oo + 1, -1}});
    // target = source ⊳ over, with (a,b) ⊳ (c,d) = (a, b - a + c).
    int src = x.sign > 0 ? x.under_in() : x.under_out();
    int dst = x.sign > 0 ? x.under_out() : x.under_in();
    eq({{2 * dst, 1}, {2 * src, -1}});
    eq({{2 * dst + 1, 1}, {2 * src + 1, -1}, {2 * src, 1}, {2 * oi, -1}});
  }
  std::uint64_t n = count_solutions_mod(rows, cols, k);
  return sat_mul(n, sat_pow(static_cast<std::uint64_t>(k) * k, d.free_loops()));
}

std::string colorings_csv(const std::vector<Coloring>& colorings) {
  std::ostringstream os;
  os << "coloring,semiarc,element\n";
  for (size_t i = 0; i < colorings.size(); ++i) {
    const auto& f = colorings[i];
    for (size_t a = 0; a < f.color_of.size(); ++a)
      os << i + 1 << ',' << a + 1 << ',' << f.color_of[a] + 1 << '\n';
    for (size_t l = 0; l < f.loop_colors.size(); ++l)
      os << i + 1 << ",U" << l + 1 << ',' << f.loop_colors[l] + 1 << '\n';
  }
  return os.str();
}

}  // namespace qtriv

#include "qtriv/pretzel.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtriv/coloring.hpp"

namespace qtriv {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kKnotTrivial: return "KNOT_TRIVIAL";
    case Verdict::kTrivialLink: return "TRIVIAL_LINK";
    case Verdict::kNontrivial: return "NONTRIVIAL";
  }
  return "?";
}

namespace {

int even_count(const PretzelSpec& p) {
  return static_cast<int>(std::count_if(p.twists.begin(), p.twists.end(), [](int x) { return x % 2 == 0; }));
}

bool even_twists_zero(const PretzelSpec& p) {
  return std::all_of(p.twists.begin(), p.twists.end(), [](int x) { return x % 2 != 0 || x == 0; });
}

}  // namespace

int pretzel_component_count(const PretzelSpec& p) {
  const int n = static_cast<int>(p.twists.size());
  int e = even_count(p);
  if (e > 0) return e;
  return n % 2 == 0 ? 2 : 1;
}

HomotopyClass classify(const PretzelSpec& p) {
  const int n = static_cast<int>(p.twists.size());
  if (n == 0) throw std::invalid_argument("pretzel link needs at least one twist box");
  HomotopyClass h;
  h.components = pretzel_component_count(p);
  h.even_count = even_count(p);
  if (n == 1) {
    h.verdict = Verdict::kKnotTrivial;
    h.reason = "n=1";
    return h;
  }
  if (n == 2) {
    long long sum = static_cast<long long>(p.twists[0]) + p.twists[1];
    if (sum % 2 != 0) {
      h.verdict = Verdict::kKnotTrivial;
      h.reason = "1(a)";
    } else if (sum == 0) {
      h.verdict = Verdict::kTrivialLink;
      h.reason = "1(b)i";
    } else {
      h.verdict = Verdict::kNontrivial;
      h.reason = "1(b)ii";
    }
    return h;
  }
  if (h.even_count == 0) {
    if (n % 2 == 0) {
      h.verdict = Verdict::kNontrivial;
      h.reason = "2(a)i";
    } else {
      h.verdict = Verdict::kKnotTrivial;
      h.reason = "2(a)ii";
    }
  } else if (h.even_count == 1) {
    h.verdict = Verdict::kKnotTrivial;
    h.reason = "2(b)";
  } else if (even_twists_zero(p)) {
    h.verdict = Verdict::kTrivialLink;
    h.reason = "2(c)i";
  } else {
    h.verdict = Verdict::kNontrivial;
    h.reason = "2(c)ii";
  }
  return h;
}

bool in_kernel_of_q(const PretzelSpec& p) { return classify(p).verdict != Verdict::kNontrivial; }

bool kernel_case_list(const PretzelSpec& p) {
  const int n = static_cast<int>(p.twists.size());
  if (n == 0) throw std::invalid_argument("pretzel link needs at least one twist box");
  if (n == 1) return true;
  if (n == 2) {
    long long sum = static_cast<long long>(p.twists[0]) + p.twists[1];
    return sum == 0 || sum % 2 != 0;
  }
  bool all_odd = std::all_of(p.twists.begin(), p.twists.end(), [](int x) { return x % 2 != 0; });
  int e = even_count(p);
  return (n % 2 == 1 && all_odd) || e == 1 || (e >= 2 && even_twists_zero(p));
}

std::vector<int> certificate_schedule(const PretzelSpec& p, int cap) {
  std::vector<int> out;
  auto push = [&](int k) {
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  };
  for (int x : p.twists) {
    if (x % 2 != 0 || x == 0) continue;
    int half = std::abs(x) / 2;
    int k = 2;
    while (half % k == 0) ++k;
    push(k);
  }
  for (int k = 2; k <= cap; ++k) push(k);
  return out;
}

std::optional<Certificate> distinguishing_certificate(const PretzelSpec& p, int cap) {
  HomotopyClass h = classify(p);
  if (h.verdict != Verdict::kNontrivial || h.components < 2)
    throw std::invalid_argument("no certificate for " + format_pretzel(p) + ": classified " +
                                to_string(h.verdict) + " with " + std::to_string(h.components) +
                                " component(s)");
  LinkDiagram d = pretzel_diagram(p);
  for (int k : certificate_schedule(p, cap)) {
    Certificate c;
    c.modulus = k;
    c.pretzel_count = alexander_coloring_count(d, k);
    c.unlink_count = 1;
    for (int i = 0; i < h.components; ++i) c.unlink_count *= static_cast<std::uint64_t>(k) * k;
    if (c.pretzel_count != c.unlink_count) return c;
  }
  return std::nullopt;
}

}  // namespace qtriv

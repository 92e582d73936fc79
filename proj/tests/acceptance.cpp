// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qtriv/catalog.hpp"
#include "qtriv/coloring.hpp"
#include "qtriv/enhancement.hpp"
#include "qtriv/pretzel.hpp"

using namespace qtriv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = limit_s <= 0 || secs < limit_s;
  bool ok = o.pass && in_time;
  if (!ok) ++failures;
  char timing[64];
  if (limit_s > 0) std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, limit_s);
  else std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id << ". " << title << ": " << o.detail << " ["
            << timing << (in_time ? "" : ", over time") << "]" << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string poly(const LinkDiagram& d, const CatalogCocycle& c) {
  return cocycle_invariant(d, catalog_structure(c.structure), c.phi).to_string();
}

// Values of the invariant over every orientation, deduplicated in order.
std::vector<std::string> orientation_values(const LinkDiagram& d, const FiniteBiquandle& b, const Cochain2& phi) {
  std::vector<std::string> out;
  for (const auto& p : cocycle_invariant_orientations(d, b, phi)) {
    std::string s = p.to_string();
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

void for_each_pretzel(int max_n, int max_p, const std::function<void(const PretzelSpec&)>& f) {
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int> p(n, -max_p);
    while (true) {
      f(PretzelSpec{p});
      int i = 0;
      while (i < n && ++p[i] > max_p) p[i++] = -max_p;
      if (i == n) break;
    }
  }
}

Outcome counting_invariants() {
  FiniteBiquandle x = catalog_structure("qt4");
  Outcome o;
  for (auto [name, want] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"L2a1", 8}, {"L4a1", 16}, {"L6a4", 64}, {"U3", 64}}) {
    auto t = std::chrono::steady_clock::now();
    std::uint64_t got = counting_invariant(catalog_link(name), x);
    double s = seconds_since(t);
    bool ok = got == want && s < 1.0;
    o.pass = o.pass && ok;
    o.detail += name + "=" + std::to_string(got) + (ok ? " " : " (want " + std::to_string(want) + ") ");
  }
  return o;
}

Outcome borromean_enhancement() {
  CatalogCocycle c = catalog_cocycle("qt4-borromean");
  FiniteBiquandle b = catalog_structure(c.structure);
  std::vector<std::string> seen;
  bool found = false;
  for (const char* name : {"L6a4", "L6a1"})
    for (const LinkDiagram& d : {catalog_link(name), mirror(catalog_link(name))}) {
      auto vals = orientation_values(d, b, c.phi);
      for (const auto& v : vals) {
        found = found || v == "48u+16";
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
      }
    }
  std::string u3 = cocycle_invariant(catalog_link("U3"), b, c.phi).to_string();
  Outcome o;
  o.pass = found && u3 == "64";
  o.detail = "U3=" + u3 + "; Borromean diagrams (L6a4, L6a1, mirrors, all orientations) give {" +
             join(seen, ", ") + "}, want 48u+16";
  return o;
}

Outcome table_reproduction() {
  const std::vector<std::string> cocycles = {"qt5-phi1", "qt5-phi2", "qt5-phi3"};
  const std::map<std::string, std::vector<std::string>> printed = {
      {"L2a1", {"2u^2+17", "6u^2+2u+11", "8u^2+11"}},  {"L4a1", {"2u+17", "2u^2+6u+11", "8u^2+11"}},
      {"L5a1", {"25", "25", "25"}},                     {"L6a1", {"2u+17", "2u^2+6u+11", "8u+11"}},
      {"L6a2", {"6u+19", "6u^2+19", "6u^2+19"}},        {"L6a3", {"6u+19", "6u^2+19", "6u^2+19"}},
      {"L6a4", {"6u+38", "6u^2+9u+29", "15u+29"}},      {"L6a5", {"6u+65", "6u^2+36u+29", "42u+29"}},
      {"L6n1", {"6u+65", "6u^2+36u+29", "42u+29"}},     {"L7a1", {"25", "25", "25"}},
      {"L7a2", {"2u+17", "2u^2+6u+11", "8u^2+11"}},     {"L7a3", {"25", "25", "25"}},
      {"L7a4", {"25", "25", "25"}},                     {"L7a5", {"2u+17", "6u^2+2u+11", "8u^2+11"}},
      {"L7a6", {"2u^2+17", "6u^2+2u+11", "8u^2+11"}},  {"L7a7", {"2u+75", "2u^2+12u+63", "14u+63"}},
      {"L7n1", {"2u^2+17", "6u^2+2u+11", "8u^2+11"}},  {"L7n2", {"25", "25", "25"}},
  };
  FiniteBiquandle b = catalog_structure("qt5");
  int matched = 0, total = 0;
  std::vector<std::string> misses;
  for (const auto& name : table_link_names()) {
    LinkDiagram d = catalog_link(name);
    for (size_t j = 0; j < cocycles.size(); ++j) {
      ++total;
      const std::string& want = printed.at(name)[j];
      auto vals = orientation_values(d, b, catalog_cocycle(cocycles[j]).phi);
      if (std::find(vals.begin(), vals.end(), want) != vals.end()) ++matched;
      else misses.push_back(name + "/phi" + std::to_string(j + 1) + " want " + want + " got {" + join(vals, ", ") + "}");
    }
  }
  Outcome o;
  o.pass = matched == total;
  o.detail = std::to_string(matched) + "/" + std::to_string(total) + " cells";
  if (!misses.empty()) o.detail += "; misses: " + join(misses, "; ");
  return o;
}

Outcome mirror_sensitivity() {
  CatalogCocycle c = catalog_cocycle("qt4-mirror-phi");
  LinkDiagram d = catalog_link("L4a1");
  std::string a = poly(d, c), m = poly(mirror(d), c);
  return {a == "8u^7+8" && m == "8u+8", "L4a1=" + a + ", mirror=" + m};
}

Outcome braid_transfer_check() {
  BraidWord w{2, {1, 1}};
  int checked = 0;
  for (long k = 2; k <= 64; ++k) {
    PairRing<std::int64_t> r(k);
    auto out = braid_transfer<std::int64_t>(w, {r.zero(), r.one()}, r);
    if (!(out[0] == r.s() && out[1] == r.t())) return {false, "k=" + std::to_string(k) + " gives (" +
                                                               r.format(out[0]) + ", " + r.format(out[1]) + ")"};
    ++checked;
  }
  PairRing<BigInt> z(0);
  auto out = braid_transfer<BigInt>(w, {z.zero(), z.one()}, z);
  bool exact = out[0] == z.s() && out[1] == z.t();
  return {exact, "(0,1) -> (" + z.format(out[0]) + ", " + z.format(out[1]) + ") over Z and k=2.." +
                     std::to_string(checked + 1)};
}

Outcome closed_forms() {
  int mismatches = 0;
  std::vector<std::string> minimal;
  bool minimal_ok = true;
  for (long k = 2; k <= 12; ++k) {
    oracle::TMat b = oracle::tm_pow(oracle::tm_a(k), 2, k), acc = oracle::tm_identity();
    int first = 0;
    for (int j = 0; j <= 200; ++j) {
      auto m = twist_power(j, k);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          if (!(oracle::from_pair(m[r][c].a, m[r][c].b, k) == acc[r][c])) ++mismatches;
      if (j > 0 && first == 0 && acc == oracle::tm_identity()) first = j;
      acc = oracle::tm_mul(acc, b, k);
    }
    minimal_ok = minimal_ok && first == k;
    minimal.push_back(std::to_string(first));
  }
  return {mismatches == 0 && minimal_ok, std::to_string(mismatches) +
                                             " entry mismatches for j<=200, k=2..12; minimal identity powers " +
                                             join(minimal, ",")};
}

// Half the signed count of crossings between different components; only
// meaningful for two-component links.
int linking_number(const LinkDiagram& d) {
  int s = 0;
  for (size_t i = 0; i < d.crossings().size(); ++i)
    if (!d.is_self_crossing(static_cast<int>(i))) s += d.crossings()[i].sign;
  return s / 2;
}

Outcome pretzel_soundness() {
  std::vector<std::pair<std::string, FiniteBiquandle>> qts;
  for (const auto& name : catalog_structure_names()) {
    FiniteBiquandle b = catalog_structure(name);
    if (b.size() <= 16 && b.over_is_trivial() && is_quasi_trivial(b).quasi_trivial) qts.emplace_back(name, b);
  }
  int nontrivial = 0, certified = 0, trivial = 0, trivial_ok = 0, unlinked = 0;
  std::vector<std::string> bad;
  for_each_pretzel(4, 4, [&](const PretzelSpec& p) {
    HomotopyClass h = classify(p);
    if (h.components < 2) return;
    if (h.verdict == Verdict::kNontrivial) {
      ++nontrivial;
      if (distinguishing_certificate(p)) {
        ++certified;
      } else {
        if (h.components == 2 && linking_number(pretzel_diagram(p)) == 0) ++unlinked;
        if (bad.size() < 5) bad.push_back(format_pretzel(p) + " uncertified");
      }
    } else if (h.verdict == Verdict::kTrivialLink) {
      ++trivial;
      LinkDiagram d = pretzel_diagram(p);
      bool ok = true;
      for (const auto& [name, q] : qts) {
        std::uint64_t unlink = 1;
        for (int i = 0; i < h.components; ++i) unlink *= q.size();
        if (counting_invariant(d, q) != unlink) {
          ok = false;
          if (bad.size() < 5) bad.push_back(format_pretzel(p) + " differs from the unlink on " + name);
        }
      }
      trivial_ok += ok;
    }
  });
  Outcome o;
  o.pass = certified == nontrivial && trivial_ok == trivial;
  o.detail = std::to_string(certified) + "/" + std::to_string(nontrivial) + " NONTRIVIAL certified, " +
             std::to_string(trivial_ok) + "/" + std::to_string(trivial) + " TRIVIAL_LINK match the unlink on " +
             std::to_string(qts.size()) + " quasi-trivial quandles";
  if (certified < nontrivial)
    o.detail += "; of the uncertified, " + std::to_string(unlinked) + " have 2 components and linking number 0";
  if (!bad.empty()) o.detail += "; " + join(bad, "; ");
  return o;
}

Outcome structure_suite() {
  std::vector<std::string> fails;
  for (int n = 1; n <= 20; ++n) {
    ValidationReport r = verify_quandle(make_dihedral(n).under_table());
    if (!r.valid || !r.kei || !oracle::quandle_ok(make_dihedral(n).under_table()))
      fails.push_back("R" + std::to_string(n));
  }
  if (!is_quasi_trivial(make_dihedral(4)).quasi_trivial) fails.push_back("R4 not quasi-trivial");
  if (is_quasi_trivial(make_dihedral(6)).quasi_trivial) fails.push_back("R6 quasi-trivial");
  FiniteBiquandle q8 = catalog_structure("Q8-conj");
  std::multiset<size_t> sizes;
  for (const auto& orb : orbit_decomposition(q8).orbits) sizes.insert(orb.size());
  if (!is_quasi_trivial(q8).quasi_trivial || sizes != std::multiset<size_t>{1, 1, 2, 2, 2}) fails.push_back("Q8");
  FiniteBiquandle a = catalog_structure("alex4-t1-s3");
  if (!verify_biquandle(a).valid ||
      orbit_decomposition(a).orbits != std::vector<std::vector<int>>{{0, 2}, {1, 3}})
    fails.push_back("alex4-t1-s3 orbits");
  FiniteBiquandle x = catalog_structure("qt4");
  if (!verify_biquandle(x).valid || !is_quasi_trivial(x).quasi_trivial) fails.push_back("qt4");
  return {fails.empty(), fails.empty() ? "R1..R20 kei, R4 QT, R6 not, Q8 orbits 1,1,2,2,2, {1,3},{2,4}, qt4 QT"
                                       : "failed: " + join(fails, ", ")};
}

Outcome homological() {
  long tuples = 0, nonzero = 0;
  for (const auto& name : catalog_structure_names()) {
    FiniteBiquandle b = catalog_structure(name);
    const int n = b.size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        ++tuples;
        nonzero += !boundary(b, boundary(b, Tuple{x, y})).empty();
        for (int z = 0; z < n; ++z) {
          ++tuples;
          nonzero += !boundary(b, boundary(b, Tuple{x, y, z})).empty();
        }
      }
  }
  std::vector<std::string> bad;
  for (const auto& name : catalog_cocycle_names()) {
    CatalogCocycle c = catalog_cocycle(name);
    FiniteBiquandle b = catalog_structure(c.structure);
    if (!is_cocycle2(c.phi, b).cocycle || !is_quasi_trivial_cochain(c.phi, b)) bad.push_back(name);
  }
  std::string detail = std::to_string(nonzero) + " nonzero ∂∂ over " + std::to_string(tuples) + " tuples; " +
                       std::to_string(catalog_cocycle_names().size() - bad.size()) + "/" +
                       std::to_string(catalog_cocycle_names().size()) + " cocycles pass";
  if (!bad.empty()) detail += " (failing: " + join(bad, ", ") + ")";
  return {nonzero == 0 && bad.empty() && catalog_cocycle_names().size() == 5, detail};
}

Outcome homotopy_invariance() {
  std::mt19937 rng(20261017);
  std::vector<LinkDiagram> pool;
  for (const auto& name : table_link_names()) pool.push_back(catalog_link(name));
  for (const auto& name : {"trefoil", "T24", "hopf"}) pool.push_back(catalog_link(name));
  for_each_pretzel(3, 3, [&](const PretzelSpec& p) { pool.push_back(pretzel_diagram(p)); });
  for (int i = 0; i < 40; ++i) {
    BraidWord w{3, {}};
    for (int j = 0; j < 4 + static_cast<int>(rng() % 5); ++j) {
      int g = 1 + static_cast<int>(rng() % 2);
      w.letters.push_back(rng() % 2 ? g : -g);
    }
    pool.push_back(braid_closure(w));
  }
  std::vector<LinkDiagram> eligible;
  for (auto& d : pool)
    if (!d.self_crossings().empty()) eligible.push_back(d);
  std::vector<CatalogCocycle> pairs;
  for (const auto& name : catalog_cocycle_names()) pairs.push_back(catalog_cocycle(name));
  int trials = 0, broken = 0;
  std::string first;
  for (; trials < 500; ++trials) {
    const LinkDiagram& d = eligible[rng() % eligible.size()];
    auto self = d.self_crossings();
    int i = self[rng() % self.size()];
    LinkDiagram e = self_crossing_change(d, i);
    for (const auto& c : pairs) {
      FiniteBiquandle b = catalog_structure(c.structure);
      if (counting_invariant(d, b) != counting_invariant(e, b) ||
          !(cocycle_invariant(d, b, c.phi) == cocycle_invariant(e, b, c.phi))) {
        ++broken;
        if (first.empty()) first = "; first: " + emit_pd(d) + " crossing " + std::to_string(i + 1);
      }
    }
  }
  return {broken == 0, std::to_string(trials) + " trials x " + std::to_string(pairs.size()) +
                           " (X, phi) pairs from " + std::to_string(eligible.size()) + " diagrams, " +
                           std::to_string(broken) + " changed" + first};
}

}  // namespace

int main() {
  criterion(1, "counting invariants", 0, counting_invariants);
  criterion(2, "Borromean enhancement", 5, borromean_enhancement);
  criterion(3, "invariant table", 600, table_reproduction);
  criterion(4, "mirror sensitivity", 5, mirror_sensitivity);
  criterion(5, "braid transfer", 0, braid_transfer_check);
  criterion(6, "twist closed forms", 1, closed_forms);
  criterion(7, "pretzel classifier soundness", 300, pretzel_soundness);
  criterion(8, "structure and axiom suite", 0, structure_suite);
  criterion(9, "homological properties", 30, homological);
  criterion(10, "link-homotopy invariance", 0, homotopy_invariance);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}

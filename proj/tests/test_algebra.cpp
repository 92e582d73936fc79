#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qtriv/algebra.hpp"
#include "qtriv/catalog.hpp"

using namespace qtriv;

namespace {

bool has_law(const ValidationReport& r, const std::string& law) {
  for (const auto& v : r.violations)
    if (v.law == law) return true;
  return false;
}

Table dihedral_table(int n) {
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = ((2 * y - x) % n + n) % n;
  return t;
}

}  // namespace

TEST_CASE("dihedral quandles are kei") {
  for (int n = 1; n <= 20; ++n) {
    ValidationReport r = verify_quandle(dihedral_table(n));
    CHECK(r.valid);
    CHECK(r.kei);
    CHECK(make_dihedral(n).under_table() == dihedral_table(n));
  }
}

TEST_CASE("trivial quandle is a kei") {
  for (int n = 1; n <= 6; ++n) {
    ValidationReport r = verify_quandle(make_trivial(n).under_table());
    CHECK(r.valid);
    CHECK(r.kei);
  }
}

TEST_CASE("broken R4 is rejected with witnesses") {
  Table t = dihedral_table(4);
  t[0][1] = 0;
  ValidationReport r = verify_quandle(t);
  CHECK_FALSE(r.valid);
  CHECK(has_law(r, "right-invertibility"));
  CHECK(has_law(r, "right-distributivity"));
  CHECK_FALSE(oracle::quandle_ok(t));
}

TEST_CASE("out-of-range entry is a structural error") {
  Table t = dihedral_table(4);
  t[2][3] = 7;
  CHECK_THROWS_AS(verify_quandle(t), StructureError);
  CHECK_THROWS_AS(parse_operation_table("2\n1 3\n2 2\n"), StructureError);
  CHECK_THROWS_AS(parse_operation_table("2\n1 1\n2\n"), StructureError);
}

TEST_CASE("Alexander biquandle Z4 t=1 s=3 matches its block matrix") {
  FiniteBiquandle b = catalog_structure("alex4-t1-s3");
  FiniteBiquandle printed = parse_operation_table(
      "4\n"
      "3 1 3 1  3 3 3 3\n"
      "4 2 4 2  2 2 2 2\n"
      "1 3 1 3  1 1 1 1\n"
      "2 4 2 4  4 4 4 4\n");
  CHECK(b == printed);
  CHECK(verify_biquandle(b).valid);
  OrbitDecomposition o = orbit_decomposition(b);
  CHECK(o.orbits == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK_FALSE(is_quasi_trivial(b).quasi_trivial);
}

TEST_CASE("Alexander biquandle Z3 t=1 s=2") {
  FiniteBiquandle printed = parse_operation_table(
      "3\n"
      "2 3 1  2 2 2\n"
      "3 1 2  1 1 1\n"
      "1 2 3  3 3 3\n");
  CHECK(make_alexander_biquandle(3, 1, 2) == printed);
  CHECK(verify_biquandle(printed).valid);
}

TEST_CASE("over-column made non-bijective is rejected") {
  FiniteBiquandle b = catalog_structure("alex4-t1-s3");
  Table u = b.under_table(), o = b.over_table();
  o[1][0] = o[0][0];
  ValidationReport r = verify_biquandle(FiniteBiquandle(u, o));
  CHECK_FALSE(r.valid);
  CHECK(has_law(r, "over-column-bijectivity"));
  CHECK_FALSE(oracle::biquandle_ok(u, o));
}

TEST_CASE("constant action with the identity is the trivial biquandle") {
  FiniteBiquandle b = make_constant_action({0, 1, 2});
  CHECK(verify_biquandle(b).valid);
  CHECK(is_trivial_biquandle(b));
  CHECK(b.under_table() == make_trivial(3).under_table());
  CHECK(b.over_table() == make_trivial(3).under_table());
  FiniteBiquandle c = make_constant_action({1, 2, 0});
  CHECK(verify_biquandle(c).valid);
  CHECK_THROWS_AS(make_constant_action({0, 0, 1}), StructureError);
}

TEST_CASE("orbits of R6") {
  OrbitDecomposition o = orbit_decomposition(make_dihedral(6));
  CHECK(o.orbits == std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}});
}

TEST_CASE("quasi-triviality of dihedral quandles") {
  CHECK(is_quasi_trivial(make_dihedral(4)).quasi_trivial);
  QuasiTrivialResult r6 = is_quasi_trivial(make_dihedral(6));
  CHECK_FALSE(r6.quasi_trivial);
  REQUIRE(r6.witness);
  CHECK(*r6.witness == std::make_pair(0, 2));
  CHECK(make_dihedral(6).under(0, 2) == 4);
  for (int n = 3; n <= 8; ++n) CHECK_FALSE(is_quasi_trivial(make_dihedral(2 * n)).quasi_trivial);
}

TEST_CASE("Q8 conjugation quandle") {
  FiniteBiquandle q = make_conj(quaternion_group());
  CHECK(verify_quandle(q.under_table()).valid);
  OrbitDecomposition o = orbit_decomposition(q);
  std::vector<size_t> sizes;
  for (const auto& orb : o.orbits) sizes.push_back(orb.size());
  CHECK(sizes == std::vector<size_t>{1, 1, 2, 2, 2});
  CHECK(q.label(o.orbits[2][0]) == "i");
  CHECK(q.label(o.orbits[2][1]) == "-i");
  CHECK(is_quasi_trivial(q).quasi_trivial);
}

// Conj(G) is quasi-trivial iff x commutes with every conjugate of x.
TEST_CASE("conjugation quandle quasi-triviality matches the commutator test") {
  for (const GroupTable& g : {quaternion_group(), symmetric_group3()}) {
    const int n = static_cast<int>(g.mult.size());
    int e = 0;
    for (int a = 0; a < n; ++a)
      if (g.mult[a][a] == a) e = a;
    auto inv = [&](int a) {
      for (int b = 0; b < n; ++b)
        if (g.mult[a][b] == e) return b;
      return -1;
    };
    bool engel = true;
    for (int x = 0; x < n; ++x)
      for (int h = 0; h < n; ++h) {
        int c = g.mult[g.mult[inv(h)][x]][h];
        if (g.mult[x][c] != g.mult[c][x]) engel = false;
      }
    CHECK(is_quasi_trivial(make_conj(g)).quasi_trivial == engel);
  }
  CHECK_FALSE(is_quasi_trivial(make_conj(symmetric_group3())).quasi_trivial);
}

TEST_CASE("core quandles are kei") {
  for (const GroupTable& g : {quaternion_group(), symmetric_group3()}) {
    ValidationReport r = verify_quandle(make_core(g).under_table());
    CHECK(r.valid);
    CHECK(r.kei);
  }
}

TEST_CASE("invalid Cayley table is rejected") {
  GroupTable g = symmetric_group3();
  std::swap(g.mult[1][2], g.mult[1][3]);
  CHECK_THROWS_AS(make_conj(g), StructureError);
}

TEST_CASE("Alexander quandle mod k: pair law against polynomial arithmetic") {
  for (int k = 1; k <= 6; ++k) {
    FiniteBiquandle q = make_alexander_quandle_mod(k);
    REQUIRE(q.size() == k * k);
    CHECK(verify_quandle(q.under_table()).valid);
    for (int x = 0; x < k * k; ++x)
      for (int y = 0; y < k * k; ++y) {
        auto px = oracle::from_pair(x / k, x % k, k), py = oracle::from_pair(y / k, y % k, k);
        auto [a, b] = oracle::to_pair(oracle::tp_tri(px, py, k), k);
        CHECK(q.under(x, y) == a * k + b);
      }
  }
  // 0 ⊳ 1 = 1 - t
  for (int k = 2; k <= 8; ++k) {
    FiniteBiquandle q = make_alexander_quandle_mod(k);
    CHECK(q.under(0, 1 * k + 0) == 0 * k + 1);
  }
}

TEST_CASE("Alexander quandle mod k: orbits are the residues of a") {
  for (int k = 2; k <= 6; ++k) {
    FiniteBiquandle q = make_alexander_quandle_mod(k);
    OrbitDecomposition o = orbit_decomposition(q);
    for (int x = 0; x < k * k; ++x)
      for (int y = 0; y < k * k; ++y) CHECK(o.same_orbit(x, y) == (x / k == y / k));
    CHECK(is_quasi_trivial(q).quasi_trivial);
  }
}

TEST_CASE("Alexander biquandle rejects non-units") {
  CHECK_THROWS_AS(make_alexander_biquandle(4, 2, 1), StructureError);
  CHECK_THROWS_AS(make_alexander_biquandle(6, 1, 3), StructureError);
}

TEST_CASE("fixed biquandles") {
  FiniteBiquandle qt4 = catalog_structure("qt4");
  CHECK(verify_biquandle(qt4).valid);
  CHECK(is_quasi_trivial(qt4).quasi_trivial);
  CHECK(orbit_decomposition(qt4).orbits == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  FiniteBiquandle qt5 = catalog_structure("qt5");
  CHECK(verify_biquandle(qt5).valid);
  CHECK(is_quasi_trivial(qt5).quasi_trivial);
  FiniteBiquandle mir = catalog_structure("qt4-mirror");
  CHECK(verify_biquandle(mir).valid);
  CHECK(is_quasi_trivial(mir).quasi_trivial);
}

TEST_CASE("catalog structures: valid, orbit restrictions valid, quasi-triviality by restriction") {
  for (const auto& name : catalog_structure_names()) {
    CAPTURE(name);
    FiniteBiquandle b = catalog_structure(name);
    CHECK(verify_biquandle(b).valid);
    CHECK(oracle::biquandle_ok(b.under_table(), b.over_table()));
    if (b.over_is_trivial()) CHECK(verify_quandle(b.under_table()).valid);
    OrbitDecomposition o = orbit_decomposition(b);
    bool all_trivial = true;
    for (const auto& orb : o.orbits) {
      FiniteBiquandle r = restrict_to(b, orb);
      CHECK(verify_biquandle(r).valid);
      all_trivial = all_trivial && is_trivial_biquandle(r);
    }
    CHECK(is_quasi_trivial(b).quasi_trivial == all_trivial);
    // round trip through the text format
    CHECK(parse_operation_table(write_operation_table(b)) == b);
  }
}

TEST_CASE("orbits are closed under every column map") {
  for (const auto& name : catalog_structure_names()) {
    FiniteBiquandle b = catalog_structure(name);
    OrbitDecomposition o = orbit_decomposition(b);
    for (int x = 0; x < b.size(); ++x)
      for (int y = 0; y < b.size(); ++y) {
        CHECK(o.same_orbit(x, b.under(x, y)));
        CHECK(o.same_orbit(x, b.over(x, y)));
      }
    for (size_t i = 0; i < o.orbits.size(); ++i) CHECK(o.orbit_of[o.orbits[i][0]] == static_cast<int>(i));
  }
}

TEST_CASE("random perturbations of valid tables are caught") {
  std::mt19937 rng(7);
  int rejected = 0, trials = 0;
  for (const auto& name : {"qt4", "qt5", "alex4-t1-s3", "R5", "Q8-conj", "alex-mod3"}) {
    FiniteBiquandle b = catalog_structure(name);
    const int n = b.size();
    for (int rep = 0; rep < 40; ++rep) {
      Table u = b.under_table(), o = b.over_table();
      std::uniform_int_distribution<int> pick(0, n - 1);
      Table& t = rep % 2 ? u : o;
      int x = pick(rng), y = pick(rng), v = pick(rng);
      if (t[x][y] == v) continue;
      t[x][y] = v;
      ++trials;
      bool expect = oracle::biquandle_ok(u, o);
      bool got = verify_biquandle(FiniteBiquandle(u, o)).valid;
      CHECK(got == expect);
      if (!got) ++rejected;
    }
  }
  CHECK(rejected == trials);  // a single changed entry always breaks a column bijection
}

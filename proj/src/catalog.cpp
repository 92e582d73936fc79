#include "qtriv/catalog.hpp"

#include <cctype>
#include <map>
#include <regex>
#include <sstream>
#include <utility>

namespace qtriv {

namespace {

const char* const kLinkTable =
#include "link_table.inc"
    ;

struct LinkEntry {
  std::string name, code;
};

const std::vector<LinkEntry>& link_entries() {
  static const std::vector<LinkEntry> entries = [] {
    std::vector<LinkEntry> out;
    std::istringstream in(kLinkTable);
    std::string line;
    while (std::getline(in, line)) {
      size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      size_t gap = line.find_first_of(" \t", start);
      if (gap == std::string::npos) continue;
      size_t code = line.find_first_not_of(" \t", gap);
      size_t end = line.find_last_not_of(" \t\r");
      out.push_back({line.substr(start, gap - start), line.substr(code, end + 1 - code)});
    }
    return out;
  }();
  return entries;
}

// Block matrices [under | over], 1-based.
const std::map<std::string, std::string>& fixed_tables() {
  static const std::map<std::string, std::string> tables = {
      {"qt4",
       "4\n"
       "1 1 1 1  1 1 2 2\n"
       "2 2 2 2  2 2 1 1\n"
       "4 4 3 3  4 4 3 3\n"
       "3 3 4 4  3 3 4 4\n"},
      {"qt5",
       "5\n"
       "1 1 1 2 3  1 1 1 1 3\n"
       "2 2 2 3 1  2 2 2 2 1\n"
       "3 3 3 1 2  3 3 3 3 2\n"
       "4 4 4 4 4  4 4 4 4 4\n"
       "5 5 5 5 5  5 5 5 5 5\n"},
      {"qt4-mirror",
       "4\n"
       "1 1 2 2  1 1 2 2\n"
       "2 2 1 1  2 2 1 1\n"
       "3 3 3 3  4 4 3 3\n"
       "4 4 4 4  3 3 4 4\n"},
  };
  return tables;
}

struct CocycleEntry {
  std::string structure;
  std::string text;
};

const std::vector<std::pair<std::string, CocycleEntry>>& cocycle_entries() {
  static const std::vector<std::pair<std::string, CocycleEntry>> entries = {
      {"qt4-borromean", {"qt4", "3; (3,2)=1; (4,2)=1"}},
      {"qt5-phi1", {"qt5", "3; (2,4)=2; (2,5)=2; (3,4)=2; (4,5)=2; (5,2)=1"}},
      // The (4,3) term completes (4,1), (4,2); without it the cochain is not a cocycle.
      {"qt5-phi2",
       {"qt5", "3; (2,5)=2; (3,4)=2; (3,5)=2; (4,1)=2; (4,2)=2; (4,3)=2; (4,5)=2; (5,1)=2; (5,4)=2"}},
      {"qt5-phi3",
       {"qt5",
        "3; (1,5)=1; (3,4)=2; (4,1)=1; (4,2)=1; (4,3)=1; (4,5)=2; (5,1)=1; (5,2)=2; (5,3)=2"}},
      {"qt4-mirror-phi",
       {"qt4-mirror", "8; (1,4)=3; (2,3)=6; (2,4)=1; (3,1)=2; (3,2)=4; (4,1)=2; (4,2)=4"}},
  };
  return entries;
}

int parse_positive(const std::string& s, const std::string& name) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size() && v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw CatalogError("unknown structure: " + name);
}

}  // namespace

FiniteBiquandle catalog_structure(const std::string& name) {
  auto it = fixed_tables().find(name);
  if (it != fixed_tables().end()) return parse_operation_table(it->second);
  if (name == "alex4-t1-s3") return make_alexander_biquandle(4, 1, 3);
  if (name == "Q8-conj") return make_conj(quaternion_group());
  if (name == "S3-conj") return make_conj(symmetric_group3());
  if (name == "Q8-core") return make_core(quaternion_group());
  if (name == "S3-core") return make_core(symmetric_group3());

  std::smatch m;
  static const std::regex dihedral(R"(R(\d+))"), trivial(R"(trivial(\d+))"),
      alex_mod(R"(alex-mod(\d+))"), alex(R"(alex(\d+)-t(-?\d+)-s(-?\d+))");
  if (std::regex_match(name, m, dihedral)) return make_dihedral(parse_positive(m[1], name));
  if (std::regex_match(name, m, trivial)) return make_trivial(parse_positive(m[1], name));
  if (std::regex_match(name, m, alex_mod)) return make_alexander_quandle_mod(parse_positive(m[1], name));
  if (std::regex_match(name, m, alex))
    return make_alexander_biquandle(parse_positive(m[1], name), std::stoi(m[2]), std::stoi(m[3]));
  throw CatalogError("unknown structure: " + name);
}

std::vector<std::string> catalog_structure_names() {
  return {"trivial1", "trivial2", "trivial3", "R3",       "R4",          "R5",
          "R6",       "R8",       "Q8-conj",  "S3-conj",  "S3-core",     "alex-mod2",
          "alex-mod3", "alex-mod4", "alex4-t1-s3", "alex5-t2-s3", "qt4", "qt5",
          "qt4-mirror"};
}

std::vector<std::string> catalog_link_names() {
  std::vector<std::string> out;
  for (const auto& e : link_entries()) out.push_back(e.name);
  return out;
}

std::vector<std::string> table_link_names() {
  std::vector<std::string> out;
  for (const auto& e : link_entries())
    if (e.name.size() > 1 && e.name[0] == 'L' && std::isdigit(static_cast<unsigned char>(e.name[1])))
      out.push_back(e.name);
  return out;
}

std::string catalog_link_code(const std::string& name) {
  for (const auto& e : link_entries())
    if (e.name == name) return e.code;
  throw CatalogError("unknown link: " + name);
}

LinkDiagram catalog_link(const std::string& name) { return parse_link(catalog_link_code(name)); }

std::vector<std::string> catalog_cocycle_names() {
  std::vector<std::string> out;
  for (const auto& e : cocycle_entries()) out.push_back(e.first);
  return out;
}

CatalogCocycle catalog_cocycle(const std::string& name) {
  for (const auto& [n, e] : cocycle_entries())
    if (n == name) {
      FiniteBiquandle b = catalog_structure(e.structure);
      return {e.structure, parse_cochain(e.text, b.size())};
    }
  throw CatalogError("unknown cocycle: " + name);
}

}  // namespace qtriv

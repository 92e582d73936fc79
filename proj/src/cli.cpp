#include "qtriv/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "qtriv/catalog.hpp"
#include "qtriv/coloring.hpp"
#include "qtriv/enhancement.hpp"
#include "qtriv/pretzel.hpp"

namespace qtriv {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool is_file(const std::string& s) {
  std::error_code ec;
  return std::filesystem::is_regular_file(s, ec);
}

FiniteBiquandle resolve_structure(const std::string& s) {
  if (is_file(s)) return parse_operation_table(read_file(s));
  return catalog_structure(s);
}

LinkDiagram resolve_link(const std::string& s) {
  for (const auto& n : catalog_link_names())
    if (n == s) return catalog_link(s);
  if (is_file(s)) return parse_link(read_file(s));
  size_t i = s.find_first_not_of(" \t");
  if (i != std::string::npos && (s.compare(i, 2, "PD") == 0 || s.compare(i, 2, "BR") == 0 ||
                                 s.compare(i, 2, "P(") == 0))
    return parse_link(s);
  throw CatalogError("unknown link: " + s);
}

Cochain2 resolve_cocycle(const std::string& s, const FiniteBiquandle& b) {
  for (const auto& n : catalog_cocycle_names())
    if (n == s) {
      CatalogCocycle c = catalog_cocycle(s);
      if (c.phi.size() != b.size())
        throw std::invalid_argument("cocycle " + s + " belongs to " + c.structure);
      return c.phi;
    }
  if (is_file(s)) return parse_cochain(read_file(s), b.size());
  if (s.find(';') != std::string::npos) return parse_cochain(s, b.size());
  throw CatalogError("unknown cocycle: " + s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string join_elements(const std::vector<int>& xs, const FiniteBiquandle& b) {
  std::string s = "{";
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + b.label(xs[i]);
  return s + "}";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-trivial quandle and biquandle invariants of links"};
  app.require_subcommand(1);

  std::string structure, link, cocycle, pretzel, cocycle_list, link_list;
  long long modulus = 0;
  bool quasi_trivial = false, mod_coboundaries = false, all_orientations = false, csv = false,
       seed_dump = false;

  auto* verify = app.add_subcommand("verify", "check the axioms of a structure");
  verify->add_option("structure", structure, "catalog name or table file")->required();

  auto* orbits = app.add_subcommand("orbits", "orbit decomposition and quasi-triviality");
  orbits->add_option("structure", structure)->required();

  auto* color = app.add_subcommand("color", "count colorings of a link");
  color->add_option("link", link, "catalog name, file, or PD[...] / BR[...] / P(...)")->required();
  color->add_option("structure", structure)->required();
  color->add_flag("--seed-dump", seed_dump, "also print every coloring");
  color->add_flag("--csv", csv, "print colorings as CSV (with --seed-dump)");

  auto* cocycles = app.add_subcommand("cocycles", "search 2-cocycles over Z_n");
  cocycles->add_option("structure", structure)->required();
  cocycles->add_option("--mod", modulus, "coefficient modulus n")->required()->check(CLI::Range(2LL, 1LL << 30));
  cocycles->add_flag("--quasi-trivial", quasi_trivial, "restrict to quasi-trivial cochains");
  cocycles->add_flag("--mod-coboundaries", mod_coboundaries, "one cocycle per coboundary class");
  cocycles->add_flag("--csv", csv);

  auto* invariant = app.add_subcommand("invariant", "cocycle-enhanced invariant of a link");
  invariant->add_option("link", link)->required();
  invariant->add_option("structure", structure)->required();
  invariant->add_option("cocycle", cocycle, "catalog name, file, or 'n; (x,y)=c; ...'")->required();
  invariant->add_flag("--all-orientations", all_orientations);
  invariant->add_flag("--csv", csv);

  auto* classify_cmd = app.add_subcommand("classify", "link-homotopy class of a pretzel link");
  classify_cmd->add_option("pretzel", pretzel, "P(p1,...,pn)")->required();
  classify_cmd->add_flag("--csv", csv);

  auto* table = app.add_subcommand("table", "invariant table over links and cocycles");
  table->add_option("structure", structure)->required();
  table->add_option("cocycles", cocycle_list, "comma-separated cocycles")->required();
  table->add_option("--links", link_list, "comma-separated links (default: the built-in table)");
  table->add_flag("--all-orientations", all_orientations, "list the values over all orientations");
  table->add_flag("--csv", csv);

  auto* list = app.add_subcommand("list", "names known to the catalog");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*verify) {
      FiniteBiquandle b = resolve_structure(structure);
      ValidationReport r = verify_biquandle(b);
      out << "biquandle: " << r.describe();
      bool valid = r.valid;
      if (b.over_is_trivial()) {
        ValidationReport q = verify_quandle(b.under_table());
        out << "quandle: " << q.describe();
        valid = valid && q.valid;
      }
      if (valid) {
        QuasiTrivialResult qt = is_quasi_trivial(b);
        out << "quasi-trivial: " << (qt.quasi_trivial ? "yes" : "no") << '\n';
      }
      return valid ? kExitOk : kExitDomain;
    }
    if (*orbits) {
      FiniteBiquandle b = resolve_structure(structure);
      OrbitDecomposition o = orbit_decomposition(b);
      for (size_t i = 0; i < o.orbits.size(); ++i)
        out << "O" << i + 1 << " = " << join_elements(o.orbits[i], b) << '\n';
      QuasiTrivialResult qt = is_quasi_trivial(b, o);
      out << "quasi-trivial: " << (qt.quasi_trivial ? "yes" : "no");
      if (qt.witness)
        out << " (x=" << b.label(qt.witness->first) << ", y=" << b.label(qt.witness->second)
            << " lie in one orbit and y moves x)";
      out << '\n';
      return kExitOk;
    }
    if (*color) {
      FiniteBiquandle b = resolve_structure(structure);
      LinkDiagram d = resolve_link(link);
      out << counting_invariant(d, b) << '\n';
      if (seed_dump) {
        auto all = enumerate_colorings(d, b);
        if (csv) {
          out << colorings_csv(all);
        } else {
          for (const auto& f : all) {
            for (size_t i = 0; i < f.color_of.size(); ++i) out << (i ? " " : "") << f.color_of[i] + 1;
            for (int c : f.loop_colors) out << " | " << c + 1;
            out << '\n';
          }
        }
      }
      return kExitOk;
    }
    if (*cocycles) {
      FiniteBiquandle b = resolve_structure(structure);
      SearchOptions opt;
      opt.quasi_trivial = quasi_trivial;
      opt.mod_coboundaries = mod_coboundaries;
      CocycleSearchResult r = search_cocycles2(b, modulus, opt);
      out << "unknowns: " << r.variables.size() << '\n';
      out << "cocycle group order: " << r.group_order << '\n';
      out << "generators:\n";
      for (size_t i = 0; i < r.generators.size(); ++i)
        out << "  order " << r.orders[i] << ": " << format_cochain(r.generators[i]) << '\n';
      if (mod_coboundaries && !r.enumerated)
        throw ResourceError("cocycle group too large to split into coboundary classes");
      if (r.enumerated) {
        out << (mod_coboundaries ? "classes: " : "elements: ") << r.elements.size() << '\n';
        for (const auto& phi : r.elements)
          out << "  " << (csv ? format_cochain(phi) : format_chi(phi)) << '\n';
      }
      return kExitOk;
    }
    if (*invariant) {
      FiniteBiquandle b = resolve_structure(structure);
      LinkDiagram d = resolve_link(link);
      Cochain2 phi = resolve_cocycle(cocycle, b);
      if (!all_orientations) {
        InvariantPolynomial p = cocycle_invariant(d, b, phi);
        out << (csv ? p.to_pairs() : p.to_string()) << '\n';
        return kExitOk;
      }
      auto polys = cocycle_invariant_orientations(d, b, phi);
      for (size_t mask = 0; mask < polys.size(); ++mask)
        out << "orientation " << mask << ": " << (csv ? polys[mask].to_pairs() : polys[mask].to_string())
            << '\n';
      return kExitOk;
    }
    if (*classify_cmd) {
      PretzelSpec p = parse_pretzel(pretzel);
      HomotopyClass h = classify(p);
      std::optional<Certificate> cert;
      if (h.verdict == Verdict::kNontrivial && h.components >= 2) cert = distinguishing_certificate(p);
      if (csv) {
        out << "pretzel,verdict,branch,N,E,modulus,pretzel_count,unlink_count\n";
        out << '"' << format_pretzel(p) << "\"," << to_string(h.verdict) << ',' << h.reason << ','
            << h.components << ',' << h.even_count << ',';
        if (cert) out << cert->modulus << ',' << cert->pretzel_count << ',' << cert->unlink_count;
        else out << ",,";
        out << '\n';
        return kExitOk;
      }
      out << to_string(h.verdict) << '\n';
      out << "branch: " << h.reason << '\n';
      out << "N = " << h.components << ", E = " << h.even_count << '\n';
      if (cert)
        out << "certificate: modulus " << cert->modulus << ", " << cert->pretzel_count
            << " colorings vs " << cert->unlink_count << " for the unlink\n";
      else if (h.verdict == Verdict::kNontrivial && h.components >= 2)
        out << "certificate: none found within the modulus schedule\n";
      return kExitOk;
    }
    if (*table) {
      FiniteBiquandle b = resolve_structure(structure);
      std::vector<NamedCochain> cols;
      for (const auto& c : split(cocycle_list, ',')) cols.push_back({c, resolve_cocycle(c, b)});
      std::vector<std::string> names = link_list.empty() ? table_link_names() : split(link_list, ',');
      std::vector<NamedDiagram> rows;
      for (const auto& n : names) rows.push_back({n, resolve_link(n)});
      if (!all_orientations) {
        InvariantTable t = invariant_table(rows, b, cols);
        out << (csv ? t.to_csv() : t.to_text());
        return kExitOk;
      }
      if (csv) out << "link,cocycle,values\n";
      for (const auto& r : rows) {
        auto variants = enumerate_orientations(r.diagram);
        for (const auto& c : cols) {
          std::set<std::string> seen;
          std::string joined;
          for (const auto& v : variants) {
            std::string s = cocycle_invariant(v, b, c.phi).to_string();
            if (seen.insert(s).second) joined += (joined.empty() ? "" : " | ") + s;
          }
          out << r.name << (csv ? "," : "  ") << c.name << (csv ? "," : "  ") << joined << '\n';
        }
      }
      return kExitOk;
    }
    if (*list) {
      out << "structures:";
      for (const auto& s : catalog_structure_names()) out << ' ' << s;
      out << "\n  (also R<n>, trivial<n>, alex-mod<k>, alex<m>-t<t>-s<s>, Q8-core)\n";
      out << "links:";
      for (const auto& s : catalog_link_names()) out << ' ' << s;
      out << "\ncocycles:";
      for (const auto& s : catalog_cocycle_names()) out << ' ' << s << " [" << catalog_cocycle(s).structure << ']';
      out << '\n';
      return kExitOk;
    }
  } catch (const CatalogError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnknownName;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::length_error& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range and friends: bad input values
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace qtriv

#pragma once

#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "noncomm/formulas.hpp"
#include "noncomm/group_spec.hpp"
#include "noncomm/json_io.hpp"
#include "noncomm/spectrum.hpp"

namespace noncomm {

/// One stored table row: the printed factored polynomial, spectrum and
/// energy, machine-comparable. `energy` is the adjacency energy for table 1
/// and the printed Laplacian energy for table 2.
struct StoredTableRow {
  std::string anchor;
  std::string group_spec;
  std::string display_charpoly;
  FactoredPoly charpoly;
  Spectrum eigenvalues;
  EnergyValue energy;
};

struct StoredTables {
  std::vector<StoredTableRow> table1;
  std::vector<StoredTableRow> table2;
};

namespace detail {

inline ExactRoot root_from_table_json(const Json& j) {
  if (j.contains("int")) {
    return ExactRoot::integer(Int(j.at("int").get<long long>()));
  }
  const auto& s = j.at("surd");
  // stored as the full value a + b sqrt(d); ExactRoot keeps (.)/2 form
  return ExactRoot::surd(Int(2 * s.at("a").get<long long>()),
                         Int(2 * s.at("b").get<long long>()),
                         Int(s.at("d").get<long long>()));
}

inline EnergyValue energy_from_table_json(const Json& j) {
  EnergyValue e;
  e.rational = Rat(j.at("rat").get<std::string>());
  if (j.contains("surds")) {
    for (const auto& s : j.at("surds")) {
      e.surds[Int(s.at("d").get<long long>())] =
          Rat(s.at("coef").get<std::string>());
    }
  }
  e.refresh_numeric();
  e.bound = 1e-14 * std::max(1.0, std::abs(e.numeric));
  return e;
}

inline StoredTableRow row_from_json(const Json& j, bool laplacian_table) {
  StoredTableRow row;
  row.anchor = j.at("anchor").get<std::string>();
  row.group_spec = j.at("group").get<std::string>();
  row.display_charpoly = j.at("display_charpoly").get<std::string>();
  for (const auto& f : j.at("charpoly_factors")) {
    std::vector<Int> coeffs;
    for (const auto& c : f.at("coeffs")) {
      coeffs.emplace_back(c.get<long long>());
    }
    row.charpoly.push(IntPolynomial(std::move(coeffs)),
                      f.at("power").get<std::size_t>());
  }
  for (const auto& e : j.at("eigenvalues")) {
    row.eigenvalues.entries.emplace_back(root_from_table_json(e),
                                         e.at("m").get<std::size_t>());
  }
  row.eigenvalues.sort_entries();
  row.energy = energy_from_table_json(
      j.at(laplacian_table ? "laplacian_energy" : "energy"));
  return row;
}

}  // namespace detail

inline StoredTables load_paper_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open paper tables file: " + path);
  }
  Json j = Json::parse(in);
  StoredTables tables;
  for (const auto& r : j.at("table1")) {
    tables.table1.push_back(detail::row_from_json(r, false));
  }
  for (const auto& r : j.at("table2")) {
    tables.table2.push_back(detail::row_from_json(r, true));
  }
  return tables;
}

/// Resolves the tables file: explicit path, then NONCOMM_DATA, then the
/// compiled-in default, then a repo-relative fallback.
inline std::string paper_tables_path(const std::string& explicit_path = "") {
  if (!explicit_path.empty()) return explicit_path;
  if (const char* env = std::getenv("NONCOMM_DATA")) return env;
#ifdef NONCOMM_DATA_DIR
  return std::string(NONCOMM_DATA_DIR) + "/paper_tables.json";
#else
  return "data/paper_tables.json";
#endif
}

/// One regenerated table cell: the stored value, the value recomputed from
/// scratch, and whether they agree. `documented` marks the odd-n Laplacian
/// energy rows whose printed value is known not to follow from the paper's
/// own definition; those flags are expected and do not fail reproduction.
struct TableCell {
  std::string column;
  std::string stored;
  std::string computed;
  bool match = false;
  bool documented = false;
};

struct TableRowResult {
  std::string anchor;
  std::string group;
  std::vector<TableCell> cells;

  bool clean(bool allow_documented = true) const {
    for (const auto& c : cells) {
      if (!c.match && !(allow_documented && c.documented)) return false;
    }
    return true;
  }
};

namespace detail {

inline bool same_monic_content(const IntPolynomial& stored_expanded,
                               const IntPolynomial& computed_monic) {
  return stored_expanded == computed_monic ||
         Int(-1) * stored_expanded == computed_monic;
}

}  // namespace detail

/// Regenerates one table-1 row from scratch (brute-force graph, exact
/// charpoly, exact spectrum, energy) and compares cell by cell.
inline TableRowResult reproduce_table1_row(const StoredTableRow& row,
                                           std::size_t cap = 10000) {
  TableRowResult out;
  out.anchor = row.anchor;
  out.group = row.group_spec;
  const FiniteGroup g = GroupSpec::parse(row.group_spec).build(cap);
  const Graph graph = noncommuting_graph(g);
  const IntPolynomial computed = charpoly(graph.adjacency_matrix());
  const Spectrum spectrum = assemble_exact_spectrum(computed);
  const EnergyValue e = energy_from_spectrum(spectrum);

  out.cells.push_back({"charpoly", row.display_charpoly,
                       computed.to_string(),
                       detail::same_monic_content(row.charpoly.expand(),
                                                  computed),
                       false});
  out.cells.push_back({"eigenvalues", row.eigenvalues.to_string(),
                       spectrum.to_string(), row.eigenvalues == spectrum,
                       false});
  const bool energy_match =
      e.exact && e.rational == row.energy.rational &&
      e.surds == row.energy.surds;
  out.cells.push_back({"energy", row.energy.to_string(), e.to_string(),
                       energy_match, false});
  return out;
}

/// Table-2 rows carry the documented odd-n discrepancy: the stored printed
/// LE is compared against the definition-based exact value; a mismatch that
/// equals the known corollary-vs-definition gap is flagged `documented`.
inline TableRowResult reproduce_table2_row(const StoredTableRow& row,
                                           std::size_t cap = 10000) {
  TableRowResult out;
  out.anchor = row.anchor;
  out.group = row.group_spec;
  const GroupSpec spec = GroupSpec::parse(row.group_spec);
  const FiniteGroup g = spec.build(cap);
  const Graph graph = noncommuting_graph(g);
  const IntPolynomial computed = charpoly(laplacian(graph).matrix);
  const Spectrum spectrum = assemble_exact_spectrum(computed);
  const EnergyValue le = laplacian_energy(graph);

  out.cells.push_back({"laplacian charpoly", row.display_charpoly,
                       computed.to_string(),
                       detail::same_monic_content(row.charpoly.expand(),
                                                  computed),
                       false});
  out.cells.push_back({"eigenvalues", row.eigenvalues.to_string(),
                       spectrum.to_string(), row.eigenvalues == spectrum,
                       false});

  const bool le_match = le.exact && le.rational == row.energy.rational &&
                        le.surds.empty() && row.energy.surds.empty();
  bool documented = false;
  if (!le_match && spec.kind() == GroupSpec::Kind::dihedral) {
    const int n = spec.parameter();
    documented = n % 2 == 1 &&
                 Rat(row.energy.rational) ==
                     dihedral_laplacian_energy_paper(n) &&
                 le.exact &&
                 le.rational == dihedral_laplacian_energy_definition(n);
  }
  TableCell le_cell{"laplacian energy", row.energy.to_string(),
                    le.to_string(), le_match, documented};
  out.cells.push_back(le_cell);
  return out;
}

}  // namespace noncomm

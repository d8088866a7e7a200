#ifndef FLAGFANO_REPORT_HPP
#define FLAGFANO_REPORT_HPP

#include "flagfano/blowup.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace flagfano
{

using Json = nlohmann::ordered_json;

/// Serialized JSON text: two-space indent, trailing newline. Parsing the
/// output and dumping again reproduces it byte for byte.
std::string dump_json(const Json &j);

Json to_json(const DivisorClass &d);
Json to_json(const CurveClass &k);
Json to_json(const NefCoordinates &n);

/// {input, betas, margins, verdict, anticanonical_big, anticanonical:{basis1, basis2},
///  cones?, facts:{gg_equals_nef, h_minus_e_big}}
Json classify_json(const FlagVariety &fv, const FanoReport &report, const ConeReport *cones = nullptr);
std::string classify_text(const FlagVariety &fv, const FanoReport &report, const ConeReport *cones = nullptr);

enum class TablePolicy
{
  MaximalParabolics,
  FullFlag,
  AllParabolics
};

struct TableRow
{
  TypeSpec type;
  ParabolicSubset parabolic;
  std::vector<int> complement;
  int dim = 0;
  BetaVector betas;
  /// Fano exactly for 2 <= c <= fano_max_codim (= min beta + 1).
  Integer fano_max_codim = 0;
  /// Weak-Fano-not-Fano boundary, min beta + 2.
  Integer weak_boundary_codim = 0;
};

/// One row per (type, parabolic); types in family order then rank,
/// parabolics in the order of all_parabolics / crossed node.
std::vector<TableRow> sweep_table(const std::vector<Family> &families, int max_rank, TablePolicy policy);

std::string table_text(const std::vector<TableRow> &rows);
Json table_json(const std::vector<TableRow> &rows);

std::string format_nodes(const std::vector<int> &nodes);
/// Parses "1,3" / "" / " 2 , 4 " into node indices; throws OutOfRange on junk.
std::vector<int> parse_nodes(const std::string &text);

} // namespace flagfano

#endif

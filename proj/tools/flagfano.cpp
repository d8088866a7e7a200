// flagfano: classify blow-ups of flag varieties along smooth Schubert centres.
//
// Exit codes: 0 success, 1 self-check failure, 2 usage or validation error.

#include "flagfano/report.hpp"
#include "flagfano/self_check.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace flagfano;

namespace
{

struct FlagArgs
{
  std::string type;
  int rank = 0;
  std::string parabolic;
  int codim = 0;
  std::string format = "text";
};

void add_flag_options(CLI::App *cmd, FlagArgs &a)
{
  cmd->add_option("--type", a.type, "Cartan family A..G")->required();
  cmd->add_option("--rank", a.rank, "rank of the simple type")->required();
  cmd->add_option("--parabolic", a.parabolic, "comma-separated S_P nodes (what P contains), Bourbaki numbering")->required();
  cmd->add_option("--codim", a.codim, "codimension c of the Schubert centre")->required();
  cmd->add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

FlagVariety make_flag(const FlagArgs &a)
{
  if (a.type.size() != 1)
    throw Error(ErrorCode::OutOfRange, "--type expects a single letter A..G");
  const TypeSpec spec{family_from_char(a.type[0]), a.rank};
  spec.validate();
  return FlagVariety(spec, ParabolicSubset(parse_nodes(a.parabolic)));
}

int run_classify(const FlagArgs &a, bool with_cones)
{
  const FlagVariety fv = make_flag(a);
  const FanoReport report = classify(fv, a.codim);
  ConeReport cones;
  if (with_cones)
  {
    cones = cone_report(fv, a.codim);
    const auto n = cones.intersection.rows();
    if (cones.intersection != IntMatrix::Identity(n, n))
    {
      std::cerr << "error: nef/Mori intersection matrix is not the identity\n";
      return 1;
    }
  }
  const ConeReport *c = with_cones ? &cones : nullptr;
  if (a.format == "json")
    std::cout << dump_json(classify_json(fv, report, c));
  else
    std::cout << classify_text(fv, report, c);
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Fano and weak-Fano classification of blow-ups of G/P along smooth Schubert varieties"};
  app.require_subcommand(1);

  FlagArgs classifyArgs, conesArgs;
  auto *classifyCmd = app.add_subcommand("classify", "beta values, margins, -K in both bases and the verdict");
  add_flag_options(classifyCmd, classifyArgs);
  auto *conesCmd = app.add_subcommand("cones", "nef and Mori cone generators with their intersection matrix");
  add_flag_options(conesCmd, conesArgs);

  std::string families;
  int maxRank = 0;
  bool maximal = false, fullFlag = false, allPars = false;
  std::string tableFormat = "text";
  auto *tableCmd = app.add_subcommand("table", "sweep beta values and Fano thresholds over types");
  tableCmd->add_option("--families", families, "comma-separated families, e.g. A,D,E")->required();
  tableCmd->add_option("--max-rank", maxRank, "largest rank to include (<= 8)")->required()->check(CLI::Range(1, 8));
  auto *policy = tableCmd->add_option_group("policy", "which parabolics to sweep");
  policy->add_flag("--maximal-parabolics", maximal, "one row per crossed node");
  policy->add_flag("--full-flag", fullFlag, "S_P empty");
  policy->add_flag("--all-parabolics", allPars, "every proper S_P");
  policy->require_option(1);
  tableCmd->add_option("--format", tableFormat, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto *checkCmd = app.add_subcommand("check", "run the invariant self-check suites");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try
  {
    if (*classifyCmd)
      return run_classify(classifyArgs, false);
    if (*conesCmd)
      return run_classify(conesArgs, true);
    if (*tableCmd)
    {
      std::vector<Family> fams;
      std::string token;
      std::istringstream is(families);
      while (std::getline(is, token, ','))
      {
        if (token.size() != 1)
          throw Error(ErrorCode::OutOfRange, "bad family '" + token + "'");
        fams.push_back(family_from_char(token[0]));
      }
      if (fams.empty())
        throw Error(ErrorCode::OutOfRange, "empty family list");
      const TablePolicy p = maximal ? TablePolicy::MaximalParabolics : fullFlag ? TablePolicy::FullFlag : TablePolicy::AllParabolics;
      const auto rows = sweep_table(fams, maxRank, p);
      if (tableFormat == "json")
        std::cout << dump_json(table_json(rows));
      else
        std::cout << table_text(rows);
      return 0;
    }
    if (*checkCmd)
      return run_self_check(std::cout) == 0 ? 0 : 1;
  }
  catch (const Error &e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

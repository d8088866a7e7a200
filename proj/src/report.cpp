#include "flagfano/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace flagfano
{

std::string dump_json(const Json &j) { return j.dump(2) + "\n"; }

namespace
{

Json int_array(const IntVector &v)
{
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    a.push_back(v[i]);
  return a;
}

Json node_values(const std::vector<int> &nodes, const std::vector<Integer> &values)
{
  Json a = Json::array();
  for (std::size_t k = 0; k < nodes.size(); ++k)
    a.push_back(Json{{"node", nodes[k]}, {"value", values[k]}});
  return a;
}

// "4 Bl*D_2 - 3 E_Z" style linear combination; zero terms dropped.
std::string combination(const std::vector<std::pair<Integer, std::string>> &terms)
{
  std::ostringstream os;
  bool first = true;
  for (const auto &[coef, name] : terms)
  {
    if (coef == 0)
      continue;
    if (first)
      os << (coef < 0 ? "-" : "");
    else
      os << (coef < 0 ? " - " : " + ");
    const Integer a = coef < 0 ? -coef : coef;
    if (a != 1)
      os << a << " ";
    os << name;
    first = false;
  }
  return first ? "0" : os.str();
}

std::vector<std::pair<Integer, std::string>> divisor_terms(const DivisorClass &d)
{
  std::vector<std::pair<Integer, std::string>> t;
  for (std::size_t k = 0; k < d.nodes.size(); ++k)
    t.emplace_back(d.pullback[static_cast<Eigen::Index>(k)], "Bl*D_" + std::to_string(d.nodes[k]));
  t.emplace_back(d.exceptional, "E_Z");
  return t;
}

std::vector<std::pair<Integer, std::string>> nef_terms(const NefCoordinates &n)
{
  std::vector<std::pair<Integer, std::string>> t;
  for (std::size_t k = 0; k < n.nodes.size(); ++k)
    t.emplace_back(n.per_node[static_cast<Eigen::Index>(k)], "Bl*D_" + std::to_string(n.nodes[k]));
  t.emplace_back(n.h_minus_e, "(H - E_Z)");
  return t;
}

std::vector<std::pair<Integer, std::string>> curve_terms(const CurveClass &k)
{
  std::vector<std::pair<Integer, std::string>> t;
  for (std::size_t i = 0; i < k.nodes.size(); ++i)
    t.emplace_back(k.tilde[static_cast<Eigen::Index>(i)], "C~_" + std::to_string(k.nodes[i]));
  t.emplace_back(k.e, "e");
  return t;
}

} // namespace

std::string format_nodes(const std::vector<int> &nodes)
{
  std::string s = "{";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    s += (i ? "," : "") + std::to_string(nodes[i]);
  return s + "}";
}

std::vector<int> parse_nodes(const std::string &text)
{
  std::vector<int> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ','))
  {
    const auto b = token.find_first_not_of(" \t");
    if (b == std::string::npos)
    {
      if (is.eof() && out.empty())
        break;
      throw Error(ErrorCode::OutOfRange, "empty entry in node list '" + text + "'");
    }
    const auto e = token.find_last_not_of(" \t");
    token = token.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try
    {
      v = std::stoi(token, &used);
    }
    catch (const std::exception &)
    {
      used = 0;
    }
    if (used != token.size())
      throw Error(ErrorCode::OutOfRange, "bad node '" + token + "'");
    out.push_back(v);
  }
  return out;
}

Json to_json(const DivisorClass &d)
{
  return Json{{"nodes", d.nodes}, {"pullback", int_array(d.pullback)}, {"exceptional", d.exceptional}};
}

Json to_json(const CurveClass &k)
{
  return Json{{"nodes", k.nodes}, {"tilde", int_array(k.tilde)}, {"e", k.e}};
}

Json to_json(const NefCoordinates &n)
{
  return Json{{"nodes", n.nodes}, {"per_node", int_array(n.per_node)}, {"h_minus_e", n.h_minus_e}};
}

Json classify_json(const FlagVariety &fv, const FanoReport &report, const ConeReport *cones)
{
  const RootSystem &rs = fv.root_system();
  Json j;
  j["input"] = Json{{"type", rs.spec().name()},
                    {"parabolic", fv.parabolic().nodes()},
                    {"complement", picard_basis(fv)},
                    {"dim", report.dim},
                    {"codim", report.codim}};
  j["betas"] = node_values(report.betas.nodes(), report.betas.values());
  j["margins"] = node_values(report.betas.nodes(), report.margins);
  j["verdict"] = to_string(report.verdict);
  j["anticanonical_big"] = to_string(report.anticanonical_big);
  j["anticanonical"] = Json{{"basis1", to_json(report.anticanonical.divisor)}, {"basis2", to_json(report.anticanonical.nef)}};
  if (cones)
  {
    Json nef = Json::array(), mori = Json::array(), matrix = Json::array();
    for (const auto &d : cones->nef_generators)
      nef.push_back(to_json(d));
    for (const auto &k : cones->mori_generators)
      mori.push_back(to_json(k));
    for (Eigen::Index i = 0; i < cones->intersection.rows(); ++i)
      matrix.push_back(int_array(cones->intersection.row(i).transpose()));
    j["cones"] = Json{{"nef", nef}, {"mori", mori}, {"intersection", matrix}};
  }
  const bool gg = cones ? cones->globally_generated_equals_nef : true;
  const bool big = cones ? cones->h_minus_e_is_big : true;
  j["facts"] = Json{{"gg_equals_nef", gg}, {"h_minus_e_big", big}};
  return j;
}

std::string classify_text(const FlagVariety &fv, const FanoReport &report, const ConeReport *cones)
{
  const RootSystem &rs = fv.root_system();
  std::ostringstream os;
  os << "type " << rs.spec().name() << "  S_P = " << format_nodes(fv.parabolic().nodes())
     << "  crossed S\\S_P = " << format_nodes(picard_basis(fv)) << "\n";
  os << "dim X = " << report.dim << "  codim c = " << report.codim << "\n\n";

  os << "  node  beta  margin  -K:Bl*D  -K:nef\n";
  for (int k = 0; k < report.betas.size(); ++k)
  {
    const auto kk = static_cast<std::size_t>(k);
    os << std::setw(6) << report.betas.nodes()[kk] << std::setw(6) << report.betas.values()[kk]
       << std::setw(8) << report.margins[kk] << std::setw(9) << report.anticanonical.divisor.pullback[k]
       << std::setw(8) << report.anticanonical.nef.per_node[k] << "\n";
  }
  os << "\n-K = " << combination(divisor_terms(report.anticanonical.divisor)) << "\n";
  os << "   = " << combination(nef_terms(report.anticanonical.nef)) << "\n";
  os << "verdict: " << to_string(report.verdict) << "\n";
  os << "anticanonical big: " << to_string(report.anticanonical_big) << "\n";

  if (cones)
  {
    os << "\nnef generators:\n";
    for (std::size_t i = 0; i < cones->nef_generators.size(); ++i)
      os << "  N" << i + 1 << " = " << combination(divisor_terms(cones->nef_generators[i])) << "\n";
    os << "mori generators:\n";
    for (std::size_t i = 0; i < cones->mori_generators.size(); ++i)
      os << "  M" << i + 1 << " = " << combination(curve_terms(cones->mori_generators[i])) << "\n";
    os << "intersection N x M:\n";
    for (Eigen::Index i = 0; i < cones->intersection.rows(); ++i)
    {
      os << " ";
      for (Eigen::Index j = 0; j < cones->intersection.cols(); ++j)
        os << " " << std::setw(2) << cones->intersection(i, j);
      os << "\n";
    }
  }
  os << "facts: globally generated = nef; H - E_Z big\n";
  return os.str();
}

std::vector<TableRow> sweep_table(const std::vector<Family> &families, int max_rank, TablePolicy policy)
{
  std::vector<TableRow> rows;
  for (const TypeSpec &spec : all_types_up_to(max_rank))
  {
    if (std::find(families.begin(), families.end(), spec.family) == families.end())
      continue;
    const RootSystem rs = build_root_system(spec);
    std::vector<ParabolicSubset> pars;
    switch (policy)
    {
    case TablePolicy::FullFlag:
      pars.emplace_back();
      break;
    case TablePolicy::MaximalParabolics:
      for (int node = 1; node <= spec.rank; ++node)
        pars.push_back(ParabolicSubset::maximal(spec.rank, node));
      break;
    case TablePolicy::AllParabolics:
      pars = all_parabolics(spec.rank);
      break;
    }
    for (const ParabolicSubset &par : pars)
    {
      const FlagVariety fv(rs, par);
      TableRow row;
      row.type = spec;
      row.parabolic = par;
      row.complement = picard_basis(fv);
      row.dim = dimension(fv);
      row.betas = beta_values(fv);
      row.fano_max_codim = row.betas.min() + 1;
      row.weak_boundary_codim = row.betas.min() + 2;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string table_text(const std::vector<TableRow> &rows)
{
  std::ostringstream os;
  os << std::left << std::setw(6) << "type" << std::setw(20) << "S_P" << std::setw(12) << "crossed" << std::right
     << std::setw(5) << "dim" << std::setw(10) << "fano_c<=" << std::setw(10) << "weak_c=" << "  betas\n";
  for (const TableRow &r : rows)
  {
    std::string betas;
    for (int k = 0; k < r.betas.size(); ++k)
      betas += (k ? " " : "") + std::to_string(r.betas.nodes()[static_cast<std::size_t>(k)]) + ":" +
               std::to_string(r.betas.values()[static_cast<std::size_t>(k)]);
    os << std::left << std::setw(6) << r.type.name() << std::setw(20) << format_nodes(r.parabolic.nodes())
       << std::setw(12) << format_nodes(r.complement) << std::right << std::setw(5) << r.dim << std::setw(10)
       << r.fano_max_codim << std::setw(10) << r.weak_boundary_codim << "  " << betas << "\n";
  }
  return os.str();
}

Json table_json(const std::vector<TableRow> &rows)
{
  Json a = Json::array();
  for (const TableRow &r : rows)
    a.push_back(Json{{"type", r.type.name()},
                     {"parabolic", r.parabolic.nodes()},
                     {"complement", r.complement},
                     {"dim", r.dim},
                     {"betas", node_values(r.betas.nodes(), r.betas.values())},
                     {"fano_max_codim", r.fano_max_codim},
                     {"weak_boundary_codim", r.weak_boundary_codim}});
  return Json{{"rows", a}};
}

} // namespace flagfano

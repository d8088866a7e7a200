#include "flagfano/blowup.hpp"

#include <algorithm>

namespace flagfano
{

const char *to_string(Verdict v)
{
  switch (v)
  {
  case Verdict::Fano: return "FANO";
  case Verdict::WeakFanoNotFano: return "WEAK_FANO_NOT_FANO";
  case Verdict::NotWeakFano: return "NOT_WEAK_FANO";
  }
  return "?";
}

const char *to_string(Tribool t)
{
  switch (t)
  {
  case Tribool::False: return "false";
  case Tribool::True: return "true";
  case Tribool::Unknown: return "unknown";
  }
  return "?";
}

// H = sum_alpha Bl*D_alpha, so a Bl*D + e E = (a + e) Bl*D + (-e)(H - E).
NefCoordinates to_nef_coordinates(const DivisorClass &d)
{
  NefCoordinates n;
  n.nodes = d.nodes;
  n.per_node = d.pullback.array() + d.exceptional;
  n.h_minus_e = -d.exceptional;
  return n;
}

DivisorClass from_nef_coordinates(const NefCoordinates &n)
{
  DivisorClass d;
  d.nodes = n.nodes;
  d.pullback = n.per_node.array() + n.h_minus_e;
  d.exceptional = -n.h_minus_e;
  return d;
}

void check_codim(const FlagVariety &fv, int codim)
{
  const int dim = dimension(fv);
  if (codim < 2 || codim > dim)
    throw Error(ErrorCode::CodimOutOfRange,
                "codimension " + std::to_string(codim) + " outside 2.." + std::to_string(dim));
}

std::vector<DivisorClass> nef_generators(const FlagVariety &fv, int codim)
{
  check_codim(fv, codim);
  const std::vector<int> nodes = picard_basis(fv);
  const auto m = static_cast<Eigen::Index>(nodes.size());
  std::vector<DivisorClass> out;
  for (Eigen::Index k = 0; k < m; ++k)
    out.push_back({nodes, IntVector::Unit(m, k), 0});
  out.push_back({nodes, IntVector::Ones(m), -1});
  return out;
}

std::vector<CurveClass> mori_generators(const FlagVariety &fv, int codim)
{
  check_codim(fv, codim);
  const std::vector<int> nodes = picard_basis(fv);
  const auto m = static_cast<Eigen::Index>(nodes.size());
  std::vector<CurveClass> out;
  for (Eigen::Index k = 0; k < m; ++k)
    out.push_back({nodes, IntVector::Unit(m, k), 0});
  out.push_back({nodes, IntVector::Zero(m), 1});
  return out;
}

// On the bases {Bl*D_alpha, E_Z} x {Bl*C_beta, e}:
//   Bl*D_alpha . Bl*C_beta = delta, Bl*D_alpha . e = 0,
//   E_Z . Bl*C_beta = 0,            E_Z . e = -1.
// C~_beta = Bl*C_beta - e gives the column for C~_beta.
IntMatrix intersection_form(int num_nodes)
{
  const int m = num_nodes;
  IntMatrix pulled = IntMatrix::Zero(m + 1, m + 1);
  pulled.topLeftCorner(m, m).setIdentity();
  pulled(m, m) = -1;

  IntMatrix change = IntMatrix::Identity(m + 1, m + 1); // tilde/e -> Bl*C/e
  change.bottomLeftCorner(1, m).setConstant(-1);
  return pulled * change;
}

Integer intersect(const DivisorClass &d, const CurveClass &k)
{
  if (d.nodes != k.nodes || d.pullback.size() != static_cast<Eigen::Index>(d.nodes.size()) ||
      k.tilde.size() != static_cast<Eigen::Index>(k.nodes.size()))
    throw Error(ErrorCode::BasisMismatch, "divisor and curve live over different Picard bases");
  const auto m = static_cast<int>(d.nodes.size());
  IntVector dv(m + 1), kv(m + 1);
  dv << d.pullback, d.exceptional;
  kv << k.tilde, k.e;
  return dv.dot(intersection_form(m) * kv);
}

AnticanonicalClass anticanonical_class(const FlagVariety &fv, int codim)
{
  check_codim(fv, codim);
  const BetaVector betas = beta_values(fv);
  const auto m = static_cast<Eigen::Index>(betas.size());
  const Integer c = codim;

  AnticanonicalClass out;
  out.divisor.nodes = betas.nodes();
  out.divisor.pullback.resize(m);
  out.nef.nodes = betas.nodes();
  out.nef.per_node.resize(m);
  for (Eigen::Index k = 0; k < m; ++k)
  {
    const Integer b = betas.values()[static_cast<std::size_t>(k)];
    out.divisor.pullback[k] = 1 + b;
    out.nef.per_node[k] = b + 2 - c;
  }
  out.divisor.exceptional = -(c - 1);
  out.nef.h_minus_e = c - 1;

  if (to_nef_coordinates(out.divisor) != out.nef)
    throw Error(ErrorCode::BasisMismatch, "anticanonical class disagrees between bases");
  return out;
}

bool is_nef(const DivisorClass &d)
{
  const NefCoordinates n = to_nef_coordinates(d);
  return (n.per_node.array() >= 0).all() && n.h_minus_e >= 0;
}

bool is_ample(const DivisorClass &d)
{
  const NefCoordinates n = to_nef_coordinates(d);
  return (n.per_node.array() > 0).all() && n.h_minus_e > 0;
}

bool is_globally_generated(const DivisorClass &d) { return is_nef(d); }

Verdict verdict_from_margins(const std::vector<Integer> &margins)
{
  if (std::all_of(margins.begin(), margins.end(), [](Integer m) { return m > 0; }))
    return Verdict::Fano;
  if (std::all_of(margins.begin(), margins.end(), [](Integer m) { return m >= 0; }))
    return Verdict::WeakFanoNotFano;
  return Verdict::NotWeakFano;
}

FanoReport classify(const FlagVariety &fv, int codim)
{
  check_codim(fv, codim);
  FanoReport r;
  r.betas = beta_values(fv);
  r.codim = codim;
  r.dim = dimension(fv);
  for (Integer b : r.betas.values())
    r.margins.push_back(b - codim + 2);
  r.verdict = verdict_from_margins(r.margins);
  r.anticanonical_big = r.verdict == Verdict::NotWeakFano ? Tribool::Unknown : Tribool::True;
  r.anticanonical = anticanonical_class(fv, codim);
  return r;
}

FanoReport classify(const FlagVariety &fv, const SchubertDatum &z) { return classify(fv, z.codim); }

ConeReport cone_report(const FlagVariety &fv, int codim)
{
  ConeReport r;
  r.nef_generators = nef_generators(fv, codim);
  r.mori_generators = mori_generators(fv, codim);
  const auto n = static_cast<Eigen::Index>(r.nef_generators.size());
  r.intersection.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      r.intersection(i, j) = intersect(r.nef_generators[static_cast<std::size_t>(i)], r.mori_generators[static_cast<std::size_t>(j)]);
  return r;
}

} // namespace flagfano

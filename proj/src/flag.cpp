#include "flagfano/flag.hpp"

#include <algorithm>

namespace flagfano
{

FlagVariety::FlagVariety(RootSystem rs, ParabolicSubset par) : m_rs(std::move(rs)), m_par(std::move(par))
{
  m_par.validate(m_rs.rank());
  if (m_par.size() == m_rs.rank())
    throw Error(ErrorCode::DegenerateParabolic, "S_P = S gives G/G, a point");
  m_w0p = longest_element(m_par, m_rs);
}

std::vector<Root> parabolic_positive_roots(const ParabolicSubset &par, const RootSystem &rs)
{
  std::vector<Root> out;
  for (const Root &beta : rs.positive_roots())
  {
    bool supported = true;
    for (int i = 0; i < rs.rank() && supported; ++i)
      if (beta[i] != 0 && !par.contains(i + 1))
        supported = false;
    if (supported)
      out.push_back(beta);
  }
  return out;
}

int dimension(const FlagVariety &fv)
{
  return fv.root_system().num_positive_roots() -
         static_cast<int>(parabolic_positive_roots(fv.parabolic(), fv.root_system()).size());
}

std::vector<int> picard_basis(const FlagVariety &fv) { return fv.parabolic().complement(fv.root_system().rank()); }

FlagDivisor weight_to_divisor(const FlagVariety &fv, const Weight &lambda)
{
  detail::check_same_rank(lambda.rank(), fv.root_system().rank());
  for (int i : fv.parabolic().nodes())
    if (lambda[i - 1] != 0)
      throw Error(ErrorCode::NotAPCharacter, "weight has nonzero coordinate at S_P node " + std::to_string(i));
  FlagDivisor d;
  d.nodes = picard_basis(fv);
  d.coeffs.resize(static_cast<Eigen::Index>(d.nodes.size()));
  for (std::size_t k = 0; k < d.nodes.size(); ++k)
    d.coeffs[static_cast<Eigen::Index>(k)] = lambda[d.nodes[k] - 1];
  return d;
}

BetaVector::BetaVector(std::vector<int> nodes, std::vector<Integer> values) : m_nodes(std::move(nodes)), m_values(std::move(values))
{
  if (m_nodes.size() != m_values.size())
    throw Error(ErrorCode::BasisMismatch, "beta nodes and values differ in length");
}

Integer BetaVector::at(int node) const
{
  auto it = std::find(m_nodes.begin(), m_nodes.end(), node);
  if (it == m_nodes.end())
    throw Error(ErrorCode::NotInComplement, "beta is defined only on S \\ S_P; node " + std::to_string(node));
  return m_values[static_cast<std::size_t>(it - m_nodes.begin())];
}

Integer BetaVector::min() const
{
  if (m_values.empty())
    throw Error(ErrorCode::OutOfRange, "empty beta vector");
  return *std::min_element(m_values.begin(), m_values.end());
}

BetaVector beta_values(const FlagVariety &fv, const WeylWord &w0p)
{
  const RootSystem &rs = fv.root_system();
  const Weight image = act(w0p, rho(rs), rs);
  std::vector<int> nodes = picard_basis(fv);
  std::vector<Integer> values;
  for (int a : nodes)
    values.push_back(pairing(image, simple_coroot(rs, a)));
  return BetaVector(std::move(nodes), std::move(values));
}

BetaVector beta_values(const FlagVariety &fv) { return beta_values(fv, fv.longest_parabolic_element()); }

Weight anticanonical_weight(const FlagVariety &fv)
{
  const RootSystem &rs = fv.root_system();
  return rho(rs) + act(fv.longest_parabolic_element(), rho(rs), rs);
}

SchubertDatum schubert_codim(const FlagVariety &fv, const WeylWord &word, bool smooth_asserted)
{
  if (!is_minimal_coset_rep(word, fv.parabolic(), fv.root_system()))
    throw Error(ErrorCode::NotMinimalRep, "word is not a minimal coset representative");
  SchubertDatum s;
  s.word = word;
  s.dim = length(word, fv.root_system());
  s.codim = dimension(fv) - s.dim;
  s.smooth_asserted = smooth_asserted;
  return s;
}

std::vector<ParabolicSubset> all_parabolics(int rank)
{
  std::vector<ParabolicSubset> out;
  const unsigned full = (1u << rank) - 1;
  for (unsigned mask = 0; mask < full; ++mask)
  {
    std::vector<int> nodes;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i))
        nodes.push_back(i + 1);
    out.emplace_back(std::move(nodes));
  }
  return out;
}

} // namespace flagfano

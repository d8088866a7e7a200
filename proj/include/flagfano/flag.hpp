#ifndef FLAGFANO_FLAG_HPP
#define FLAGFANO_FLAG_HPP

#include "flagfano/weyl.hpp"

#include <utility>
#include <vector>

namespace flagfano
{

/// G/P for a simple G, with P given by S_P. S_P = S (a point) is rejected.
class FlagVariety
{
public:
  FlagVariety(RootSystem rs, ParabolicSubset par);
  FlagVariety(const TypeSpec &spec, ParabolicSubset par) : FlagVariety(build_root_system(spec), std::move(par)) {}

  const RootSystem &root_system() const { return m_rs; }
  const ParabolicSubset &parabolic() const { return m_par; }
  /// w_{0,P}, computed once at construction.
  const WeylWord &longest_parabolic_element() const { return m_w0p; }

private:
  RootSystem m_rs;
  ParabolicSubset m_par;
  WeylWord m_w0p;
};

/// Positive roots supported on S_P.
std::vector<Root> parabolic_positive_roots(const ParabolicSubset &par, const RootSystem &rs);

int dimension(const FlagVariety &fv);

/// S \ S_P ascending; indexes D_alpha and C_alpha.
std::vector<int> picard_basis(const FlagVariety &fv);

/// A divisor on G/P over the Schubert divisors {D_alpha}.
struct FlagDivisor
{
  std::vector<int> nodes; // picard_basis order
  IntVector coeffs;

  friend bool operator==(const FlagDivisor &a, const FlagDivisor &b) { return a.nodes == b.nodes && a.coeffs == b.coeffs; }
};

/// The isomorphism X*(P) -> Pic(G/P), lambda -> sum <lambda, alpha^vee> D_alpha.
/// Throws NotAPCharacter unless lambda vanishes on S_P.
FlagDivisor weight_to_divisor(const FlagVariety &fv, const Weight &lambda);

/// beta_alpha = <w_{0,P}(rho), alpha^vee> for alpha outside S_P.
class BetaVector
{
public:
  BetaVector() = default;
  BetaVector(std::vector<int> nodes, std::vector<Integer> values);

  const std::vector<int> &nodes() const { return m_nodes; }
  const std::vector<Integer> &values() const { return m_values; }
  int size() const { return static_cast<int>(m_nodes.size()); }
  /// Throws NotInComplement for nodes in S_P.
  Integer at(int node) const;
  Integer min() const;

  friend bool operator==(const BetaVector &, const BetaVector &) = default;

private:
  std::vector<int> m_nodes;
  std::vector<Integer> m_values;
};

BetaVector beta_values(const FlagVariety &fv);
/// Same quantity with an explicitly supplied word for w_{0,P}.
BetaVector beta_values(const FlagVariety &fv, const WeylWord &w0p);

/// rho + w_{0,P}(rho), the weight of -K_X.
Weight anticanonical_weight(const FlagVariety &fv);

struct SchubertDatum
{
  WeylWord word;
  int dim = 0;
  int codim = 0;
  /// Caller's assertion that the Schubert variety is smooth; never inferred.
  bool smooth_asserted = false;
};

/// dim = l(w), codim = dim X - l(w). Throws NotMinimalRep unless w is in W^P.
SchubertDatum schubert_codim(const FlagVariety &fv, const WeylWord &word, bool smooth_asserted = false);

/// Every proper subset of {1..rank}, as parabolic subsets, in bitmask order.
std::vector<ParabolicSubset> all_parabolics(int rank);

} // namespace flagfano

#endif

#include "flagfano/special.hpp"

#include <algorithm>

namespace flagfano
{

namespace
{

Verdict threshold_verdict(Integer codim, Integer boundary)
{
  if (codim < boundary)
    return Verdict::Fano;
  if (codim == boundary)
    return Verdict::WeakFanoNotFano;
  return Verdict::NotWeakFano;
}

void check_grassmannian(int r, int n)
{
  if (n < 2 || r < 1 || r > n - 1)
    throw Error(ErrorCode::OutOfRange, "Gr(" + std::to_string(r) + "," + std::to_string(n) + ") needs 1 <= r <= n-1");
}

void check_cominuscule(const RootSystem &rs, int node)
{
  const std::vector<int> nodes = cominuscule_nodes(rs);
  if (!std::binary_search(nodes.begin(), nodes.end(), node))
    throw Error(ErrorCode::NotCominuscule, "node " + std::to_string(node) + " of " + rs.spec().name());
}

void check_cominuscule_codim(const RootSystem &rs, int node, int codim)
{
  const int dim = maximal_parabolic_dimension(rs, node);
  if (codim < 2 || codim > dim)
    throw Error(ErrorCode::OutOfRange, "codimension " + std::to_string(codim) + " outside 2.." + std::to_string(dim));
}

} // namespace

Verdict grassmannian_classify(int r, int n, int codim)
{
  check_grassmannian(r, n);
  if (codim < 2 || codim > r * (n - r))
    throw Error(ErrorCode::OutOfRange, "codimension outside 2..r(n-r)");
  return threshold_verdict(codim, n + 1);
}

Verdict grassmannian_point_classify(int r, int n)
{
  check_grassmannian(r, n);
  const int dim = r * (n - r);
  if (dim < 2)
    throw Error(ErrorCode::OutOfRange, "a point of Gr(" + std::to_string(r) + "," + std::to_string(n) + ") has codimension < 2");
  return threshold_verdict(dim, n + 1);
}

std::vector<int> cominuscule_nodes(const RootSystem &rs)
{
  std::vector<int> out;
  const Root &top = rs.highest_root();
  for (int i = 0; i < rs.rank(); ++i)
    if (top[i] == 1)
      out.push_back(i + 1);
  return out;
}

int maximal_parabolic_dimension(const RootSystem &rs, int node)
{
  if (node < 1 || node > rs.rank())
    throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(node));
  return static_cast<int>(std::count_if(rs.positive_roots().begin(), rs.positive_roots().end(),
                                        [&](const Root &b) { return b[node - 1] != 0; }));
}

Verdict cominuscule_classify(const RootSystem &rs, int node, int codim)
{
  check_cominuscule(rs, node);
  check_cominuscule_codim(rs, node, codim);
  return threshold_verdict(codim, height(rs.highest_root()) + 2);
}

Verdict cominuscule_coroot_classify(const RootSystem &rs, int node, int codim)
{
  check_cominuscule(rs, node);
  check_cominuscule_codim(rs, node, codim);
  return threshold_verdict(codim, dual_height(coroot_of(rs.highest_root(), rs)) + 2);
}

Verdict full_flag_classify(const RootSystem &rs, int codim)
{
  if (codim < 2 || codim > rs.num_positive_roots())
    throw Error(ErrorCode::OutOfRange, "codimension outside 2..|R+|");
  return threshold_verdict(codim, 3);
}

bool kannan_saha_check(const RootSystem &rs, int node)
{
  check_cominuscule(rs, node);
  const WeylWord w0 = longest_element(ParabolicSubset::maximal(rs.rank(), node), rs);
  return act(w0, simple_coroot(rs, node), rs) == coroot_of(rs.highest_root(), rs);
}

} // namespace flagfano

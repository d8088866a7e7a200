#include "flagfano/weyl.hpp"

#include <algorithm>
#include <map>

namespace flagfano
{

std::ostream &operator<<(std::ostream &os, const WeylWord &w)
{
  os << "[";
  for (std::size_t i = 0; i < w.letters.size(); ++i)
    os << (i ? "," : "") << w.letters[i];
  return os << "]";
}

ParabolicSubset::ParabolicSubset(std::vector<int> nodes) : m_nodes(std::move(nodes))
{
  std::sort(m_nodes.begin(), m_nodes.end());
  m_nodes.erase(std::unique(m_nodes.begin(), m_nodes.end()), m_nodes.end());
}

ParabolicSubset ParabolicSubset::full(int rank)
{
  std::vector<int> nodes(rank);
  for (int i = 0; i < rank; ++i)
    nodes[i] = i + 1;
  return ParabolicSubset(std::move(nodes));
}

ParabolicSubset ParabolicSubset::maximal(int rank, int node)
{
  std::vector<int> nodes;
  for (int i = 1; i <= rank; ++i)
    if (i != node)
      nodes.push_back(i);
  return ParabolicSubset(std::move(nodes));
}

bool ParabolicSubset::contains(int node) const { return std::binary_search(m_nodes.begin(), m_nodes.end(), node); }

std::vector<int> ParabolicSubset::complement(int rank) const
{
  std::vector<int> out;
  for (int i = 1; i <= rank; ++i)
    if (!contains(i))
      out.push_back(i);
  return out;
}

void ParabolicSubset::validate(int rank) const
{
  for (int i : m_nodes)
    if (i < 1 || i > rank)
      throw Error(ErrorCode::IndexOutOfRange, "parabolic node " + std::to_string(i) + " outside 1.." + std::to_string(rank));
}

namespace
{
int check_index(int node, const RootSystem &rs)
{
  if (node < 1 || node > rs.rank())
    throw Error(ErrorCode::IndexOutOfRange, "reflection index " + std::to_string(node));
  return node - 1;
}
} // namespace

// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i, and alpha_i is column i of C.
Weight reflect_weight(int node, const Weight &w, const RootSystem &rs)
{
  const int i = check_index(node, rs);
  detail::check_same_rank(w.rank(), rs.rank());
  detail::check_magnitude(w.coeffs());
  return Weight(IntVector(w.coeffs() - w[i] * rs.cartan().col(i)));
}

// <beta, alpha_i^vee> = (C k)_i; only coordinate i changes.
Root reflect_root(int node, const Root &r, const RootSystem &rs)
{
  const int i = check_index(node, rs);
  detail::check_same_rank(r.rank(), rs.rank());
  detail::check_magnitude(r.coeffs());
  Root out = r;
  out[i] -= rs.cartan().row(i).dot(r.coeffs());
  return out;
}

// <alpha_i, gamma^vee> = sum_j c_j C(j, i) = (C^T c)_i.
Coroot reflect_coroot(int node, const Coroot &c, const RootSystem &rs)
{
  const int i = check_index(node, rs);
  detail::check_same_rank(c.rank(), rs.rank());
  detail::check_magnitude(c.coeffs());
  Coroot out = c;
  out[i] -= rs.cartan().col(i).dot(c.coeffs());
  return out;
}

int length(const WeylWord &word, const RootSystem &rs)
{
  int n = 0;
  for (const Root &beta : rs.positive_roots())
    if (act(word, beta, rs).isNegative())
      ++n;
  return n;
}

WeylWord longest_element(const ParabolicSubset &par, const RootSystem &rs)
{
  par.validate(rs.rank());
  WeylWord w;
  bool extended = true;
  while (extended)
  {
    extended = false;
    for (int i : par.nodes())
    {
      if (act(w, simple_root(rs, i), rs).isPositive())
      {
        w.letters.push_back(i);
        extended = true;
        break;
      }
    }
  }
  return w;
}

bool is_minimal_coset_rep(const WeylWord &word, const ParabolicSubset &par, const RootSystem &rs)
{
  par.validate(rs.rank());
  return std::all_of(par.nodes().begin(), par.nodes().end(),
                     [&](int i) { return act(word, simple_root(rs, i), rs).isPositive(); });
}

std::vector<WeylWord> enumerate_coset_reps(const ParabolicSubset &par, const RootSystem &rs, std::optional<int> max_length)
{
  par.validate(rs.rank());
  const int bound = std::min(max_length.value_or(rs.num_positive_roots()), rs.num_positive_roots());
  if (bound < 0)
    throw Error(ErrorCode::OutOfRange, "max_length must be non-negative");

  // Level k holds W^P elements of length k, keyed by w(rho), with the least
  // word. Every w in W^P of positive length has a left descent s with s w in
  // W^P, so prepending letters to level k-1 reaches all of level k.
  std::vector<WeylWord> out{WeylWord{}};
  std::map<Weight, WeylWord> level{{rho(rs), WeylWord{}}};
  for (int k = 1; k <= bound && !level.empty(); ++k)
  {
    std::map<Weight, WeylWord> next;
    for (const auto &[image, word] : level)
    {
      for (int i = 1; i <= rs.rank(); ++i)
      {
        // l(s_i w) > l(w) iff <w(rho), alpha_i^vee> > 0.
        if (image[i - 1] <= 0)
          continue;
        WeylWord candidate;
        candidate.letters.reserve(word.letters.size() + 1);
        candidate.letters.push_back(i);
        candidate.letters.insert(candidate.letters.end(), word.letters.begin(), word.letters.end());
        if (!is_minimal_coset_rep(candidate, par, rs))
          continue;
        const Weight key = reflect_weight(i, image, rs);
        auto [it, inserted] = next.emplace(key, candidate);
        if (!inserted && candidate.letters < it->second.letters)
          it->second = std::move(candidate);
      }
    }
    std::vector<WeylWord> words;
    for (const auto &kv : next)
      words.push_back(kv.second);
    std::sort(words.begin(), words.end());
    out.insert(out.end(), words.begin(), words.end());
    level = std::move(next);
  }
  return out;
}

std::vector<GroupElement> brute_force_group(const RootSystem &rs)
{
  if (rs.rank() > kOracleMaxRank)
    throw Error(ErrorCode::RankTooLargeForOracle, rs.spec().name() + " exceeds the oracle guard");

  const Weight r = rho(rs);
  std::map<Weight, WeylWord> seen{{r, WeylWord{}}};
  std::vector<WeylWord> frontier{WeylWord{}};
  while (!frontier.empty())
  {
    std::vector<WeylWord> next;
    for (const WeylWord &w : frontier)
    {
      for (int i = 1; i <= rs.rank(); ++i)
      {
        WeylWord ws = w;
        ws.letters.push_back(i);
        const Weight image = act(ws, r, rs);
        if (seen.emplace(image, ws).second)
          next.push_back(ws);
      }
    }
    frontier = std::move(next);
  }

  std::vector<GroupElement> out;
  out.reserve(seen.size());
  for (const auto &[image, word] : seen)
    out.push_back({word, image});
  std::sort(out.begin(), out.end(), [](const GroupElement &a, const GroupElement &b) { return a.word < b.word; });
  return out;
}

} // namespace flagfano

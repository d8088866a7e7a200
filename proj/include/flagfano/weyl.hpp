#ifndef FLAGFANO_WEYL_HPP
#define FLAGFANO_WEYL_HPP

#include "flagfano/root_system.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace flagfano
{

/// A word in the simple reflections, letters 1-based (Bourbaki node labels).
/// The word [i_1, ..., i_k] denotes s_{i_1} s_{i_2} ... s_{i_k}.
struct WeylWord
{
  std::vector<int> letters;

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  /// The word for the inverse element (letters reversed).
  WeylWord inverse() const { return {{letters.rbegin(), letters.rend()}}; }

  friend bool operator==(const WeylWord &, const WeylWord &) = default;
  friend auto operator<=>(const WeylWord &a, const WeylWord &b)
  {
    if (a.letters.size() != b.letters.size())
      return a.letters.size() <=> b.letters.size();
    return a.letters <=> b.letters;
  }
};

std::ostream &operator<<(std::ostream &os, const WeylWord &w);

/// S_P as a set of 1-based nodes. Kept sorted and duplicate free.
class ParabolicSubset
{
public:
  ParabolicSubset() = default;
  explicit ParabolicSubset(std::vector<int> nodes);

  /// Every node of a rank-n system.
  static ParabolicSubset full(int rank);
  /// All nodes except `node`: the maximal parabolic at that node.
  static ParabolicSubset maximal(int rank, int node);

  const std::vector<int> &nodes() const { return m_nodes; }
  bool contains(int node) const;
  bool empty() const { return m_nodes.empty(); }
  int size() const { return static_cast<int>(m_nodes.size()); }
  /// {1..rank} minus the members, ascending.
  std::vector<int> complement(int rank) const;
  /// Throws IndexOutOfRange if a member is outside 1..rank.
  void validate(int rank) const;

  friend bool operator==(const ParabolicSubset &, const ParabolicSubset &) = default;

private:
  std::vector<int> m_nodes;
};

Weight reflect_weight(int node, const Weight &w, const RootSystem &rs);
Root reflect_root(int node, const Root &r, const RootSystem &rs);
Coroot reflect_coroot(int node, const Coroot &c, const RootSystem &rs);

namespace detail
{
inline Weight reflect(int node, const Weight &w, const RootSystem &rs) { return reflect_weight(node, w, rs); }
inline Root reflect(int node, const Root &r, const RootSystem &rs) { return reflect_root(node, r, rs); }
inline Coroot reflect(int node, const Coroot &c, const RootSystem &rs) { return reflect_coroot(node, c, rs); }
} // namespace detail

/// act([i_1..i_k], x) = s_{i_1}(s_{i_2}(... s_{i_k}(x))).
template <typename Basis>
Coordinates<Basis> act(const WeylWord &word, const Coordinates<Basis> &x, const RootSystem &rs)
{
  Coordinates<Basis> y = x;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    y = detail::reflect(*it, y, rs);
  return y;
}

/// Number of positive roots sent negative.
int length(const WeylWord &word, const RootSystem &rs);

/// Longest element of W_P by greedy right multiplication: append the
/// smallest i in S_P with act(w, alpha_i) > 0 until none is left. The result
/// is reduced and uses only letters from S_P.
WeylWord longest_element(const ParabolicSubset &par, const RootSystem &rs);

/// True iff act(word, alpha_i) > 0 for all i in S_P.
bool is_minimal_coset_rep(const WeylWord &word, const ParabolicSubset &par, const RootSystem &rs);

/// Minimal left coset representatives of W/W_P with length <= max_length
/// (unbounded when nullopt), one lexicographically least reduced word each,
/// sorted by (length, word).
std::vector<WeylWord> enumerate_coset_reps(const ParabolicSubset &par, const RootSystem &rs,
                                           std::optional<int> max_length = std::nullopt);

struct GroupElement
{
  WeylWord word; // a shortest word
  Weight rho_image;
};

inline constexpr int kOracleMaxRank = 3;

/// Whole Weyl group by closure of the generators, keyed by the image of rho.
/// Testing oracle; rank <= 3 only. Sorted by (word length, word).
std::vector<GroupElement> brute_force_group(const RootSystem &rs);

} // namespace flagfano

#endif

#ifndef FLAGFANO_ROOT_SYSTEM_HPP
#define FLAGFANO_ROOT_SYSTEM_HPP

#include "flagfano/coords.hpp"

#include <span>
#include <string>
#include <vector>

namespace flagfano
{

enum class Family
{
  A,
  B,
  C,
  D,
  E,
  F,
  G
};

char to_char(Family f);
Family family_from_char(char c);

inline constexpr int kMaxRank = 16;

/// A simple Cartan type such as A3 or E8. Node numbering is Bourbaki's
/// throughout (see docs in README): B_n has alpha_n short, C_n has alpha_n
/// long, G_2 has alpha_1 short, F_4 has alpha_3 and alpha_4 short, and in E_n
/// node 2 hangs off node 4.
struct TypeSpec
{
  Family family = Family::A;
  int rank = 1;

  bool admissible() const;
  /// Throws InadmissibleRank unless admissible().
  void validate() const;
  std::string name() const;

  friend bool operator==(const TypeSpec &, const TypeSpec &) = default;
};

/// Parses "A3", "e8", "G2". Throws InadmissibleRank / OutOfRange on bad input.
TypeSpec parse_type(const std::string &text);

/// Immutable root datum of a simple type.
///
/// cartan()(i, j) = <alpha_j, alpha_i^vee> (0-based), so the weight
/// coordinates of alpha_j are column j. symmetrizers() is the diagonal D with
/// D * C symmetric, normalized so the short roots have D_ii = 1; the product
/// D * C is then the Gram matrix (alpha_i, alpha_j) with (short, short) = 2.
class RootSystem
{
public:
  /// Builds from an explicit Cartan matrix and symmetrizer. Only shape and the
  /// diagonal are checked here; well-formedness is the job of
  /// cartan_is_well_formed(). Used for fixtures and by build_root_system.
  static RootSystem from_cartan(TypeSpec spec, IntMatrix cartan, IntVector symmetrizers);

  const TypeSpec &spec() const { return m_spec; }
  int rank() const { return m_spec.rank; }
  const IntMatrix &cartan() const { return m_cartan; }
  const IntVector &symmetrizers() const { return m_symmetrizers; }
  /// D * C, i.e. the invariant form on the simple roots.
  IntMatrix gram() const { return m_symmetrizers.asDiagonal() * m_cartan; }

  /// Sorted by (height, lexicographic coefficients).
  const std::vector<Root> &positive_roots() const { return m_positive; }
  const Root &highest_root() const { return m_positive.back(); }
  int num_positive_roots() const { return static_cast<int>(m_positive.size()); }

  bool is_root(const Root &r) const;
  bool is_simply_laced() const { return (m_symmetrizers.array() == m_symmetrizers[0]).all(); }

private:
  RootSystem() = default;

  TypeSpec m_spec;
  IntMatrix m_cartan;
  IntVector m_symmetrizers;
  std::vector<Root> m_positive;
};

/// Cartan matrix and symmetrizer of a type, Bourbaki numbering.
IntMatrix cartan_matrix(const TypeSpec &spec);
IntVector cartan_symmetrizers(const TypeSpec &spec);

/// Checks the generalized Cartan matrix axioms plus symmetrizability by the
/// given diagonal.
bool cartan_is_well_formed(const IntMatrix &cartan, const IntVector &symmetrizers);

/// Positive roots by closure: starting from the simple roots, beta + alpha_i
/// is added whenever the alpha_i-string through beta extends upward, i.e.
/// p - <beta, alpha_i^vee> > 0 where p counts the known roots beta - k alpha_i.
/// `order` fixes the order in which simple roots are tried; the resulting set
/// does not depend on it. Output sorted by (height, lex).
std::vector<Root> positive_root_closure(const IntMatrix &cartan, std::span<const int> order);

RootSystem build_root_system(const TypeSpec &spec);

template <typename Scalar>
Scalar height(const Coordinates<SimpleRootBasis, Scalar> &r)
{
  return r.coeffs().sum();
}

/// Sum of coroot coefficients, i.e. <rho, c>.
template <typename Scalar>
Scalar dual_height(const Coordinates<SimpleCorootBasis, Scalar> &c)
{
  return c.coeffs().sum();
}

/// <w, c> = sum_i c_i w_i since <varpi_j, alpha_i^vee> = delta_ij.
template <typename Scalar>
Scalar pairing(const Coordinates<FundamentalWeightBasis, Scalar> &w, const Coordinates<SimpleCorootBasis, Scalar> &c)
{
  detail::check_same_rank(w.rank(), c.rank());
  return w.coeffs().dot(c.coeffs());
}

/// r^vee = 2 r / (r, r), expressed over the simple coroots.
Coroot coroot_of(const Root &r, const RootSystem &rs);

Weight root_as_weight(const Root &r, const RootSystem &rs);

/// Half the sum of the positive roots: all-ones in the fundamental-weight basis.
Weight rho(const RootSystem &rs);

Root simple_root(const RootSystem &rs, int node);
Coroot simple_coroot(const RootSystem &rs, int node);
Weight fundamental_weight(const RootSystem &rs, int node);

/// Every simple type with rank <= max_rank, in family order then rank.
std::vector<TypeSpec> all_types_up_to(int max_rank);

} // namespace flagfano

#endif

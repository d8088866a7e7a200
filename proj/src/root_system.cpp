#include "flagfano/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace flagfano
{

const char *to_string(ErrorCode code)
{
  switch (code)
  {
  case ErrorCode::InadmissibleRank: return "InadmissibleRank";
  case ErrorCode::RankMismatch: return "RankMismatch";
  case ErrorCode::NotARoot: return "NotARoot";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::RankTooLargeForOracle: return "RankTooLargeForOracle";
  case ErrorCode::DegenerateParabolic: return "DegenerateParabolic";
  case ErrorCode::NotAPCharacter: return "NotAPCharacter";
  case ErrorCode::NotInComplement: return "NotInComplement";
  case ErrorCode::NotMinimalRep: return "NotMinimalRep";
  case ErrorCode::CodimOutOfRange: return "CodimOutOfRange";
  case ErrorCode::BasisMismatch: return "BasisMismatch";
  case ErrorCode::OutOfRange: return "OutOfRange";
  case ErrorCode::NotCominuscule: return "NotCominuscule";
  case ErrorCode::Overflow: return "Overflow";
  case ErrorCode::MalformedCartan: return "MalformedCartan";
  }
  return "Unknown";
}

char to_char(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family family_from_char(char c)
{
  c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (c < 'A' || c > 'G')
    throw Error(ErrorCode::OutOfRange, std::string("unknown family '") + c + "'");
  return static_cast<Family>(c - 'A');
}

bool TypeSpec::admissible() const
{
  if (rank < 1 || rank > kMaxRank)
    return false;
  switch (family)
  {
  case Family::A: return true;
  case Family::B:
  case Family::C: return rank >= 2;
  case Family::D: return rank >= 4;
  case Family::E: return rank >= 6 && rank <= 8;
  case Family::F: return rank == 4;
  case Family::G: return rank == 2;
  }
  return false;
}

void TypeSpec::validate() const
{
  if (!admissible())
    throw Error(ErrorCode::InadmissibleRank, "no simple type " + name());
}

std::string TypeSpec::name() const { return to_char(family) + std::to_string(rank); }

TypeSpec parse_type(const std::string &text)
{
  if (text.size() < 2 || !std::all_of(text.begin() + 1, text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorCode::OutOfRange, "cannot parse type '" + text + "'");
  TypeSpec spec{family_from_char(text[0]), std::stoi(text.substr(1))};
  spec.validate();
  return spec;
}

namespace
{

// Symmetric Gram matrix (alpha_i, alpha_j) with short roots of squared length 2,
// assembled edge by edge from the Dynkin diagram.
IntMatrix gram_matrix(const TypeSpec &spec, const IntVector &d)
{
  const int n = spec.rank;
  IntMatrix g = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    g(i, i) = 2 * d[i];

  // Bond between 1-based nodes a and b: the inner product is -max(d_a, d_b).
  auto bond = [&](int a, int b) {
    const Integer v = -std::max(d[a - 1], d[b - 1]);
    g(a - 1, b - 1) = v;
    g(b - 1, a - 1) = v;
  };

  switch (spec.family)
  {
  case Family::A:
  case Family::B:
  case Family::C:
  case Family::F:
  case Family::G:
    for (int i = 1; i < n; ++i)
      bond(i, i + 1);
    break;
  case Family::D:
    for (int i = 1; i < n - 1; ++i)
      bond(i, i + 1);
    bond(n - 2, n);
    break;
  case Family::E:
    bond(1, 3);
    bond(3, 4);
    bond(2, 4);
    for (int i = 4; i < n; ++i)
      bond(i, i + 1);
    break;
  }
  return g;
}

} // namespace

IntVector cartan_symmetrizers(const TypeSpec &spec)
{
  spec.validate();
  const int n = spec.rank;
  IntVector d = IntVector::Ones(n);
  switch (spec.family)
  {
  case Family::B: // alpha_n short
    d.setConstant(2);
    d[n - 1] = 1;
    break;
  case Family::C: // alpha_n long
    d[n - 1] = 2;
    break;
  case Family::F:
    d[0] = d[1] = 2;
    break;
  case Family::G:
    d[1] = 3;
    break;
  default:
    break;
  }
  return d;
}

IntMatrix cartan_matrix(const TypeSpec &spec)
{
  const IntVector d = cartan_symmetrizers(spec);
  const IntMatrix g = gram_matrix(spec, d);
  // C(i, j) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i) = g(i, j) / d_i.
  IntMatrix c(spec.rank, spec.rank);
  for (int i = 0; i < spec.rank; ++i)
    for (int j = 0; j < spec.rank; ++j)
      c(i, j) = g(i, j) / d[i];
  return c;
}

bool cartan_is_well_formed(const IntMatrix &cartan, const IntVector &symmetrizers)
{
  const Eigen::Index n = cartan.rows();
  if (n == 0 || cartan.cols() != n || symmetrizers.size() != n)
    return false;
  if ((symmetrizers.array() <= 0).any())
    return false;
  for (Eigen::Index i = 0; i < n; ++i)
  {
    if (cartan(i, i) != 2)
      return false;
    for (Eigen::Index j = 0; j < n; ++j)
    {
      if (i == j)
        continue;
      if (cartan(i, j) > 0 || cartan(i, j) < -3)
        return false;
      if ((cartan(i, j) == 0) != (cartan(j, i) == 0))
        return false;
    }
  }
  const IntMatrix g = symmetrizers.asDiagonal() * cartan;
  return g == g.transpose();
}

std::vector<Root> positive_root_closure(const IntMatrix &cartan, std::span<const int> order)
{
  const int n = static_cast<int>(cartan.rows());
  // A finite rank-16 system has at most 16^2 positive roots; anything larger
  // means the matrix is not of finite type.
  const std::size_t cap = 4 * static_cast<std::size_t>(n) * static_cast<std::size_t>(n) + 16;

  std::set<Root> known;
  std::vector<Root> level;
  for (int i = 0; i < n; ++i)
  {
    level.push_back(Root::Unit(n, i));
    known.insert(level.back());
  }

  while (!level.empty())
  {
    std::set<Root> next;
    for (const Root &beta : level)
    {
      const IntVector weight = cartan * beta.coeffs();
      for (int i : order)
      {
        // Length of the downward alpha_i-string through beta.
        Integer p = 0;
        Root down = beta;
        while (true)
        {
          down[i] -= 1;
          if (!known.count(down))
            break;
          ++p;
        }
        if (p - weight[i] > 0)
        {
          Root up = beta;
          up[i] += 1;
          if (!known.count(up))
            next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
    if (known.size() > cap)
      throw Error(ErrorCode::MalformedCartan, "root closure does not terminate; Cartan matrix is not of finite type");
  }

  std::vector<Root> roots(known.begin(), known.end());
  std::sort(roots.begin(), roots.end(), [](const Root &a, const Root &b) {
    const Integer ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  return roots;
}

RootSystem RootSystem::from_cartan(TypeSpec spec, IntMatrix cartan, IntVector symmetrizers)
{
  if (spec.rank < 1 || spec.rank > kMaxRank)
    throw Error(ErrorCode::InadmissibleRank, "rank out of range");
  if (cartan.rows() != spec.rank || cartan.cols() != spec.rank || symmetrizers.size() != spec.rank)
    throw Error(ErrorCode::MalformedCartan, "Cartan matrix shape does not match rank");
  if ((cartan.diagonal().array() != 2).any())
    throw Error(ErrorCode::MalformedCartan, "Cartan diagonal must be 2");

  RootSystem rs;
  rs.m_spec = spec;
  rs.m_cartan = std::move(cartan);
  rs.m_symmetrizers = std::move(symmetrizers);
  std::vector<int> order(spec.rank);
  std::iota(order.begin(), order.end(), 0);
  rs.m_positive = positive_root_closure(rs.m_cartan, order);
  return rs;
}

RootSystem build_root_system(const TypeSpec &spec)
{
  spec.validate();
  return RootSystem::from_cartan(spec, cartan_matrix(spec), cartan_symmetrizers(spec));
}

bool RootSystem::is_root(const Root &r) const
{
  if (r.rank() != rank() || r.isZero())
    return false;
  const Root pos = r.isNegative() ? -r : r;
  return std::binary_search(m_positive.begin(), m_positive.end(), pos, [](const Root &a, const Root &b) {
    const Integer ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
}

Coroot coroot_of(const Root &r, const RootSystem &rs)
{
  detail::check_same_rank(r.rank(), rs.rank());
  if (!rs.is_root(r))
    throw Error(ErrorCode::NotARoot, "not a root of " + rs.spec().name());
  const IntVector &d = rs.symmetrizers();
  const Integer norm = r.coeffs().dot(rs.gram() * r.coeffs());
  IntVector c(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
  {
    const Integer num = r[i] * 2 * d[i];
    if (num % norm != 0)
      throw Error(ErrorCode::MalformedCartan, "non-integral coroot coefficient");
    c[i] = num / norm;
  }
  return Coroot(c);
}

Weight root_as_weight(const Root &r, const RootSystem &rs)
{
  detail::check_same_rank(r.rank(), rs.rank());
  detail::check_magnitude(r.coeffs());
  return Weight(IntVector(rs.cartan() * r.coeffs()));
}

Weight rho(const RootSystem &rs) { return Weight(IntVector::Ones(rs.rank())); }

namespace
{
void check_node(const RootSystem &rs, int node)
{
  if (node < 1 || node > rs.rank())
    throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(node) + " outside 1.." + std::to_string(rs.rank()));
}
} // namespace

Root simple_root(const RootSystem &rs, int node)
{
  check_node(rs, node);
  return Root::Unit(rs.rank(), node - 1);
}

Coroot simple_coroot(const RootSystem &rs, int node)
{
  check_node(rs, node);
  return Coroot::Unit(rs.rank(), node - 1);
}

Weight fundamental_weight(const RootSystem &rs, int node)
{
  check_node(rs, node);
  return Weight::Unit(rs.rank(), node - 1);
}

std::vector<TypeSpec> all_types_up_to(int max_rank)
{
  std::vector<TypeSpec> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= std::min(max_rank, kMaxRank); ++r)
      if (TypeSpec{f, r}.admissible())
        out.push_back({f, r});
  return out;
}

} // namespace flagfano

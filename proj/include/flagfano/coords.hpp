#ifndef FLAGFANO_COORDS_HPP
#define FLAGFANO_COORDS_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagfano
{

using Integer = std::int64_t;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// Largest coordinate magnitude accepted by the Weyl-action kernels. With
/// Cartan entries bounded by 3 and rank by 16 nothing computed from inputs
/// under this bound can leave the 64-bit range.
inline constexpr Integer kCoordinateLimit = Integer{1} << 40;

enum class ErrorCode
{
  InadmissibleRank,
  RankMismatch,
  NotARoot,
  IndexOutOfRange,
  RankTooLargeForOracle,
  DegenerateParabolic,
  NotAPCharacter,
  NotInComplement,
  NotMinimalRep,
  CodimOutOfRange,
  BasisMismatch,
  OutOfRange,
  NotCominuscule,
  Overflow,
  MalformedCartan,
};

const char *to_string(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), m_code(code)
  {
  }

  ErrorCode code() const noexcept { return m_code; }

private:
  ErrorCode m_code;
};

// Basis tags. Coordinates over different bases never convert implicitly.
struct SimpleRootBasis
{
  static constexpr const char *name = "root";
};
struct SimpleCorootBasis
{
  static constexpr const char *name = "coroot";
};
struct FundamentalWeightBasis
{
  static constexpr const char *name = "weight";
};

/// Integer coordinate vector over a fixed basis of the (co)weight lattice.
template <typename Basis, typename Scalar = Integer>
class Coordinates
{
public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Coordinates() = default;
  explicit Coordinates(Vector coeffs) : m_coeffs(std::move(coeffs)) {}
  Coordinates(std::initializer_list<Scalar> coeffs) : m_coeffs(static_cast<Eigen::Index>(coeffs.size()))
  {
    Eigen::Index i = 0;
    for (Scalar c : coeffs)
      m_coeffs[i++] = c;
  }

  static Coordinates Zero(int rank) { return Coordinates(Vector::Zero(rank)); }
  static Coordinates Unit(int rank, int index0) { return Coordinates(Vector::Unit(rank, index0)); }

  int rank() const { return static_cast<int>(m_coeffs.size()); }
  const Vector &coeffs() const { return m_coeffs; }
  Vector &coeffs() { return m_coeffs; }

  /// 0-based coefficient access.
  Scalar operator[](int i) const { return m_coeffs[i]; }
  Scalar &operator[](int i) { return m_coeffs[i]; }

  bool isZero() const { return m_coeffs.isZero(); }
  bool allNonNegative() const { return (m_coeffs.array() >= 0).all(); }
  bool allNonPositive() const { return (m_coeffs.array() <= 0).all(); }
  /// Nonzero with all coefficients >= 0.
  bool isPositive() const { return !isZero() && allNonNegative(); }
  bool isNegative() const { return !isZero() && allNonPositive(); }

  std::vector<Scalar> toStdVector() const { return {m_coeffs.data(), m_coeffs.data() + m_coeffs.size()}; }

  friend bool operator==(const Coordinates &a, const Coordinates &b)
  {
    return a.m_coeffs.size() == b.m_coeffs.size() && a.m_coeffs == b.m_coeffs;
  }
  friend bool operator<(const Coordinates &a, const Coordinates &b)
  {
    return std::lexicographical_compare(a.m_coeffs.data(), a.m_coeffs.data() + a.m_coeffs.size(),
                                        b.m_coeffs.data(), b.m_coeffs.data() + b.m_coeffs.size());
  }

  friend Coordinates operator+(const Coordinates &a, const Coordinates &b) { return Coordinates(Vector(a.m_coeffs + b.m_coeffs)); }
  friend Coordinates operator-(const Coordinates &a, const Coordinates &b) { return Coordinates(Vector(a.m_coeffs - b.m_coeffs)); }
  friend Coordinates operator-(const Coordinates &a) { return Coordinates(Vector(-a.m_coeffs)); }
  friend Coordinates operator*(Scalar s, const Coordinates &a) { return Coordinates(Vector(s * a.m_coeffs)); }

  friend std::ostream &operator<<(std::ostream &os, const Coordinates &a)
  {
    os << Basis::name << "(";
    for (Eigen::Index i = 0; i < a.m_coeffs.size(); ++i)
      os << (i ? "," : "") << a.m_coeffs[i];
    return os << ")";
  }

private:
  Vector m_coeffs;
};

using Root = Coordinates<SimpleRootBasis>;
using Coroot = Coordinates<SimpleCorootBasis>;
using Weight = Coordinates<FundamentalWeightBasis>;

namespace detail
{
template <typename Derived>
void check_magnitude(const Eigen::MatrixBase<Derived> &v)
{
  if (v.size() > 0 && v.cwiseAbs().maxCoeff() > kCoordinateLimit)
    throw Error(ErrorCode::Overflow, "coordinate magnitude exceeds the checked-arithmetic bound");
}

inline void check_same_rank(int a, int b)
{
  if (a != b)
    throw Error(ErrorCode::RankMismatch, "rank " + std::to_string(a) + " vs " + std::to_string(b));
}
} // namespace detail

} // namespace flagfano

#endif

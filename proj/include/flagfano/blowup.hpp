#ifndef FLAGFANO_BLOWUP_HPP
#define FLAGFANO_BLOWUP_HPP

#include "flagfano/flag.hpp"

#include <string>
#include <vector>

namespace flagfano
{

/// sum_alpha a_alpha Bl*D_alpha + e E_Z on Bl_Z X.
struct DivisorClass
{
  std::vector<int> nodes; // picard_basis order
  IntVector pullback;
  Integer exceptional = 0;

  friend bool operator==(const DivisorClass &a, const DivisorClass &b)
  {
    return a.nodes == b.nodes && a.pullback == b.pullback && a.exceptional == b.exceptional;
  }
};

/// sum_alpha t_alpha C~_alpha + f e, where C~_alpha = Bl*C_alpha - e and e is
/// a line in a fibre of E_Z -> Z.
struct CurveClass
{
  std::vector<int> nodes;
  IntVector tilde;
  Integer e = 0;

  friend bool operator==(const CurveClass &a, const CurveClass &b)
  {
    return a.nodes == b.nodes && a.tilde == b.tilde && a.e == b.e;
  }
};

/// Coordinates of a divisor over the nef generators {Bl*D_alpha} u {H - E_Z}.
struct NefCoordinates
{
  std::vector<int> nodes;
  IntVector per_node;
  Integer h_minus_e = 0;

  friend bool operator==(const NefCoordinates &a, const NefCoordinates &b)
  {
    return a.nodes == b.nodes && a.per_node == b.per_node && a.h_minus_e == b.h_minus_e;
  }
};

NefCoordinates to_nef_coordinates(const DivisorClass &d);
DivisorClass from_nef_coordinates(const NefCoordinates &n);

/// Bl*D_alpha for each alpha, then H - E_Z.
std::vector<DivisorClass> nef_generators(const FlagVariety &fv, int codim);
/// C~_alpha for each alpha, then e.
std::vector<CurveClass> mori_generators(const FlagVariety &fv, int codim);

/// Intersection form in the bases {Bl*D_alpha, E_Z} x {C~_alpha, e}:
/// rows divisors, columns curves.
IntMatrix intersection_form(int num_nodes);

/// Throws BasisMismatch if the classes live over different Picard bases.
Integer intersect(const DivisorClass &d, const CurveClass &k);

struct AnticanonicalClass
{
  DivisorClass divisor; // (1 + beta_alpha) Bl*D_alpha - (c - 1) E_Z
  NefCoordinates nef;   // (beta_alpha + 2 - c) Bl*D_alpha + (c - 1)(H - E_Z)
};

AnticanonicalClass anticanonical_class(const FlagVariety &fv, int codim);

/// Nef iff every nef coordinate is >= 0; ample iff every one is > 0.
bool is_nef(const DivisorClass &d);
bool is_ample(const DivisorClass &d);
/// Globally generated line bundles on Bl_Z X are exactly the nef ones.
bool is_globally_generated(const DivisorClass &d);

enum class Verdict
{
  Fano,
  WeakFanoNotFano,
  NotWeakFano
};

const char *to_string(Verdict v);

enum class Tribool
{
  False,
  True,
  Unknown
};

const char *to_string(Tribool t);

/// Verdict from the margins beta_alpha - c + 2.
Verdict verdict_from_margins(const std::vector<Integer> &margins);

struct FanoReport
{
  BetaVector betas;
  int codim = 0;
  int dim = 0;
  std::vector<Integer> margins; // beta_alpha - c + 2, betas order
  Verdict verdict = Verdict::NotWeakFano;
  /// True when all margins are >= 0; otherwise undetermined.
  Tribool anticanonical_big = Tribool::Unknown;
  AnticanonicalClass anticanonical;
};

struct ConeReport
{
  std::vector<DivisorClass> nef_generators;
  std::vector<CurveClass> mori_generators;
  IntMatrix intersection; // nef x mori
  bool globally_generated_equals_nef = true;
  bool h_minus_e_is_big = true;
};

/// Throws CodimOutOfRange unless 2 <= codim <= dim X.
void check_codim(const FlagVariety &fv, int codim);

FanoReport classify(const FlagVariety &fv, int codim);
/// Reads the codimension from a Schubert datum.
FanoReport classify(const FlagVariety &fv, const SchubertDatum &z);

ConeReport cone_report(const FlagVariety &fv, int codim);

} // namespace flagfano

#endif

#include <doctest.h>

#include "flagfano/blowup.hpp"
#include "oracles.hpp"

#include <random>

using namespace flagfano;

namespace
{

// Intersection number built from the elementary pairings on Bl_Z X:
// Bl*D_a . Bl*C_b = delta_ab, Bl*D . e = 0, E_Z . Bl*C = 0, E_Z . e = -1,
// with C~_b = Bl*C_b - e.
Integer oracle_intersect(const DivisorClass &d, const CurveClass &k)
{
  Integer blc = 0; // coefficient of Bl*C_b summed against pullback
  Integer eCoeff = k.e;
  for (Eigen::Index b = 0; b < k.tilde.size(); ++b)
  {
    blc += d.pullback[b] * k.tilde[b];
    eCoeff -= k.tilde[b];
  }
  return blc + d.exceptional * eCoeff * -1;
}

// Weight of -K_X from the Euclidean realization, restricted to S \ S_P.
std::vector<long> oracle_kx(const TypeSpec &t, const ParabolicSubset &par)
{
  const IntMatrix c = oracle::cartan(t);
  std::vector<long> w(static_cast<std::size_t>(t.rank), 0);
  for (const auto &k : oracle::positive_roots(t))
  {
    bool inLevi = true;
    for (int i = 0; i < t.rank; ++i)
      if (k[static_cast<std::size_t>(i)] != 0 && !par.contains(i + 1))
        inLevi = false;
    if (!inLevi)
      for (int i = 0; i < t.rank; ++i)
        for (int j = 0; j < t.rank; ++j)
          w[static_cast<std::size_t>(i)] += c(i, j) * k[static_cast<std::size_t>(j)];
  }
  std::vector<long> out;
  for (int i = 1; i <= t.rank; ++i)
    if (!par.contains(i))
      out.push_back(w[static_cast<std::size_t>(i - 1)]);
  return out;
}

DivisorClass divisor(std::vector<int> nodes, std::vector<Integer> a, Integer e)
{
  DivisorClass d;
  d.nodes = std::move(nodes);
  d.pullback = IntVector::Map(a.data(), static_cast<Eigen::Index>(a.size()));
  d.exceptional = e;
  return d;
}

} // namespace

TEST_CASE("generators")
{
  const FlagVariety gb({Family::A, 2}, ParabolicSubset{});
  const auto nef = nef_generators(gb, 2);
  const auto mori = mori_generators(gb, 2);
  CHECK(nef.size() == 3);
  CHECK(mori.size() == 3);
  CHECK(nef.back() == divisor({1, 2}, {1, 1}, -1));
  CHECK(mori.back().tilde == IntVector::Zero(2));
  CHECK(mori.back().e == 1);

  const FlagVariety gr({Family::A, 3}, ParabolicSubset({1, 3}));
  CHECK(nef_generators(gr, 4).size() == 2);
  CHECK(mori_generators(gr, 4).size() == 2);
}

TEST_CASE("intersection table")
{
  const FlagVariety fv({Family::A, 3}, ParabolicSubset{});
  const auto nef = nef_generators(fv, 2);
  const auto mori = mori_generators(fv, 2);
  const DivisorClass &hMinusE = nef.back();
  const CurveClass &e = mori.back();
  CHECK(intersect(hMinusE, e) == 1);
  for (int i = 0; i < 3; ++i)
    CHECK(intersect(hMinusE, mori[static_cast<std::size_t>(i)]) == 0);
  const DivisorClass ez = divisor({1, 2, 3}, {0, 0, 0}, 1);
  CHECK(intersect(ez, e) == -1);
  CHECK(intersect(ez, mori[0]) == 1);

  const IntMatrix m = intersection_form(2);
  IntMatrix expected(3, 3);
  expected << 1, 0, 0, 0, 1, 0, 1, 1, -1;
  CHECK(m == expected);
}

TEST_CASE("intersect agrees with the elementary pairing oracle")
{
  std::mt19937 gen(2024);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (int n = 1; n <= 6; ++n)
  {
    std::vector<int> nodes;
    for (int i = 1; i <= n; ++i)
      nodes.push_back(i);
    for (int trial = 0; trial < 40; ++trial)
    {
      DivisorClass d{nodes, IntVector(n), coord(gen)};
      CurveClass k{nodes, IntVector(n), coord(gen)};
      for (int i = 0; i < n; ++i)
      {
        d.pullback[i] = coord(gen);
        k.tilde[i] = coord(gen);
      }
      CHECK(intersect(d, k) == oracle_intersect(d, k));
      CHECK(from_nef_coordinates(to_nef_coordinates(d)) == d);
    }
  }
}

TEST_CASE("basis mismatch")
{
  const DivisorClass d = divisor({1, 2}, {1, 1}, 0);
  CurveClass k{{1, 3}, IntVector::Zero(2), 1};
  try
  {
    intersect(d, k);
    FAIL("expected BasisMismatch");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == ErrorCode::BasisMismatch);
  }
}

TEST_CASE("nef coordinates")
{
  const NefCoordinates n = to_nef_coordinates(divisor({2}, {4}, -3));
  CHECK(n.per_node == (IntVector(1) << 1).finished());
  CHECK(n.h_minus_e == 3);
}

TEST_CASE("anticanonical class examples")
{
  const AnticanonicalClass gb = anticanonical_class(FlagVariety({Family::A, 3}, ParabolicSubset{}), 2);
  CHECK(gb.divisor == divisor({1, 2, 3}, {2, 2, 2}, -1));
  CHECK(gb.nef.per_node == IntVector::Ones(3));
  CHECK(gb.nef.h_minus_e == 1);

  const AnticanonicalClass gr24 = anticanonical_class(FlagVariety({Family::A, 3}, ParabolicSubset({1, 3})), 4);
  CHECK(gr24.divisor == divisor({2}, {4}, -3));
  CHECK(gr24.nef.per_node[0] == 1);
  CHECK(gr24.nef.h_minus_e == 3);

  const AnticanonicalClass gr25 = anticanonical_class(FlagVariety({Family::A, 4}, ParabolicSubset({1, 3, 4})), 6);
  CHECK(gr25.nef.per_node[0] == 0);
  CHECK(gr25.nef.h_minus_e == 5);
}

TEST_CASE("nef and ample")
{
  CHECK_FALSE(is_nef(divisor({1, 2}, {0, 0}, 1)));
  CHECK(is_nef(divisor({1, 2}, {0, 0}, 0)));
  CHECK_FALSE(is_ample(divisor({1, 2}, {0, 0}, 0)));
  // Bl*D_1 + Bl*D_2 + (H - E_Z)
  CHECK(is_ample(divisor({1, 2}, {2, 2}, -1)));
  CHECK(is_globally_generated(divisor({1, 2}, {2, 2}, -1)));
  CHECK(is_globally_generated(divisor({1, 2}, {1, 0}, 0)));
}

TEST_CASE("B4: positive scaling preserves nef and ample")
{
  std::mt19937 gen(99);
  std::uniform_int_distribution<int> coord(-4, 6);
  for (int trial = 0; trial < 300; ++trial)
  {
    DivisorClass d{{1, 2, 3}, IntVector(3), coord(gen)};
    for (int i = 0; i < 3; ++i)
      d.pullback[i] = coord(gen);
    for (Integer k : {2, 3, 7})
    {
      DivisorClass scaled{d.nodes, d.pullback * k, d.exceptional * k};
      CHECK(is_nef(scaled) == is_nef(d));
      CHECK(is_ample(scaled) == is_ample(d));
    }
  }
}

TEST_CASE("classify examples")
{
  const FlagVariety gb({Family::A, 2}, ParabolicSubset{});
  CHECK(classify(gb, 2).verdict == Verdict::Fano);
  CHECK(classify(gb, 3).verdict == Verdict::WeakFanoNotFano);
  CHECK(classify(gb, 3).anticanonical_big == Tribool::True);

  const FlagVariety gr25({Family::A, 4}, ParabolicSubset({1, 3, 4}));
  const FanoReport point = classify(gr25, 6);
  CHECK(point.verdict == Verdict::WeakFanoNotFano);
  CHECK(point.margins == std::vector<Integer>{0});
  CHECK(classify(gr25, 5).verdict == Verdict::Fano);

  const FlagVariety gr36({Family::A, 5}, ParabolicSubset({1, 2, 4, 5}));
  const FanoReport bad = classify(gr36, 9);
  CHECK(bad.verdict == Verdict::NotWeakFano);
  CHECK(bad.anticanonical_big == Tribool::Unknown);

  const FlagVariety fv({Family::A, 3}, ParabolicSubset({1, 3}));
  CHECK(classify(fv, schubert_codim(fv, WeylWord{})).codim == 4);

  CHECK(std::string(to_string(Verdict::Fano)) == "FANO");
  CHECK(std::string(to_string(Verdict::WeakFanoNotFano)) == "WEAK_FANO_NOT_FANO");
  CHECK(std::string(to_string(Verdict::NotWeakFano)) == "NOT_WEAK_FANO");
}

TEST_CASE("codimension range")
{
  const FlagVariety gb({Family::A, 2}, ParabolicSubset{});
  for (int c : {-1, 0, 1, 4})
  {
    try
    {
      classify(gb, c);
      FAIL("expected CodimOutOfRange");
    }
    catch (const Error &e)
    {
      CHECK(e.code() == ErrorCode::CodimOutOfRange);
    }
  }
  CHECK_THROWS_AS(classify(FlagVariety({Family::A, 1}, ParabolicSubset{}), 1), Error);
  CHECK_THROWS_AS(cone_report(gb, 1), Error);
}

TEST_CASE("verdict_from_margins")
{
  CHECK(verdict_from_margins({1, 2}) == Verdict::Fano);
  CHECK(verdict_from_margins({0, 2}) == Verdict::WeakFanoNotFano);
  CHECK(verdict_from_margins({-1, 2}) == Verdict::NotWeakFano);
}

TEST_CASE("B1-B5 over every parabolic up to rank 5")
{
  for (const TypeSpec &t : all_types_up_to(5))
  {
    CAPTURE(t.name());
    const RootSystem rs = build_root_system(t);
    for (const auto &par : all_parabolics(t.rank))
    {
      const FlagVariety fv(rs, par);
      const auto kx = oracle_kx(t, par);
      const int dim = dimension(fv);
      for (int c = 2; c <= dim; ++c)
      {
        const FanoReport r = classify(fv, c);
        const ConeReport cones = cone_report(fv, c);
        const auto n = static_cast<Eigen::Index>(kx.size());
        // B1: nef and Mori generators are dual bases.
        CHECK(cones.intersection == IntMatrix::Identity(n + 1, n + 1));
        for (std::size_t i = 0; i < cones.nef_generators.size(); ++i)
          for (std::size_t j = 0; j < cones.mori_generators.size(); ++j)
            CHECK(oracle_intersect(cones.nef_generators[i], cones.mori_generators[j]) == (i == j ? 1 : 0));

        // -K = Bl*(-K_X) - (c - 1) E_Z with -K_X from the Euclidean oracle.
        const DivisorClass &k = r.anticanonical.divisor;
        for (Eigen::Index i = 0; i < n; ++i)
          CHECK(k.pullback[i] == kx[static_cast<std::size_t>(i)]);
        CHECK(k.exceptional == -(c - 1));
        // B2: the two bases describe the same class.
        CHECK(from_nef_coordinates(r.anticanonical.nef) == k);

        // B3: Kleiman test on the Mori generators.
        bool ample = true, nef = true;
        for (const CurveClass &curve : cones.mori_generators)
        {
          const Integer v = oracle_intersect(k, curve);
          ample = ample && v > 0;
          nef = nef && v >= 0;
        }
        const Verdict expected = ample ? Verdict::Fano : nef ? Verdict::WeakFanoNotFano : Verdict::NotWeakFano;
        CHECK(r.verdict == expected);
        CHECK(is_ample(k) == ample);
        CHECK(is_nef(k) == nef);
        CHECK(is_globally_generated(k) == nef);

        // B4: margins are -K . C~_alpha.
        for (Eigen::Index i = 0; i < n; ++i)
          CHECK(r.margins[static_cast<std::size_t>(i)] == oracle_intersect(k, cones.mori_generators[static_cast<std::size_t>(i)]));
        // B5: bigness reported exactly when weak Fano.
        CHECK((r.anticanonical_big == Tribool::True) == nef);
        CHECK(cones.globally_generated_equals_nef);
        CHECK(cones.h_minus_e_is_big);
      }
    }
  }
}

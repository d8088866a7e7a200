#include <doctest.h>

#include "flagfano/root_system.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace flagfano;

namespace
{
std::vector<long> as_long(const Root &r) { return {r.coeffs().data(), r.coeffs().data() + r.coeffs().size()}; }
} // namespace

TEST_CASE("type admissibility")
{
  CHECK(TypeSpec{Family::A, 1}.admissible());
  CHECK_FALSE(TypeSpec{Family::A, 0}.admissible());
  CHECK_FALSE(TypeSpec{Family::B, 1}.admissible());
  CHECK(TypeSpec{Family::C, 2}.admissible());
  CHECK_FALSE(TypeSpec{Family::D, 3}.admissible());
  CHECK_FALSE(TypeSpec{Family::E, 5}.admissible());
  CHECK_FALSE(TypeSpec{Family::E, 9}.admissible());
  CHECK_FALSE(TypeSpec{Family::F, 3}.admissible());
  CHECK_FALSE(TypeSpec{Family::G, 3}.admissible());
  CHECK_FALSE(TypeSpec{Family::A, 17}.admissible());

  try
  {
    build_root_system({Family::D, 3});
    FAIL("expected InadmissibleRank");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == ErrorCode::InadmissibleRank);
  }

  CHECK(parse_type("e8") == TypeSpec{Family::E, 8});
  CHECK_THROWS_AS(parse_type("X3"), Error);
  CHECK_THROWS_AS(parse_type("A"), Error);
}

TEST_CASE("Cartan matrices match the Euclidean realizations")
{
  for (const TypeSpec &t : all_types_up_to(8))
  {
    CAPTURE(t.name());
    CHECK(cartan_matrix(t) == oracle::cartan(t));
    CHECK(cartan_is_well_formed(cartan_matrix(t), cartan_symmetrizers(t)));
  }
}

TEST_CASE("Cartan orientation: column j is alpha_j in weight coordinates")
{
  const RootSystem g2 = build_root_system({Family::G, 2});
  // <alpha_2, alpha_1^vee> = -3 with alpha_1 short.
  CHECK(g2.cartan()(0, 1) == -3);
  CHECK(g2.cartan()(1, 0) == -1);
  const RootSystem b3 = build_root_system({Family::B, 3});
  CHECK(b3.cartan()(2, 1) == -2);
  CHECK(b3.cartan()(1, 2) == -1);
}

TEST_CASE("closure reproduces the Weyl orbit of the simple roots")
{
  for (const TypeSpec &t : all_types_up_to(8))
  {
    CAPTURE(t.name());
    const RootSystem rs = build_root_system(t);
    std::set<std::vector<long>> got;
    for (const Root &r : rs.positive_roots())
      got.insert(as_long(r));
    CHECK(got == oracle::positive_roots(t));
  }
}

TEST_CASE("build_root_system small cases")
{
  const RootSystem a1 = build_root_system({Family::A, 1});
  REQUIRE(a1.num_positive_roots() == 1);
  CHECK(a1.positive_roots()[0] == Root{1});

  const RootSystem a2 = build_root_system({Family::A, 2});
  REQUIRE(a2.num_positive_roots() == 3);
  CHECK(a2.positive_roots()[0] == Root{0, 1});
  CHECK(a2.positive_roots()[1] == Root{1, 0});
  CHECK(a2.positive_roots()[2] == Root{1, 1});

  const RootSystem g2 = build_root_system({Family::G, 2});
  CHECK(g2.num_positive_roots() == 6);
  CHECK(g2.highest_root() == Root{3, 2});
}

TEST_CASE("positive root counts and highest roots (frozen from the orbit oracle)")
{
  struct Case
  {
    TypeSpec t;
    int count;
    std::vector<long> top;
  };
  const std::vector<Case> cases = {
      {{Family::A, 4}, 10, {1, 1, 1, 1}},
      {{Family::B, 3}, 9, {1, 2, 2}},
      {{Family::C, 3}, 9, {2, 2, 1}},
      {{Family::D, 5}, 20, {1, 2, 2, 1, 1}},
      {{Family::E, 6}, 36, {1, 2, 2, 3, 2, 1}},
      {{Family::E, 7}, 63, {2, 2, 3, 4, 3, 2, 1}},
      {{Family::E, 8}, 120, {2, 3, 4, 6, 5, 4, 3, 2}},
      {{Family::F, 4}, 24, {2, 3, 4, 2}},
      {{Family::G, 2}, 6, {3, 2}},
  };
  for (const auto &c : cases)
  {
    CAPTURE(c.t.name());
    const RootSystem rs = build_root_system(c.t);
    CHECK(rs.num_positive_roots() == c.count);
    CHECK(as_long(rs.highest_root()) == c.top);
    CHECK(static_cast<int>(oracle::positive_roots(c.t).size()) == c.count);
    // Unique at maximal height.
    const auto top = height(rs.highest_root());
    CHECK(std::count_if(rs.positive_roots().begin(), rs.positive_roots().end(),
                        [&](const Root &r) { return height(r) == top; }) == 1);
  }
}

TEST_CASE("I1: closure is independent of simple-root processing order")
{
  std::mt19937 gen(12345);
  for (const TypeSpec &t : all_types_up_to(8))
  {
    const RootSystem rs = build_root_system(t);
    std::vector<int> order(t.rank);
    std::iota(order.begin(), order.end(), 0);
    for (int trial = 0; trial < 3; ++trial)
    {
      std::shuffle(order.begin(), order.end(), gen);
      CHECK(positive_root_closure(rs.cartan(), order) == rs.positive_roots());
    }
  }
}

TEST_CASE("I2: sign coherence and sort order")
{
  for (const TypeSpec &t : all_types_up_to(8))
  {
    const RootSystem rs = build_root_system(t);
    const auto &roots = rs.positive_roots();
    for (std::size_t i = 0; i < roots.size(); ++i)
    {
      CHECK(roots[i].isPositive());
      if (i)
        CHECK((height(roots[i - 1]) < height(roots[i]) ||
               (height(roots[i - 1]) == height(roots[i]) && roots[i - 1] < roots[i])));
    }
  }
}

TEST_CASE("closure rejects a non-finite Cartan matrix")
{
  // Affine A_2^(1): a 3-cycle.
  IntMatrix c(3, 3);
  c << 2, -1, -1, -1, 2, -1, -1, -1, 2;
  std::vector<int> order{0, 1, 2};
  CHECK_THROWS_AS(positive_root_closure(c, order), Error);
}

TEST_CASE("height")
{
  const RootSystem rs = build_root_system({Family::E, 7});
  for (int i = 1; i <= 7; ++i)
    CHECK(height(simple_root(rs, i)) == 1);
  CHECK(height(-rs.highest_root()) == -17);
  for (int n = 2; n <= 10; ++n)
    CHECK(height(build_root_system({Family::A, n - 1}).highest_root()) == n - 1);
  CHECK(height(build_root_system({Family::G, 2}).highest_root()) == 5);
}

TEST_CASE("pairing")
{
  const RootSystem a3 = build_root_system({Family::A, 3});
  for (int i = 1; i <= 3; ++i)
    CHECK(pairing(rho(a3), simple_coroot(a3, i)) == 1);
  for (int n = 2; n <= 9; ++n)
  {
    const RootSystem rs = build_root_system({Family::A, n - 1});
    CHECK(pairing(rho(rs), coroot_of(rs.highest_root(), rs)) == n - 1);
  }
  // G_2: alpha_0^vee = alpha_1^vee + 2 alpha_2^vee, so <rho, alpha_0^vee> = 3.
  const RootSystem g2 = build_root_system({Family::G, 2});
  CHECK(pairing(rho(g2), coroot_of(g2.highest_root(), g2)) == 3);
  CHECK_THROWS_AS(pairing(rho(g2), simple_coroot(a3, 1)), Error);
}

TEST_CASE("coroot_of agrees with the Euclidean 2 beta / (beta, beta)")
{
  for (const TypeSpec &t : all_types_up_to(8))
  {
    CAPTURE(t.name());
    const RootSystem rs = build_root_system(t);
    for (const Root &r : rs.positive_roots())
    {
      const Coroot c = coroot_of(r, rs);
      CHECK(std::vector<long>(c.coeffs().data(), c.coeffs().data() + c.rank()) == oracle::coroot(t, as_long(r)));
      CHECK(coroot_of(-r, rs) == -c);
    }
  }
}

TEST_CASE("coroot_of examples")
{
  const RootSystem a2 = build_root_system({Family::A, 2});
  CHECK(coroot_of(simple_root(a2, 2), a2) == simple_coroot(a2, 2));
  CHECK(coroot_of(Root{1, 1}, a2) == Coroot{1, 1});

  // B_2: alpha_0 = alpha_1 + 2 alpha_2 is long, alpha_0^vee = alpha_1^vee + alpha_2^vee.
  const RootSystem b2 = build_root_system({Family::B, 2});
  CHECK(b2.highest_root() == Root{1, 2});
  CHECK(height(b2.highest_root()) == 3);
  CHECK(coroot_of(b2.highest_root(), b2) == Coroot{1, 1});
  CHECK(dual_height(coroot_of(b2.highest_root(), b2)) == 2);

  try
  {
    coroot_of(Root{2, 1}, b2);
    FAIL("expected NotARoot");
  }
  catch (const Error &e)
  {
    CHECK(e.code() == ErrorCode::NotARoot);
  }
}

TEST_CASE("I3: <rho, alpha_0^vee> = ht(alpha_0) exactly on simply-laced types")
{
  // Non-simply-laced values <rho, alpha_0^vee> = h^vee - 1 against ht = h - 1.
  for (const TypeSpec &t : all_types_up_to(8))
  {
    CAPTURE(t.name());
    const RootSystem rs = build_root_system(t);
    const Integer lhs = pairing(rho(rs), coroot_of(rs.highest_root(), rs));
    const Integer ht = height(rs.highest_root());
    const int n = t.rank;
    switch (t.family)
    {
    case Family::B: CHECK(lhs == 2 * n - 2); CHECK(ht == 2 * n - 1); break;
    case Family::C: CHECK(lhs == n); CHECK(ht == 2 * n - 1); break;
    case Family::F: CHECK(lhs == 8); CHECK(ht == 11); break;
    case Family::G: CHECK(lhs == 3); CHECK(ht == 5); break;
    default: CHECK(lhs == ht); break;
    }
  }
}

TEST_CASE("I4: root_as_weight")
{
  const RootSystem a2 = build_root_system({Family::A, 2});
  CHECK(root_as_weight(Root{1, 0}, a2) == Weight{2, -1});
  CHECK(root_as_weight(Root{0, 0}, a2) == Weight{0, 0});
  CHECK(root_as_weight(Root{1, 1}, a2) == Weight{1, 1});
  CHECK_THROWS_AS(root_as_weight(Root{1, 0, 0}, a2), Error);

  for (const TypeSpec &t : all_types_up_to(8))
  {
    const RootSystem rs = build_root_system(t);
    std::set<Weight> seen;
    for (const Root &r : rs.positive_roots())
      seen.insert(root_as_weight(r, rs));
    CHECK(seen.size() == rs.positive_roots().size());
  }
}

TEST_CASE("rho is the half sum of positive roots")
{
  for (const TypeSpec &t : all_types_up_to(8))
  {
    const RootSystem rs = build_root_system(t);
    IntVector sum = IntVector::Zero(t.rank);
    for (const Root &r : rs.positive_roots())
      sum += r.coeffs();
    CHECK(root_as_weight(Root(sum), rs) == 2 * rho(rs));
  }
  CHECK(rho(build_root_system({Family::A, 1})) == Weight{1});
  CHECK(rho(build_root_system({Family::A, 3})) == Weight{1, 1, 1});
}

TEST_CASE("I5: simply-laced coroots reuse root coefficients")
{
  for (const TypeSpec &t : all_types_up_to(8))
  {
    const RootSystem rs = build_root_system(t);
    if (!rs.is_simply_laced())
      continue;
    for (const Root &r : rs.positive_roots())
      CHECK(coroot_of(r, rs).coeffs() == r.coeffs());
  }
}

TEST_CASE("rank 16 systems build")
{
  CHECK(build_root_system({Family::A, 16}).num_positive_roots() == 136);
  CHECK(build_root_system({Family::B, 16}).num_positive_roots() == 256);
  CHECK(build_root_system({Family::D, 16}).num_positive_roots() == 240);
}

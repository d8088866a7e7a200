#include "flagfano/self_check.hpp"

#include "flagfano/special.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace flagfano
{

namespace
{

// A suite returns a short failure description, or an empty string on success,
// and reports how many cases it covered.
struct Outcome
{
  long cases = 0;
  std::string failure;

  void fail(const std::string &what)
  {
    if (failure.empty())
      failure = what;
  }
};

class Checker
{
public:
  Checker(std::ostream &out, const RootSystemProvider &provider) : m_out(out), m_provider(provider) {}

  const RootSystem &system(const TypeSpec &spec)
  {
    auto it = m_cache.find(spec.name());
    if (it == m_cache.end())
      it = m_cache.emplace(spec.name(), m_provider(spec)).first;
    return it->second;
  }

  template <typename Fn>
  void suite(const std::string &id, const std::string &title, Fn &&fn)
  {
    Outcome o;
    try
    {
      fn(o);
    }
    catch (const std::exception &e)
    {
      o.fail(std::string("exception: ") + e.what());
    }
    const bool ok = o.failure.empty();
    m_failures += ok ? 0 : 1;
    m_out << (ok ? "[PASS] " : "[FAIL] ") << id << "  " << title << "  (" << o.cases << " cases)";
    if (!ok)
      m_out << "  -- " << o.failure;
    m_out << "\n";
  }

  int failures() const { return m_failures; }

private:
  std::ostream &m_out;
  const RootSystemProvider &m_provider;
  std::map<std::string, RootSystem> m_cache;
  int m_failures = 0;
};

std::string where(const TypeSpec &spec, const ParabolicSubset &par)
{
  std::ostringstream os;
  os << spec.name() << " S_P={";
  for (std::size_t i = 0; i < par.nodes().size(); ++i)
    os << (i ? "," : "") << par.nodes()[i];
  os << "}";
  return os.str();
}

bool supported_on(const Root &beta, const ParabolicSubset &par)
{
  for (int i = 0; i < beta.rank(); ++i)
    if (beta[i] != 0 && !par.contains(i + 1))
      return false;
  return true;
}

// w_{0,P} built greedily with the largest admissible index: a different
// reduced word for the same element in general.
WeylWord longest_element_descending(const ParabolicSubset &par, const RootSystem &rs)
{
  WeylWord w;
  bool extended = true;
  while (extended)
  {
    extended = false;
    for (auto it = par.nodes().rbegin(); it != par.nodes().rend(); ++it)
      if (act(w, simple_root(rs, *it), rs).isPositive())
      {
        w.letters.push_back(*it);
        extended = true;
        break;
      }
  }
  return w;
}

} // namespace

int run_self_check(std::ostream &out, const RootSystemProvider &provider)
{
  Checker ck(out, provider);
  const std::vector<TypeSpec> upTo8 = all_types_up_to(8);
  auto upTo = [&](int r) {
    std::vector<TypeSpec> v;
    for (const auto &t : upTo8)
      if (t.rank <= r)
        v.push_back(t);
    return v;
  };

  ck.suite("R0", "Cartan matrix axioms and symmetrizability", [&](Outcome &o) {
    for (const auto &t : upTo8)
    {
      const RootSystem &rs = ck.system(t);
      ++o.cases;
      if (!cartan_is_well_formed(rs.cartan(), rs.symmetrizers()))
        o.fail(t.name() + " Cartan matrix malformed");
    }
  });

  ck.suite("I1", "closure independent of simple-root order", [&](Outcome &o) {
    for (const auto &t : upTo8)
    {
      const RootSystem &rs = ck.system(t);
      std::vector<int> order(t.rank);
      std::iota(order.begin(), order.end(), 0);
      std::reverse(order.begin(), order.end());
      ++o.cases;
      if (positive_root_closure(rs.cartan(), order) != rs.positive_roots())
        o.fail(t.name() + " reversed order differs");
      std::rotate(order.begin(), order.begin() + t.rank / 2, order.end());
      ++o.cases;
      if (positive_root_closure(rs.cartan(), order) != rs.positive_roots())
        o.fail(t.name() + " rotated order differs");
    }
  });

  ck.suite("I2", "positive roots are sign coherent", [&](Outcome &o) {
    for (const auto &t : upTo8)
      for (const Root &b : ck.system(t).positive_roots())
      {
        ++o.cases;
        if (!b.isPositive())
          o.fail(t.name() + " mixed-sign root");
      }
  });

  // <rho, alpha_0^vee> is h^vee - 1 and ht(alpha_0) is h - 1; they agree
  // exactly on the simply-laced types and h^vee < h otherwise.
  ck.suite("I3", "<rho, alpha_0^vee> vs ht(alpha_0): equal iff simply laced", [&](Outcome &o) {
    for (const auto &t : upTo8)
    {
      const RootSystem &rs = ck.system(t);
      const Integer lhs = pairing(rho(rs), coroot_of(rs.highest_root(), rs));
      const Integer ht = height(rs.highest_root());
      ++o.cases;
      if (rs.is_simply_laced() ? lhs != ht : lhs >= ht)
        o.fail(t.name() + " <rho,alpha_0^vee>=" + std::to_string(lhs) + " ht=" + std::to_string(ht));
      // h - 1 from the root count: |R| = rank * h.
      ++o.cases;
      if (2 * rs.num_positive_roots() != t.rank * (ht + 1))
        o.fail(t.name() + " ht(alpha_0) + 1 is not the Coxeter number");
    }
  });

  ck.suite("I4", "root_as_weight injective on positive roots", [&](Outcome &o) {
    for (const auto &t : upTo8)
    {
      const RootSystem &rs = ck.system(t);
      std::set<Weight> seen;
      for (const Root &b : rs.positive_roots())
        seen.insert(root_as_weight(b, rs));
      ++o.cases;
      if (seen.size() != rs.positive_roots().size())
        o.fail(t.name() + " collision");
    }
  });

  ck.suite("I5", "simply-laced coroot coefficients equal root coefficients", [&](Outcome &o) {
    for (const auto &t : upTo8)
    {
      const RootSystem &rs = ck.system(t);
      if (!rs.is_simply_laced())
        continue;
      for (const Root &b : rs.positive_roots())
      {
        ++o.cases;
        if (coroot_of(b, rs).coeffs() != b.coeffs())
          o.fail(t.name() + " coroot differs");
      }
    }
  });

  ck.suite("W1", "w_{0,P}^2 = 1 on rho and fundamental weights (rank <= 5)", [&](Outcome &o) {
    for (const auto &t : upTo(5))
    {
      const RootSystem &rs = ck.system(t);
      for (const auto &par : all_parabolics(t.rank))
      {
        WeylWord w = longest_element(par, rs);
        WeylWord ww = w;
        ww.letters.insert(ww.letters.end(), w.letters.begin(), w.letters.end());
        ++o.cases;
        if (act(ww, rho(rs), rs) != rho(rs))
          o.fail(where(t, par) + " on rho");
        for (int i = 1; i <= t.rank; ++i)
          if (act(ww, fundamental_weight(rs, i), rs) != fundamental_weight(rs, i))
            o.fail(where(t, par) + " on a fundamental weight");
      }
      // Include S_P = S, the whole Weyl group.
      const WeylWord w0 = longest_element(ParabolicSubset::full(t.rank), rs);
      WeylWord ww = w0;
      ww.letters.insert(ww.letters.end(), w0.letters.begin(), w0.letters.end());
      ++o.cases;
      if (act(ww, rho(rs), rs) != rho(rs))
        o.fail(t.name() + " w_0^2 != 1");
    }
  });

  ck.suite("W2", "l(w_{0,P}) = |R_P^+| (rank <= 5)", [&](Outcome &o) {
    for (const auto &t : upTo(5))
    {
      const RootSystem &rs = ck.system(t);
      auto pars = all_parabolics(t.rank);
      pars.push_back(ParabolicSubset::full(t.rank));
      for (const auto &par : pars)
      {
        const int expected = static_cast<int>(std::count_if(rs.positive_roots().begin(), rs.positive_roots().end(),
                                                            [&](const Root &b) { return supported_on(b, par); }));
        ++o.cases;
        if (length(longest_element(par, rs), rs) != expected)
          o.fail(where(t, par));
      }
    }
  });

  ck.suite("W3", "w_{0,P} negates R_P^+ and permutes the rest (rank <= 5)", [&](Outcome &o) {
    for (const auto &t : upTo(5))
    {
      const RootSystem &rs = ck.system(t);
      for (const auto &par : all_parabolics(t.rank))
      {
        const WeylWord w = longest_element(par, rs);
        std::set<Root> inside, outside, imgIn, imgOut;
        for (const Root &b : rs.positive_roots())
        {
          if (supported_on(b, par))
          {
            inside.insert(b);
            imgIn.insert(-act(w, b, rs));
          }
          else
          {
            outside.insert(b);
            imgOut.insert(act(w, b, rs));
          }
        }
        ++o.cases;
        if (inside != imgIn || outside != imgOut)
          o.fail(where(t, par));
      }
    }
  });

  ck.suite("W4", "|W^P| = |W| / |W_P| against the brute-force group (rank <= 3)", [&](Outcome &o) {
    for (const auto &t : upTo(3))
    {
      const RootSystem &rs = ck.system(t);
      const auto group = brute_force_group(rs);
      for (const auto &par : all_parabolics(t.rank))
      {
        const auto wp = std::count_if(group.begin(), group.end(), [&](const GroupElement &g) {
          return std::all_of(g.word.letters.begin(), g.word.letters.end(), [&](int i) { return par.contains(i); });
        });
        ++o.cases;
        if (static_cast<long>(enumerate_coset_reps(par, rs).size()) * wp != static_cast<long>(group.size()))
          o.fail(where(t, par));
      }
    }
  });

  ck.suite("W5", "produced words are reduced (rank <= 4)", [&](Outcome &o) {
    for (const auto &t : upTo(4))
    {
      const RootSystem &rs = ck.system(t);
      for (const auto &par : all_parabolics(t.rank))
      {
        const WeylWord w = longest_element(par, rs);
        ++o.cases;
        if (length(w, rs) != w.size())
          o.fail(where(t, par) + " longest element");
        for (const WeylWord &rep : enumerate_coset_reps(par, rs, 6))
        {
          ++o.cases;
          if (length(rep, rs) != rep.size())
            o.fail(where(t, par) + " coset representative");
        }
      }
    }
  });

  ck.suite("F1", "rho + w_{0,P}(rho) vanishes on S_P (rank <= 6)", [&](Outcome &o) {
    for (const auto &t : upTo(6))
      for (const auto &par : all_parabolics(t.rank))
      {
        const FlagVariety fv(ck.system(t), par);
        const Weight k = anticanonical_weight(fv);
        ++o.cases;
        for (int i : par.nodes())
          if (k[i - 1] != 0)
            o.fail(where(t, par));
      }
  });

  ck.suite("F3", "beta independent of the reduced word for w_{0,P} (rank <= 6)", [&](Outcome &o) {
    for (const auto &t : upTo(6))
      for (const auto &par : all_parabolics(t.rank))
      {
        const FlagVariety fv(ck.system(t), par);
        ++o.cases;
        if (beta_values(fv) != beta_values(fv, longest_element_descending(par, fv.root_system())))
          o.fail(where(t, par));
      }
  });

  ck.suite("F4", "dim Gr(r,n) = r(n-r), n <= 9", [&](Outcome &o) {
    for (int n = 2; n <= 9; ++n)
      for (int r = 1; r < n; ++r)
      {
        const FlagVariety fv(ck.system({Family::A, n - 1}), ParabolicSubset::maximal(n - 1, r));
        ++o.cases;
        if (dimension(fv) != r * (n - r))
          o.fail("Gr(" + std::to_string(r) + "," + std::to_string(n) + ")");
      }
  });

  // B1-B5 over every parabolic of rank <= 6 and every admissible codimension.
  ck.suite("B1-B5", "cone duality, basis round trip, classifier vs cone test, scaling, margin certificates", [&](Outcome &o) {
    for (const auto &t : upTo(6))
      for (const auto &par : all_parabolics(t.rank))
      {
        const FlagVariety fv(ck.system(t), par);
        const int dim = dimension(fv);
        for (int c = 2; c <= dim; ++c)
        {
          ++o.cases;
          const std::string at = where(t, par) + " c=" + std::to_string(c);
          const ConeReport cones = cone_report(fv, c);
          if (cones.intersection != IntMatrix::Identity(cones.intersection.rows(), cones.intersection.cols()))
            o.fail("B1 " + at);

          const FanoReport rep = classify(fv, c);
          const DivisorClass &k = rep.anticanonical.divisor;
          if (from_nef_coordinates(rep.anticanonical.nef) != k || to_nef_coordinates(k) != rep.anticanonical.nef)
            o.fail("B2 " + at);

          const bool agree = (rep.verdict == Verdict::Fano) == is_ample(k) &&
                             (rep.verdict != Verdict::NotWeakFano) == is_nef(k);
          if (!agree)
            o.fail("B3 " + at);

          for (Integer s : {2, 3})
          {
            DivisorClass scaled{k.nodes, s * k.pullback, s * k.exceptional};
            if (is_nef(scaled) != is_nef(k) || is_ample(scaled) != is_ample(k))
              o.fail("B4 " + at);
          }

          const auto moris = mori_generators(fv, c);
          for (std::size_t a = 0; a < rep.margins.size(); ++a)
            if (intersect(k, moris[a]) != rep.margins[a])
              o.fail("B5 " + at);
          if (intersect(k, moris.back()) != c - 1)
            o.fail("B5 (e) " + at);
        }
      }
  });

  ck.suite("S1", "Grassmannian closed form = classify, n <= 9", [&](Outcome &o) {
    for (int n = 2; n <= 9; ++n)
      for (int r = 1; r < n; ++r)
      {
        const FlagVariety fv(ck.system({Family::A, n - 1}), ParabolicSubset::maximal(n - 1, r));
        for (int c = 2; c <= r * (n - r); ++c)
        {
          ++o.cases;
          if (grassmannian_classify(r, n, c) != classify(fv, c).verdict)
            o.fail("Gr(" + std::to_string(r) + "," + std::to_string(n) + ") c=" + std::to_string(c));
        }
      }
  });

  ck.suite("S2", "Grassmannian point law = classify at c = r(n-r), n <= 9", [&](Outcome &o) {
    for (int n = 2; n <= 9; ++n)
      for (int r = 1; r < n; ++r)
      {
        if (r * (n - r) < 2)
          continue;
        const FlagVariety fv(ck.system({Family::A, n - 1}), ParabolicSubset::maximal(n - 1, r));
        ++o.cases;
        if (grassmannian_point_classify(r, n) != classify(fv, r * (n - r)).verdict)
          o.fail("Gr(" + std::to_string(r) + "," + std::to_string(n) + ")");
      }
  });

  // The height law is exact on simply-laced types only; for the others the
  // threshold comes from <rho, alpha_0^vee>. Height-law disagreements are
  // listed separately below and by the acceptance suite.
  std::vector<std::string> heightLawGaps;
  ck.suite("S3", "cominuscule closed form = classify, rank <= 8", [&](Outcome &o) {
    for (const auto &t : upTo8)
    {
      const RootSystem &rs = ck.system(t);
      for (int node : cominuscule_nodes(rs))
      {
        const FlagVariety fv(rs, ParabolicSubset::maximal(t.rank, node));
        for (int c = 2; c <= dimension(fv); ++c)
        {
          ++o.cases;
          const Verdict engine = classify(fv, c).verdict;
          if (cominuscule_coroot_classify(rs, node, c) != engine)
            o.fail(t.name() + " node " + std::to_string(node) + " c=" + std::to_string(c));
          if (rs.is_simply_laced() && cominuscule_classify(rs, node, c) != engine)
            o.fail(t.name() + " node " + std::to_string(node) + " c=" + std::to_string(c) + " (height law)");
          if (!rs.is_simply_laced() && cominuscule_classify(rs, node, c) != engine)
            heightLawGaps.push_back(t.name() + ":" + std::to_string(node) + ":c" + std::to_string(c));
        }
      }
    }
  });

  ck.suite("S4", "full-flag law = classify with S_P empty, rank <= 5", [&](Outcome &o) {
    for (const auto &t : upTo(5))
    {
      const RootSystem &rs = ck.system(t);
      const FlagVariety fv(rs, ParabolicSubset{});
      for (int c = 2; c <= dimension(fv); ++c)
      {
        ++o.cases;
        if (full_flag_classify(rs, c) != classify(fv, c).verdict)
          o.fail(t.name() + " c=" + std::to_string(c));
      }
    }
  });

  ck.suite("S5", "w_{0,S\\r}(alpha_r^vee) = alpha_0^vee and beta_r = <rho, alpha_0^vee>, rank <= 8", [&](Outcome &o) {
    for (const auto &t : upTo8)
    {
      const RootSystem &rs = ck.system(t);
      for (int node : cominuscule_nodes(rs))
      {
        ++o.cases;
        if (!kannan_saha_check(rs, node))
          o.fail(t.name() + " node " + std::to_string(node));
        const FlagVariety fv(rs, ParabolicSubset::maximal(t.rank, node));
        if (beta_values(fv).at(node) != pairing(rho(rs), coroot_of(rs.highest_root(), rs)))
          o.fail(t.name() + " node " + std::to_string(node) + " beta");
      }
    }
  });

  out << "note: height law c < ht(alpha_0)+2 departs from classify at " << heightLawGaps.size()
      << " non-simply-laced (type:node:codim) points";
  if (!heightLawGaps.empty())
  {
    out << ":";
    for (const auto &g : heightLawGaps)
      out << " " << g;
  }
  out << "\n";
  out << (ck.failures() == 0 ? "self-check passed" : "self-check FAILED: " + std::to_string(ck.failures()) + " suite(s)") << "\n";
  return ck.failures();
}

} // namespace flagfano

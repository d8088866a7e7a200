#ifndef FLAGFANO_SPECIAL_HPP
#define FLAGFANO_SPECIAL_HPP

#include "flagfano/blowup.hpp"

#include <vector>

namespace flagfano
{

// Closed-form classification laws. None of these touch the Weyl group: they
// read heights and coroot coefficients off the closure output or use plain
// arithmetic, so agreement with classify() is a genuine two-path check.

/// Gr(r, n) = SL_n / P_r. FANO iff c <= n, WEAK_FANO_NOT_FANO iff c = n + 1.
/// Requires 1 <= r <= n - 1 and 2 <= c <= r(n - r).
Verdict grassmannian_classify(int r, int n, int codim);

/// Blow-up of Gr(r, n) at a point (c = r(n - r)): compares n + 1 with r(n - r).
Verdict grassmannian_point_classify(int r, int n);

/// Nodes whose coefficient in the highest root is 1, ascending.
std::vector<int> cominuscule_nodes(const RootSystem &rs);

/// dim G/P_r for a maximal parabolic, counted as the positive roots with a
/// nonzero alpha_r coefficient.
int maximal_parabolic_dimension(const RootSystem &rs, int node);

/// Height law for a cominuscule G/P_r: FANO iff c < ht(alpha_0) + 2,
/// WEAK_FANO_NOT_FANO iff c = ht(alpha_0) + 2.
///
/// Exact only for simply-laced types. beta_{alpha_r} equals
/// <rho, alpha_0^vee> = h^vee - 1, and that matches ht(alpha_0) = h - 1 only
/// when h = h^vee. For B_n the gap never shows within 2 <= c <= dim; for C_n
/// with n >= 3 it does (C_3: beta = 3, ht(alpha_0) = 5).
Verdict cominuscule_classify(const RootSystem &rs, int node, int codim);

/// Same law with the threshold <rho, alpha_0^vee> + 2 read from the coroot
/// of the highest root. Agrees with cominuscule_classify on simply-laced types.
Verdict cominuscule_coroot_classify(const RootSystem &rs, int node, int codim);

/// G/B: FANO iff c = 2, WEAK_FANO_NOT_FANO iff c = 3. Requires 2 <= c <= |R+|.
Verdict full_flag_classify(const RootSystem &rs, int codim);

/// w_{0, S \ {r}}(alpha_r^vee) == alpha_0^vee for a cominuscule node r.
bool kannan_saha_check(const RootSystem &rs, int node);

} // namespace flagfano

#endif

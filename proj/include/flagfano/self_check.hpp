#ifndef FLAGFANO_SELF_CHECK_HPP
#define FLAGFANO_SELF_CHECK_HPP

#include "flagfano/root_system.hpp"

#include <functional>
#include <ostream>

namespace flagfano
{

using RootSystemProvider = std::function<RootSystem(const TypeSpec &)>;

/// Runs the invariant suites at desk scale and prints one line per suite.
/// Returns the number of failed suites. Output is deterministic.
int run_self_check(std::ostream &out, const RootSystemProvider &provider = build_root_system);

} // namespace flagfano

#endif

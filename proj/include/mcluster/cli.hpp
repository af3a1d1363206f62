#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcluster {

// exit codes: 0 ok, 1 verification failure, 2 invalid/oversized input,
// 3 domain error (e.g. cone of a zero morphism)
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace mcluster

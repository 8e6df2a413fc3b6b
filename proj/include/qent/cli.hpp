#pragma once

namespace qent {

// Full command-line surface; returns the process exit code (0 ok, 2 usage,
// 3 parse, 4 contract, 5 numerical).
int run_cli(int argc, const char* const* argv);

}  // namespace qent

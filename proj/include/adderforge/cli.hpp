#pragma once

namespace adderforge {

/// Command-line entry point (build / simulate / analyze / verify / compare /
/// export). Exit codes: 0 success, 1 verification mismatch, 2 usage error,
/// 3 I/O or validation error.
int cli_main(int argc, const char* const* argv);

}  // namespace adderforge

#ifndef UMC_CLI_HPP
#define UMC_CLI_HPP

namespace umc {

// Entry point behind the `umc` binary; exposed so tests can drive the
// commands in-process. Exit codes: 0 ok, 1 I/O or parse failure,
// 2 bad arguments or validation failure, 3 corrupt data.
int cli_main(int argc, const char* const* argv);

}  // namespace umc

#endif

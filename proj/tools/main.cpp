#include "umc/cli.hpp"

int main(int argc, char** argv) { return umc::cli_main(argc, argv); }

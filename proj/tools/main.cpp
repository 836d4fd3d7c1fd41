#include "homalg/cli.hpp"

int main(int argc, char** argv) { return homalg::cli_main(argc, argv); }

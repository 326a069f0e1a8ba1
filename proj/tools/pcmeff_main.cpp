#include "pcmeff/cli.hpp"

int main(int argc, char** argv) { return pcmeff::cli_main(argc, argv); }

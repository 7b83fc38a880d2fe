#include "seeley/cli.hpp"

int main(int argc, char** argv) { return seeley::cli_main(argc, argv); }

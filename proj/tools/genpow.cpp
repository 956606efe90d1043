#include "genpow/cli.hpp"

int main(int argc, char** argv) { return genpow::run_cli(argc, argv); }

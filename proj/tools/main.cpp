#include "sumlab/cli.hpp"

int main(int argc, char** argv) { return sumlab::run_cli(argc, argv); }

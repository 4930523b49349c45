#include "splitgraph/cli.hpp"

int main(int argc, char** argv) { return splitgraph::run_cli(argc, argv); }

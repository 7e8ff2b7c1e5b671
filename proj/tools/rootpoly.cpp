#include "rootpoly/cli.hpp"

int main(int argc, char** argv) { return rootpoly::run_cli(argc, argv); }

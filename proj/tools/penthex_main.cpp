#include "penthex/cli.hpp"

int main(int argc, char** argv) { return penthex::run_cli(argc, argv); }

#include "hybridcov/cli.hpp"

int main(int argc, char** argv) { return hybridcov::cli::main(argc, argv); }

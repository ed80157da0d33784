#include "phwit/cli.hpp"

int main(int argc, char** argv) { return phwit::cli::run(argc, argv); }

#include "bernstein/cli.hpp"

int main(int argc, char** argv) { return bernstein::cli::run(argc, argv); }

#include "robspan/cli.hpp"

int main(int argc, char** argv) { return robspan::cli::run(argc, argv); }

#include "cli.hpp"

int main(int argc, char** argv) { return normgap::cli::run(argc, argv); }

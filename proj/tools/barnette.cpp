#include "barnette/cli.hpp"

int main(int argc, char** argv) { return barnette::cli::run(argc, argv); }

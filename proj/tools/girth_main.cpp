#include "girth/cli.hpp"

int main(int argc, char** argv) { return girth::cli::run(argc, argv); }

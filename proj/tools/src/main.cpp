#include "cli.hpp"

int main(int argc, char** argv) { return disclab::cli::run(argc, argv); }

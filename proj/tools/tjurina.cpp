#include "cli.hpp"

int main(int argc, char** argv) { return tjurina::cli::run_cli(argc, argv, std::cout, std::cerr); }

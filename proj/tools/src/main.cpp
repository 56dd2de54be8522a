#include <iostream>

#include "chaoseed/cli/app.hpp"

int main(int argc, char** argv) { return chaoseed::cli::run(argc, argv, std::cout, std::cerr); }

#include "capsim/cli.hpp"

int main(int argc, char** argv) { return capsim::cli::run(argc, argv); }

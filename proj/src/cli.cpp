#include "capsim/cli.hpp"

namespace capsim::cli {

int run(int, char**) { return 0; }  // placeholder until the command wiring lands

}  // namespace capsim::cli

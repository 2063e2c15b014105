#include "algokit/cli.hpp"

int main(int argc, char** argv) { return algokit::cli::run(argc, argv); }

#include "antitrid/cli.hpp"

int main(int argc, char** argv) { return antitrid::cli::run(argc, argv); }

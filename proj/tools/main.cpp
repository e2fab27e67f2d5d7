#include "conesmooth/cli.hpp"

int main(int argc, char** argv) { return conesmooth::cli::main_entry(argc, argv); }

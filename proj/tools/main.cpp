#include "commands.hpp"

int main(int argc, char** argv) { return acq::cli::main_entry(argc, argv); }

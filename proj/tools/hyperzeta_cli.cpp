#include "hyperzeta/cli.hpp"

int main(int argc, char** argv) { return hyperzeta::cli::main_entry(argc, argv); }

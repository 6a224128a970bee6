#include "aicdfa/cli.hpp"

int main(int argc, char** argv) { return aicdfa::main_entry(argc, argv); }

#include "lagcoh/cli.hpp"

int main(int argc, char** argv) { return lagcoh::run_cli(argc, argv); }

#include "fillpair/cli.hpp"

int main(int argc, char** argv) { return fillpair::cliMain(argc, argv); }

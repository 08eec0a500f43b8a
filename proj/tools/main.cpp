#include "adderforge/cli.hpp"

int main(int argc, char** argv) { return adderforge::cli_main(argc, argv); }

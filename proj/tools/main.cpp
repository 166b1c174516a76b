#include "oqho/cli.hpp"

int main(int argc, char** argv) { return oqho::cli_main(argc, argv); }

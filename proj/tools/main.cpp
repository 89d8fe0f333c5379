#include "cyclesync/cli.hpp"

int main(int argc, char** argv) { return cyclesync::run_cli(argc, argv); }

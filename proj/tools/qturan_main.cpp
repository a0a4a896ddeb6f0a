#include "qturan/cli.hpp"

int main(int argc, char** argv) { return qturan::run_cli(argc, argv); }

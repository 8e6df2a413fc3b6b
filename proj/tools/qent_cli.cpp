#include "qent/cli.hpp"

int main(int argc, char** argv) { return qent::run_cli(argc, argv); }

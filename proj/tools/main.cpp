#include "cli.hpp"

int main(int argc, char** argv) { return xilab::tools::run(argc, argv); }

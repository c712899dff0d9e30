#include "roleproj/cli.hpp"

int main(int argc, char** argv) { return roleproj::cli::run(argc, argv); }

#include "read/harness.hpp"

int main(int argc, char** argv) { return readkit::run_cli(argc, argv); }

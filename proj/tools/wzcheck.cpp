#include "wzkit/shell/cli.hpp"

int main(int argc, char** argv) { return wzkit::shell::run_command(argc, argv); }

#include "isatype/cli.hpp"

int main(int argc, char** argv) { return isatype::run_cli(argc, argv); }

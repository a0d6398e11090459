#include "fdepth/cli.hpp"

int main(int argc, char** argv) { return fdepth::cli::run(argc, argv); }

#include "maxcurves/cli.hpp"

int main(int argc, char** argv) { return maxcurves::cli::run(argc, argv); }

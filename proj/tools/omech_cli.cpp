// omech_cli.cpp — entry point

#include "omech/cli.hpp"

int main(int argc, char** argv) {
    return omech::cli::run_cli(argc, argv);
}

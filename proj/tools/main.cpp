#include "holes3d/cli.hpp"

int main(int argc, char** argv) {
    return holes3d::run_cli(argc, argv);
}

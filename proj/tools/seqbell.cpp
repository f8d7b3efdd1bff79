#include "seqbell/cli.hpp"

int main(int argc, char** argv) {
    return seqbell::run_cli(argc, argv);
}

#include "smoothwords/cli.hpp"

int main(int argc, char** argv)
{
    return smoothwords::cli::main(argc, argv);
}

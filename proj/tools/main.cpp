#include "ramellin/cli.hpp"

int main(int argc, char** argv) { return ramellin::cli::run(argc, argv); }

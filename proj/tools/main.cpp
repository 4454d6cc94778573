#include "cli_app.hpp"

int main(int argc, char** argv) { return diracmf::run_cli(argc, argv); }

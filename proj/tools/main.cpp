#include "hgft/app.hpp"

int main(int argc, char** argv) { return hgft::app::run(argc, argv); }

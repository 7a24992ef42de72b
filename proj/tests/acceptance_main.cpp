#include <iostream>

#include "reebspec/acceptance.hpp"

int main() { return reebspec::acceptance::report(std::cout); }

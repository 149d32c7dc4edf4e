#include <iostream>

#include "subword/acceptance.hpp"

// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
int main() { return subword::run_acceptance(false, std::cout) ? 0 : 1; }

// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <iostream>

#include "jcsum/app/acceptance.hpp"

int main() { return jcsum::app::cmd_selftest({}, std::cout); }

#include <iostream>

#include "dualcore/selftest.hpp"

int main() {
    const int failures = dualcore::selftest::run_acceptance(std::cout);
    return failures == 0 ? 0 : 1;
}

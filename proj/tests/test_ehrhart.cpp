#include <doctest.h>

TEST_SUITE("ehrhart") {}

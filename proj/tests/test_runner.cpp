#include <doctest.h>

TEST_CASE("placeholder_runner") { CHECK(true); }

#include <doctest.h>

TEST_CASE("placeholder_jets") { CHECK(true); }

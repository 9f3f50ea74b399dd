#pragma once

#include "hs1/ffun.hpp"
#include "hs1/uenv.hpp"

#include <random>

namespace hs1 {

// Deterministic sampling of homogeneous test elements (fixed seeds recorded in
// reports).  Coefficients in {-2..2}\{0}; F elements homogeneous in parity and
// weight <= 5, per the verification conventions.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t uniform(std::uint64_t n) { return rng_() % n; } // n > 0
    int coefficient() {
        static const int vals[4] = {-2, -1, 1, 2};
        return vals[uniform(4)];
    }

    // Monomial in the primary F families with the given weight and parity.
    SuperMonomial f_monomial(int weight, bool odd, int tries = 200);

    // 1..3 term parity-homogeneous F element of homogeneous weight <= max_weight.
    FElement f_element(int max_weight = 5);
    FElement f_element_weighted(int weight, bool odd);

    LieWord lie_word(std::size_t length);

    // 1..3 term parity-homogeneous element of U(g^s_1), word length <= max_len.
    UEnvElement u_element(std::size_t max_len = 3);

private:
    std::mt19937_64 rng_;
};

} // namespace hs1

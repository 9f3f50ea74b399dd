#pragma once

#include "hs1/ffun.hpp"
#include "hs1/uenv.hpp"

namespace hs1 {

// Left action of U(g^s_1) on F(G^s_2): the 24 generator formulas of the action
// table, extended by (gh)|>a = g|>(h|>a) and the super Leibniz rule
// h|>(ab) = (-1)^{|a||h_(2)|} (h_(1)|>a)(h_(2)|>b).
FElement act_gen(Family lie, Family fam, int n);

// Single Lie generator acting on an arbitrary F element (Leibniz over a fixed
// left-associated factorization of each monomial).
FElement act_lie(Family lie, const FElement& x);

FElement act(const UEnvElement& h, const FElement& x);

// Bracket consistency [g,h]|>x = g|>(h|>x) - (-1)^{|g||h|} h|>(g|>x) for all 21
// generator pairs, diagonality of Y and Z against the gradings, counit
// compatibility, and the module-algebra law on seeded random products.
std::vector<Check> action_checks(int max_index, int samples, std::uint64_t seed);
Report verify_module_algebra(int max_index, int samples = 50, std::uint64_t seed = 42,
                             Exec exec = Exec::parallel);

} // namespace hs1

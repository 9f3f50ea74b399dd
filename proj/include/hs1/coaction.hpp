#pragma once

#include "hs1/action.hpp"

namespace hs1 {

// Right coaction of F(G^s_2) on U(g^s_1), nabla: U -> U (x) F.  Generators
// follow the displayed table; words peel the leftmost letter through
//   nabla(gh) = (-1)^{|h^(1)|(|g_(1)^(2)|+|g_(2)|)}
//                 g_(1)^(1) h^(1) (x) g_(1)^(2) (g_(2) |> h^(2)),
// with the U leg PBW-normalized after each step.
GradedTensor coact_gen(Family lie);

GradedTensor coact(const UEnvElement& h);
GradedTensor coact_mono(const SuperMonomial& m);

// The extension formula applied to a product of two composite elements (uses
// Delta_U and nabla recursively); coact(u_mul(g,h)) == coact_pair(g,h) is the
// well-definedness statement behind the compatibility condition on nabla.
GradedTensor coact_pair(const UEnvElement& g, const UEnvElement& h);

// The extension formula evaluated on an arbitrary split g|h of a word.  Split
// position 1 is the defining leftmost peel; other splits are consistency checks.
GradedTensor coact_split(const LieWord& word, std::size_t split);

// Comodule coassociativity, counit law, the comodule-coalgebra condition,
// bracket consistency of nabla, and split-position independence.
std::vector<Check> coaction_checks(int max_degree, int samples, std::uint64_t seed);
Report verify_comodule(int max_degree, int samples = 50, std::uint64_t seed = 42,
                       Exec exec = Exec::parallel);

} // namespace hs1

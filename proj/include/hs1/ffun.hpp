#pragma once

#include "hs1/report.hpp"
#include "hs1/tensor.hpp"

namespace hs1 {

// F(G^s_2) lives in the supercommutative ring of the core module, generated by
// a_n (n>=2), b_n (n>=1), c_n (n>=2), d_n (n>=1); degenerate indices collapse
// to constants (a_0=0, a_1=d_0=1, b_0=c_0=c_1=0).
using FElement = SuperPoly;

// Hard bound for table construction; the displayed formulas are closed-form in
// n, the bound only guards runaway recursions.
inline constexpr int kMaxGeneratorIndex = 64;

// Generator as a ring element with degenerate indices resolved.
FElement fgen(Family fam, int n);

// Sum over ordered compositions n = l_1 + ... + l_k of a_{l_1}...a_{l_k}.
FElement composition_sum(int n, int k);

// The four closed-form coproducts on generator families; factor order inside
// each term follows the displayed formulas, so recorded signs match them.
GradedTensor coproduct_generator(Family fam, int n);

// Superalgebra-morphism extension of the generator coproducts.
GradedTensor f_coproduct(const FElement& x);
GradedTensor f_coproduct_mono(const SuperMonomial& m);

Rational f_counit(const FElement& x);

// Antipode per generator, solved from m(S (x) id)Delta(gen) = 0 by index
// recursion (within an index: a and c first, then b and d), memoized, and
// extended anti-multiplicatively with the super sign.
class AntipodeTable {
public:
    const FElement& at(Family fam, int n);
    void precompute(int max_index);

private:
    std::map<std::pair<Family, int>, FElement> table_;
};

AntipodeTable& antipode_table();

FElement f_antipode(const FElement& x);

// Coassociativity, counit laws, both antipode axioms, the antipode
// anti-coalgebra rule, and grading homogeneity of Delta.
std::vector<Check> f_hopf_checks(int max_index, int samples, std::uint64_t seed);
Report verify_f_hopf(int max_index, int samples, std::uint64_t seed,
                     Exec exec = Exec::parallel);

} // namespace hs1

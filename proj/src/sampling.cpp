#include "hs1/sampling.hpp"

namespace hs1 {

namespace {
constexpr Family kLie[6] = {Family::X, Family::Y, Family::Z,
                            Family::U, Family::V, Family::W};
}

SuperMonomial Sampler::f_monomial(int weight, bool odd, int tries) {
    // random walk over generators until the target weight and parity land
    for (int attempt = 0; attempt < tries; ++attempt) {
        std::vector<std::pair<GeneratorId, int>> factors;
        int w = 0;
        bool par = false;
        int guard = 0;
        while ((w != weight || par != odd) && guard++ < 24) {
            static const Family fams[4] = {Family::a, Family::b, Family::c, Family::d};
            Family f = fams[uniform(4)];
            int min_idx = (f == Family::a || f == Family::c) ? 2 : 1;
            int idx = min_idx + static_cast<int>(uniform(3));
            GeneratorId g{f, idx};
            if (w + g.weight() > weight) continue;
            factors.push_back({g, 1});
            w += g.weight();
            par ^= g.odd();
        }
        if (w != weight || par != odd) continue;
        auto n = normalize_monomial(factors);
        if (!n) continue; // odd square
        return n->second; // sign irrelevant, coefficient sampled separately
    }
    // weight-0 fallback
    if (weight == 0 && !odd) return one_monomial();
    throw std::runtime_error("could not sample monomial of weight " + std::to_string(weight));
}

FElement Sampler::f_element(int max_weight) {
    int w = static_cast<int>(uniform(static_cast<std::uint64_t>(max_weight) + 1));
    bool odd = uniform(2) == 1;
    return f_element_weighted(w, odd);
}

FElement Sampler::f_element_weighted(int weight, bool odd) {
    FElement r;
    std::size_t terms = 1 + uniform(3);
    for (std::size_t i = 0; i < terms; ++i)
        r.add_term(f_monomial(weight, odd), Rational(coefficient()));
    if (r.is_zero()) r.add_term(f_monomial(weight, odd), Rational(1));
    return r;
}

LieWord Sampler::lie_word(std::size_t length) {
    LieWord w(length);
    for (auto& f : w) f = kLie[uniform(6)];
    return w;
}

UEnvElement Sampler::u_element(std::size_t max_len) {
    std::size_t len = 1 + uniform(max_len);
    bool odd = uniform(2) == 1;
    UEnvElement r;
    std::size_t terms = 1 + uniform(2);
    for (std::size_t i = 0; i < terms; ++i) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            UEnvElement cand = pbw_normalize(lie_word(len));
            if (cand.is_zero()) continue;
            if (!cand.p.parity_homogeneous()) continue; // PBW preserves parity; guard anyway
            if (cand.p.parity() != odd) continue;
            r += Rational(coefficient()) * cand;
            break;
        }
    }
    if (r.is_zero()) r = UEnvElement::gen(odd ? Family::U : Family::Y);
    return r;
}

} // namespace hs1

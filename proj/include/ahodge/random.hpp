#pragma once

// Seeded random forms for identity checks.

#include "ahodge/model.hpp"

#include <random>

namespace ahodge {

struct RandomFormOptions {
    int mode_radius = 1;   // |kappa_j| <= mode_radius
    int max_terms = 4;     // per generator
    int num_range = 5;     // numerators in [-num_range, num_range]
    int den_range = 3;     // denominators in [1, den_range]
};

inline Scalar random_scalar(std::mt19937_64& rng, const RandomFormOptions& o = {}) {
    std::uniform_int_distribution<int> num(-o.num_range, o.num_range), den(1, o.den_range);
    int a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    return {detail::q(a, b), detail::q(c, d)};
}

inline ModeIndex random_mode(std::mt19937_64& rng, int dims, int radius) {
    std::uniform_int_distribution<int> comp(-radius, radius);
    ModeIndex k(dims);
    for (int j = 0; j < dims; ++j) k[j] = comp(rng);
    return k;
}

inline TrigPoly random_trigpoly(std::mt19937_64& rng, int dims, const RandomFormOptions& o = {}) {
    std::uniform_int_distribution<int> count(1, o.max_terms);
    TrigPoly f;
    int t = count(rng);
    for (int i = 0; i < t; ++i) f.add_term(random_mode(rng, dims, o.mode_radius), random_scalar(rng, o));
    return f;
}

/// Random form supported on the given generators; each generator is kept with probability 3/4.
inline Form random_form_on(std::mt19937_64& rng, const std::vector<BasisIndex>& gens, int dims, const RandomFormOptions& o = {}) {
    std::bernoulli_distribution keep(0.75);
    Form a;
    for (const auto& b : gens)
        if (keep(rng)) a.add(b, random_trigpoly(rng, dims, o));
    return a;
}

inline Form random_form(std::mt19937_64& rng, const Model& m, int p, int q, const RandomFormOptions& o = {}) {
    return random_form_on(rng, basis_of(m.n(), p, q), m.dims(), o);
}

/// Random form of mixed bidegree over the whole exterior algebra.
inline Form random_mixed_form(std::mt19937_64& rng, const Model& m, const RandomFormOptions& o = {}) {
    return random_form_on(rng, full_basis(m.n()), m.dims(), o);
}

}  // namespace ahodge

#pragma once

#include <cstdint>
#include <vector>

#include "brieskorn/graded_algebra.hpp"

namespace brieskorn::presentations {

// Z₂[a, u]/(a²), |a| = −n, |u| = n − 1: mod-2 loop homology of S^n with
// the degree shift that makes the Chas–Sullivan product degree zero.
GradedPresentation loop_homology_sphere(std::int64_t n);

// Z₂[a, u, u⁻¹]/(a²), |a| = −n, |u| = n − 1.
GradedPresentation cotangent_sphere_ring(std::int64_t n);

// Symplectic homology of the A_k Milnor fibre, k even:
// Z₂[s_1..s_k, t_1, t_0, t_{-2}]/(s_i s_j, s_i t_j, t_1², t_0^k),
// |s_i| = −2, |t_1| = −1, |t_0| = 0, |t_{-2}| = 2.
GradedPresentation ak_milnor_fibre_even(std::int64_t k);

// k odd, with α = β = 1 when 4 | k + 1 and 0 otherwise. The relations are
// taken exactly as published, including u_{-1}² = β·t_0^{n−1} with n = 2;
// that one is inhomogeneous for β = 1, so construction throws
// ValidationError in that case.
GradedPresentation ak_milnor_fibre_odd(std::int64_t k);

// Trivial extension Z₂[s, s⁻¹] ⋉ ⊕_i Z₂[s, s⁻¹]·e_i with |s| = mu and
// |e_i| = degrees[i]; its Hilbert function is that of the free module on
// {0} ∪ degrees.
GradedPresentation free_laurent_module(const std::vector<std::int64_t>& degrees, std::int64_t mu);

}  // namespace brieskorn::presentations

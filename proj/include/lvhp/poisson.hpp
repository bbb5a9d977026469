#pragma once

#include "lvhp/scalar_field.hpp"
#include "lvhp/types.hpp"

// Poisson brackets generated by a scalar field on R^3:
//   {f, g} = grad(gen) . (grad f x grad g)

namespace lvhp {

/// Antisymmetric tensor with entries Pi_ij = sum_k eps_ijk d_k gen.
Mat3 tensor_from_generator(const ScalarField& gen, const State& p);

double bracket(const ScalarField& gen, const ScalarField& f, const ScalarField& g, const State& p);

/// Pi_gen(p) * grad ham(p).
Vec3 ham_vector_field(const ScalarField& gen, const ScalarField& ham, const State& p);

/// Max over coordinate triples (i,j,k) of the cyclic sum
///   sum_l Pi^il d_l Pi^jk + Pi^jl d_l Pi^ki + Pi^kl d_l Pi^ij
/// using closed-form tensor derivatives (the generator's Hessian).
double jacobiator(const ScalarField& gen, const State& p);

/// Pi_gen(p) * grad gen(p); vanishes identically for a generated bracket.
Vec3 casimir_residual(const ScalarField& gen, const State& p);

}  // namespace lvhp

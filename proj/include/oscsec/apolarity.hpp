#ifndef OSCSEC_APOLARITY_HPP
#define OSCSEC_APOLARITY_HPP

#include <cstddef>
#include <span>

#include "oscsec/field.hpp"
#include "oscsec/form.hpp"
#include "oscsec/matrix.hpp"
#include "oscsec/tangent.hpp"

namespace oscsec {

// The pairing on R_d is the plain dot product of coefficient vectors in the
// monomial basis, with no multinomial weights. Perps therefore coincide with
// right kernels, and monomial spans have monomial perps.

/// phi(f, g) = sum_I f_I g_I. Throws std::invalid_argument unless f and g
/// share (n, d, p).
FieldElement pairing(const Form& f, const Form& g);

/// W^perp inside R_d, stored with its ambient shape.
struct PerpSpace {
    int n;
    int d;
    BasisMatrix basis;
};

/// W^perp for the row space of `w`, whose rows live in R_d.
PerpSpace perp(const BasisMatrix& w, int n, int d);

/// Span of the degree-d monomials x^I with i_0 <= max_x0_exponent, i.e.
/// (x_1..x_n)^{d - max_x0_exponent} in degree d. Empty when the bound is
/// negative.
BasisMatrix monomials_with_bounded_x0(int n, int d, int max_x0_exponent, const PrimeField& field);

/// (x_0^{d-t} R_t)^perp == span{x^I : i_0 <= d-t-1}, both sides built
/// explicitly and compared as subspaces.
bool power_perp_identity(int n, int d, int t, const PrimeField& field = PrimeField{});

/// With L = x_0 and W = tangent_cone(x_0, F, k, d), checks the inclusions
/// (p^{k+2})_d <= W^perp <= (p^{k+1})_d, p = (x_1..x_n). Needs d >= k+2.
bool sandwich_check(int k, int n, int d, const Form& osculating);

/// With L = x_0, checks that every product of a degree d-k-2 monomial with
/// a basis vector of W_{k+2}^perp pairs to zero against all of W_d. Needs
/// d >= k+2.
bool degree_stability_check(int k, int n, int d, const Form& osculating);

/// dim of the intersection of the cones' perps; equals C(n+d,n) minus the
/// rank of the stacked cones.
std::size_t dual_codim(std::span<const TangentCone> cones);

}  // namespace oscsec

#endif  // OSCSEC_APOLARITY_HPP

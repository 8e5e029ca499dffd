#ifndef OSCSEC_FORM_HPP
#define OSCSEC_FORM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "oscsec/field.hpp"
#include "oscsec/monomial.hpp"

namespace oscsec {

/// A homogeneous polynomial of fixed degree in x_0..x_n over GF(p), stored
/// densely in canonical monomial order.
class Form {
   public:
    /// The zero form of the given degree.
    Form(int n, int degree, PrimeField field);
    /// Coefficients must have length C(n+degree, n); they are reduced mod p.
    Form(int n, int degree, PrimeField field, std::vector<Residue> coefficients);

    static Form constant(int n, Residue value, PrimeField field);
    static Form monomial(const ExponentVector& m, PrimeField field, Residue coefficient = 1);
    /// c_0 x_0 + ... + c_n x_n.
    static Form linear(std::span<const Residue> coefficients, PrimeField field);
    /// The coordinate x_i.
    static Form variable(int n, int i, PrimeField field);

    int n() const noexcept { return n_; }
    int degree() const noexcept { return degree_; }
    const PrimeField& field() const noexcept { return field_; }
    std::span<const Residue> coefficients() const noexcept { return coefficients_; }
    Residue coefficient(const ExponentVector& m) const;
    bool is_zero() const noexcept;

    friend bool operator==(const Form&, const Form&) = default;

   private:
    int n_;
    int degree_;
    PrimeField field_;
    std::vector<Residue> coefficients_;
};

Form operator+(const Form& f, const Form& g);
Form operator-(const Form& f, const Form& g);
Form scale(const Form& f, Residue c);

/// Exact product in R_{a+b}. Throws std::invalid_argument on mismatched n
/// or modulus.
Form multiply(const Form& f, const Form& g);

/// Product with a single monomial; a coefficient shift, no arithmetic.
Form multiply_monomial(const Form& f, const ExponentVector& m);

/// L^e for a linear form L by multinomial expansion.
Form linear_power(const Form& linear, int exponent);

/// Iterated partial derivative d^alpha f, with alpha given as an exponent
/// vector over the same n+1 variables.
Form partial_derivative(const Form& f, const ExponentVector& direction);

/// Value of f at a point with n+1 coordinates.
Residue evaluate(const Form& f, std::span<const Residue> point);

/// Coefficients i.i.d. uniform over GF(p), a pure function of
/// (n, degree, seed, p).
Form random_form(int n, int degree, std::uint64_t seed, PrimeField field);

}  // namespace oscsec

#endif  // OSCSEC_FORM_HPP

#include "oscsec/form.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "oscsec/seed.hpp"

namespace oscsec {

namespace {

void require_same_ring(const Form& f, const Form& g, const char* op) {
    if (f.n() != g.n()) throw std::invalid_argument(std::string(op) + ": forms in different numbers of variables");
    if (f.field() != g.field()) throw std::invalid_argument(std::string(op) + ": forms over different primes");
}

// Factorials 0!..m! mod p; p > m keeps every entry invertible.
std::vector<Residue> factorials(int m, const PrimeField& field) {
    std::vector<Residue> fact(static_cast<std::size_t>(m) + 1, 1);
    for (int i = 1; i <= m; ++i) fact[static_cast<std::size_t>(i)] = field.mul(fact[static_cast<std::size_t>(i) - 1], field.reduce(static_cast<std::uint64_t>(i)));
    return fact;
}

}  // namespace

Form::Form(int n, int degree, PrimeField field) : n_(n), degree_(degree), field_(field) {
    if (n < 1) throw std::invalid_argument("form needs n >= 1");
    if (degree < 0) throw std::invalid_argument("form needs a non-negative degree");
    coefficients_.assign(forms_dimension(n, degree), 0);
}

Form::Form(int n, int degree, PrimeField field, std::vector<Residue> coefficients)
    : n_(n), degree_(degree), field_(field), coefficients_(std::move(coefficients)) {
    if (n < 1) throw std::invalid_argument("form needs n >= 1");
    if (degree < 0) throw std::invalid_argument("form needs a non-negative degree");
    if (coefficients_.size() != forms_dimension(n, degree)) {
        throw std::invalid_argument("coefficient count " + std::to_string(coefficients_.size()) +
                                    " does not match C(n+d, n) = " + std::to_string(forms_dimension(n, degree)));
    }
    for (Residue& c : coefficients_) c = field_.reduce(c);
}

Form Form::constant(int n, Residue value, PrimeField field) {
    return Form(n, 0, field, {value});
}

Form Form::monomial(const ExponentVector& m, PrimeField field, Residue coefficient) {
    Form f(m.n(), m.degree(), field);
    f.coefficients_[monomial_rank(m)] = field.reduce(coefficient);
    return f;
}

Form Form::linear(std::span<const Residue> coefficients, PrimeField field) {
    if (coefficients.size() < 2) throw std::invalid_argument("linear form needs at least two variables");
    // Degree-1 canonical order is x_0, x_1, ..., x_n.
    return Form(static_cast<int>(coefficients.size()) - 1, 1, field,
                std::vector<Residue>(coefficients.begin(), coefficients.end()));
}

Form Form::variable(int n, int i, PrimeField field) {
    if (i < 0 || i > n) throw std::out_of_range("variable index out of range");
    std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
    exps[static_cast<std::size_t>(i)] = 1;
    return monomial(ExponentVector(std::move(exps)), field);
}

Residue Form::coefficient(const ExponentVector& m) const {
    if (m.n() != n_ || m.degree() != degree_) throw std::invalid_argument("monomial outside this graded piece");
    return coefficients_[monomial_rank(m)];
}

bool Form::is_zero() const noexcept {
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](Residue c) { return c == 0; });
}

Form operator+(const Form& f, const Form& g) {
    require_same_ring(f, g, "add");
    if (f.degree() != g.degree()) throw std::invalid_argument("add: forms of different degrees");
    std::vector<Residue> out(f.coefficients().begin(), f.coefficients().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.field().add(out[i], g.coefficients()[i]);
    return Form(f.n(), f.degree(), f.field(), std::move(out));
}

Form operator-(const Form& f, const Form& g) {
    require_same_ring(f, g, "subtract");
    if (f.degree() != g.degree()) throw std::invalid_argument("subtract: forms of different degrees");
    std::vector<Residue> out(f.coefficients().begin(), f.coefficients().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.field().sub(out[i], g.coefficients()[i]);
    return Form(f.n(), f.degree(), f.field(), std::move(out));
}

Form scale(const Form& f, Residue c) {
    std::vector<Residue> out(f.coefficients().begin(), f.coefficients().end());
    const Residue cr = f.field().reduce(c);
    for (Residue& x : out) x = f.field().mul(x, cr);
    return Form(f.n(), f.degree(), f.field(), std::move(out));
}

Form multiply(const Form& f, const Form& g) {
    require_same_ring(f, g, "multiply");
    const PrimeField& field = f.field();
    const int n = f.n();
    const auto f_basis = monomial_basis(n, f.degree());
    const auto g_basis = monomial_basis(n, g.degree());
    std::vector<Residue> out(forms_dimension(n, f.degree() + g.degree()), 0);
    std::vector<int> sum(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < f_basis.size(); ++i) {
        const Residue a = f.coefficients()[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < g_basis.size(); ++j) {
            const Residue b = g.coefficients()[j];
            if (b == 0) continue;
            for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = f_basis[i][v] + g_basis[j][v];
            Residue& slot = out[monomial_rank(sum)];
            slot = field.fma(slot, a, b);
        }
    }
    return Form(n, f.degree() + g.degree(), field, std::move(out));
}

Form multiply_monomial(const Form& f, const ExponentVector& m) {
    if (m.n() != f.n()) throw std::invalid_argument("multiply_monomial: monomial in a different ring");
    const auto basis = monomial_basis(f.n(), f.degree());
    std::vector<Residue> out(forms_dimension(f.n(), f.degree() + m.degree()), 0);
    std::vector<int> sum(static_cast<std::size_t>(f.n()) + 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (f.coefficients()[i] == 0) continue;
        for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = basis[i][v] + m[v];
        out[monomial_rank(sum)] = f.coefficients()[i];
    }
    return Form(f.n(), f.degree() + m.degree(), f.field(), std::move(out));
}

Form linear_power(const Form& linear, int exponent) {
    if (linear.degree() != 1) throw std::invalid_argument("linear_power needs a form of degree 1");
    if (exponent < 0) throw std::invalid_argument("linear_power needs a non-negative exponent");
    const PrimeField& field = linear.field();
    if (static_cast<std::uint64_t>(exponent) >= field.modulus()) {
        throw std::invalid_argument("linear_power needs p > exponent");
    }
    const int n = linear.n();
    const auto fact = factorials(exponent, field);
    const auto basis = monomial_basis(n, exponent);
    std::vector<Residue> out(basis.size());
    const auto l = linear.coefficients();
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        // e! / prod(i_j!) * prod(l_j^{i_j})
        Residue term = fact[static_cast<std::size_t>(exponent)];
        for (int v = 0; v <= n; ++v) {
            const int e = basis[idx][static_cast<std::size_t>(v)];
            term = field.mul(term, field.inv(fact[static_cast<std::size_t>(e)]));
            term = field.mul(term, field.pow(l[static_cast<std::size_t>(v)], static_cast<std::uint64_t>(e)));
        }
        out[idx] = term;
    }
    return Form(n, exponent, field, std::move(out));
}

Form partial_derivative(const Form& f, const ExponentVector& direction) {
    if (direction.n() != f.n()) throw std::invalid_argument("derivative direction has the wrong number of variables");
    if (direction.degree() > f.degree()) {
        throw std::invalid_argument("derivative order " + std::to_string(direction.degree()) +
                                    " exceeds degree " + std::to_string(f.degree()));
    }
    const PrimeField& field = f.field();
    if (static_cast<std::uint64_t>(f.degree()) >= field.modulus()) {
        throw std::invalid_argument("partial_derivative needs p > degree");
    }
    const int n = f.n();
    const int out_degree = f.degree() - direction.degree();
    const auto basis = monomial_basis(n, f.degree());
    std::vector<Residue> out(forms_dimension(n, out_degree), 0);
    std::vector<int> lowered(static_cast<std::size_t>(n) + 1);
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        Residue c = f.coefficients()[idx];
        if (c == 0) continue;
        bool survives = true;
        for (std::size_t v = 0; v < lowered.size() && survives; ++v) {
            const int e = basis[idx][v];
            const int a = direction[v];
            if (e < a) {
                survives = false;
                break;
            }
            // e (e-1) ... (e-a+1)
            for (int t = 0; t < a; ++t) c = field.mul(c, static_cast<Residue>(e - t));
            lowered[v] = e - a;
        }
        if (!survives) continue;
        Residue& slot = out[monomial_rank(lowered)];
        slot = field.add(slot, c);
    }
    return Form(n, out_degree, field, std::move(out));
}

Residue evaluate(const Form& f, std::span<const Residue> point) {
    if (point.size() != static_cast<std::size_t>(f.n()) + 1) throw std::invalid_argument("point has the wrong dimension");
    const PrimeField& field = f.field();
    const auto basis = monomial_basis(f.n(), f.degree());
    Residue total = 0;
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        if (f.coefficients()[idx] == 0) continue;
        Residue term = f.coefficients()[idx];
        for (std::size_t v = 0; v < point.size(); ++v) {
            term = field.mul(term, field.pow(point[v], static_cast<std::uint64_t>(basis[idx][v])));
        }
        total = field.add(total, term);
    }
    return total;
}

Form random_form(int n, int degree, std::uint64_t seed, PrimeField field) {
    std::mt19937_64 rng(seed);
    std::vector<Residue> coeffs(forms_dimension(n, degree));
    for (Residue& c : coeffs) c = uniform_residue(rng, field);
    return Form(n, degree, field, std::move(coeffs));
}

}  // namespace oscsec

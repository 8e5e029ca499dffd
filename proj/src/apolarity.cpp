#include "oscsec/apolarity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscsec/monomial.hpp"

namespace oscsec {

FieldElement pairing(const Form& f, const Form& g) {
    if (f.n() != g.n() || f.degree() != g.degree() || f.field() != g.field()) {
        throw std::invalid_argument("pairing needs forms of the same shape and prime");
    }
    const PrimeField& field = f.field();
    Residue acc = 0;
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
        acc = field.fma(acc, f.coefficients()[i], g.coefficients()[i]);
    }
    return FieldElement{acc, field.modulus()};
}

PerpSpace perp(const BasisMatrix& w, int n, int d) {
    if (w.cols() != forms_dimension(n, d)) {
        throw std::invalid_argument("perp: matrix width " + std::to_string(w.cols()) + " is not dim R_" +
                                    std::to_string(d));
    }
    return PerpSpace{n, d, kernel_basis(w)};
}

BasisMatrix monomials_with_bounded_x0(int n, int d, int max_x0_exponent, const PrimeField& field) {
    const auto basis = monomial_basis(n, d);
    BasisMatrix out(0, basis.size(), field);
    std::vector<Residue> row(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i][0] > max_x0_exponent) continue;
        std::fill(row.begin(), row.end(), 0);
        row[i] = 1;
        out.append_row(row);
    }
    return out;
}

bool power_perp_identity(int n, int d, int t, const PrimeField& field) {
    if (t < 0 || t > d) throw std::invalid_argument("power_perp_identity needs 0 <= t <= d");
    const Form x0 = Form::variable(n, 0, field);
    const BasisMatrix left = perp(osculating_space_basis(x0, t, d), n, d).basis;
    const BasisMatrix right = monomials_with_bounded_x0(n, d, d - t - 1, field);
    return same_row_space(left, right);
}

namespace {

void require_stability_range(int k, int d, const Form& osculating, const char* who) {
    if (k < 0 || d < k + 2) throw std::invalid_argument(std::string(who) + " needs d >= k+2");
    if (osculating.degree() != k) throw std::invalid_argument(std::string(who) + ": F must have degree k");
}

}  // namespace

bool sandwich_check(int k, int n, int d, const Form& osculating) {
    require_stability_range(k, d, osculating, "sandwich_check");
    if (osculating.n() != n) throw std::invalid_argument("sandwich_check: F has the wrong number of variables");
    const PrimeField& field = osculating.field();
    const TangentCone cone = tangent_cone(Form::variable(n, 0, field), osculating, k, d);
    const BasisMatrix w_perp = perp(cone.basis, n, d).basis;
    const BasisMatrix inner = monomials_with_bounded_x0(n, d, d - k - 2, field);
    const BasisMatrix outer = monomials_with_bounded_x0(n, d, d - k - 1, field);
    return contains(w_perp, inner) && contains(outer, w_perp);
}

bool degree_stability_check(int k, int n, int d, const Form& osculating) {
    require_stability_range(k, d, osculating, "degree_stability_check");
    if (osculating.n() != n) throw std::invalid_argument("degree_stability_check: F has the wrong number of variables");
    const PrimeField& field = osculating.field();
    const Form x0 = Form::variable(n, 0, field);
    const TangentCone low = tangent_cone(x0, osculating, k, k + 2);
    const TangentCone high = tangent_cone(x0, osculating, k, d);
    const BasisMatrix generators = perp(low.basis, n, k + 2).basis;

    std::vector<Form> high_rows;
    for (std::size_t r = 0; r < high.basis.rows(); ++r) {
        const auto row = high.basis.row(r);
        high_rows.emplace_back(n, d, field, std::vector<Residue>(row.begin(), row.end()));
    }
    for (std::size_t g = 0; g < generators.rows(); ++g) {
        const auto grow = generators.row(g);
        const Form gen(n, k + 2, field, std::vector<Residue>(grow.begin(), grow.end()));
        for (const ExponentVector& h : monomial_basis(n, d - k - 2)) {
            const Form product = multiply_monomial(gen, h);
            for (const Form& w : high_rows) {
                if (pairing(product, w).value != 0) return false;
            }
        }
    }
    return true;
}

std::size_t dual_codim(std::span<const TangentCone> cones) {
    if (cones.empty()) throw std::invalid_argument("dual_codim needs at least one cone");
    const int n = cones.front().linear.n();
    const int d = cones.front().d;
    std::vector<BasisMatrix> perps;
    perps.reserve(cones.size());
    for (const TangentCone& c : cones) {
        if (c.linear.n() != n || c.d != d || c.linear.field() != cones.front().linear.field()) {
            throw std::invalid_argument("dual_codim: cones in different ambient spaces");
        }
        perps.push_back(perp(c.basis, n, d).basis);
    }
    for (const BasisMatrix& p : perps) {
        if (p.rows() == 0) return 0;
    }
    return intersection_dim(perps);
}

}  // namespace oscsec

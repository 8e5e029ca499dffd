// Reference computations for the tests. Nothing here calls into the
// library: polynomials are sparse maps, derivatives come from finite
// differences along a line, and ranks from a separate elimination.
#ifndef OSCSEC_TESTS_ORACLES_HPP
#define OSCSEC_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Exponents = std::vector<int>;
using Poly = std::map<Exponents, u64>;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

inline u64 powmod(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

inline void add_term(Poly& f, const Exponents& e, u64 c, u64 p) {
    u64& slot = f[e];
    slot = (slot + c) % p;
    if (slot == 0) f.erase(e);
}

inline Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_term(out, e, mulmod(ca, cb, p), p);
        }
    }
    return out;
}

inline Poly poly_pow(const Poly& a, int e, int nvars, u64 p) {
    Poly out{{Exponents(static_cast<std::size_t>(nvars), 0), 1}};
    for (int i = 0; i < e; ++i) out = poly_mul(out, a, p);
    return out;
}

// All exponent vectors of total degree d in nvars variables, any order.
inline std::vector<Exponents> monomials(int nvars, int d) {
    std::vector<Exponents> out;
    Exponents e(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            e[static_cast<std::size_t>(var)] = left;
            out.push_back(e);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[static_cast<std::size_t>(var)] = a;
            self(self, var + 1, left - a);
        }
    };
    rec(rec, 0, d);
    return out;
}

inline std::size_t rank_mod(std::vector<std::vector<u64>> m, u64 p) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        const u64 inv = invmod(m[r][c], p);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const u64 factor = mulmod(m[i][c], inv, p);
            for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + p - mulmod(factor, m[r][j], p)) % p;
        }
        ++r;
    }
    return r;
}

// Rank of the Jacobian of (L_1..L_s, F_1..F_s) -> sum L_i^{d-k} F_i at a
// random point. Each column is the t-linear coefficient of the map along
// a coordinate direction, read off from values at t = 0..d by Lagrange
// interpolation. Returns the affine dimension of the image.
inline std::size_t jacobian_rank(int k, int n, int d, int s, u64 p, u64 seed) {
    const int nv = n + 1;
    std::mt19937_64 rng(seed);
    auto rnd = [&] { return rng() % p; };
    const auto lin_mons = monomials(nv, 1);
    const auto osc_mons = monomials(nv, k);
    const auto out_mons = monomials(nv, d);

    std::vector<std::vector<u64>> ls(static_cast<std::size_t>(s)), fs(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < lin_mons.size(); ++j) ls[static_cast<std::size_t>(i)].push_back(rnd());
        for (std::size_t j = 0; j < osc_mons.size(); ++j) fs[static_cast<std::size_t>(i)].push_back(rnd());
    }
    auto to_poly = [&](const std::vector<u64>& c, const std::vector<Exponents>& mons) {
        Poly f;
        for (std::size_t j = 0; j < c.size(); ++j) add_term(f, mons[j], c[j], p);
        return f;
    };
    // Value of one summand as a coefficient vector over out_mons.
    auto summand = [&](const std::vector<u64>& l, const std::vector<u64>& f) {
        const Poly value = poly_mul(poly_pow(to_poly(l, lin_mons), d - k, nv, p), to_poly(f, osc_mons), p);
        std::vector<u64> v(out_mons.size(), 0);
        for (std::size_t j = 0; j < out_mons.size(); ++j) {
            auto it = value.find(out_mons[j]);
            if (it != value.end()) v[j] = it->second;
        }
        return v;
    };
    // Coefficient of t in a polynomial of degree <= d given at t = 0..d.
    const int points = d + 1;
    std::vector<u64> weight(static_cast<std::size_t>(points));
    for (int a = 0; a < points; ++a) {
        // d/dt of the Lagrange basis polynomial l_a at t = 0.
        u64 denom = 1;
        for (int b = 0; b < points; ++b) {
            if (b != a) denom = mulmod(denom, (static_cast<u64>(a) + p - static_cast<u64>(b)) % p, p);
        }
        u64 deriv = 0;
        for (int skip = 0; skip < points; ++skip) {
            if (skip == a) continue;
            u64 term = 1;
            for (int b = 0; b < points; ++b) {
                if (b == a || b == skip) continue;
                term = mulmod(term, (p - static_cast<u64>(b)) % p, p);
            }
            deriv = (deriv + term) % p;
        }
        weight[static_cast<std::size_t>(a)] = mulmod(deriv, invmod(denom, p), p);
    }
    std::vector<std::vector<u64>> jac;
    for (int i = 0; i < s; ++i) {
        const auto& l = ls[static_cast<std::size_t>(i)];
        const auto& f = fs[static_cast<std::size_t>(i)];
        auto column = [&](bool in_l, std::size_t j) {
            std::vector<u64> col(out_mons.size(), 0);
            for (int t = 0; t < points; ++t) {
                auto l2 = l;
                auto f2 = f;
                if (in_l) {
                    l2[j] = (l2[j] + static_cast<u64>(t)) % p;
                } else {
                    f2[j] = (f2[j] + static_cast<u64>(t)) % p;
                }
                const auto v = summand(l2, f2);
                for (std::size_t r = 0; r < v.size(); ++r) col[r] = (col[r] + mulmod(weight[static_cast<std::size_t>(t)], v[r], p)) % p;
            }
            jac.push_back(std::move(col));
        };
        for (std::size_t j = 0; j < l.size(); ++j) column(true, j);
        for (std::size_t j = 0; j < f.size(); ++j) column(false, j);
    }
    return rank_mod(std::move(jac), p);
}

// h0 of fat points of the given multiplicities at the first coordinate
// points of P^n (at most n+1 of them, which is the generic position for
// that many points): degree-d monomials x^J with J_i <= d - m_i.
inline long coordinate_fat_points_h0(int n, int d, const std::vector<int>& mult) {
    long count = 0;
    for (const Exponents& j : monomials(n + 1, d)) {
        bool ok = true;
        for (std::size_t i = 0; i < mult.size(); ++i) ok = ok && j[i] <= d - mult[i];
        count += ok;
    }
    return count;
}

inline u64 binom_mod(int a, int b, u64 p) {
    if (b < 0 || b > a) return 0;
    u64 r = 1;
    for (int i = 1; i <= b; ++i) r = mulmod(mulmod(r, static_cast<u64>(a - b + i), p), invmod(static_cast<u64>(i), p), p);
    return r;
}

// Rank of the degree-d conditions imposed by fat points at random affine
// points, using Taylor coefficients of f(P + y) rather than derivatives.
inline std::size_t taylor_fat_points_rank(int n, int d, const std::vector<int>& mult, u64 p, u64 seed) {
    std::mt19937_64 rng(seed);
    const auto mons = monomials(n + 1, d);
    std::vector<std::vector<u64>> rows;
    for (int m : mult) {
        std::vector<u64> point(static_cast<std::size_t>(n) + 1, 1);
        for (int v = 0; v < n; ++v) point[static_cast<std::size_t>(v)] = rng() % p;
        for (int order = 0; order < m; ++order) {
            for (const Exponents& a : monomials(n, order)) {
                std::vector<u64> row;
                for (const Exponents& j : mons) {
                    u64 c = 1;
                    for (int v = 0; v < n && c; ++v) {
                        const auto vi = static_cast<std::size_t>(v);
                        c = mulmod(c, mulmod(binom_mod(j[vi], a[vi], p), powmod(point[vi], static_cast<u64>(j[vi] - a[vi]), p), p), p);
                    }
                    row.push_back(c);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rank_mod(std::move(rows), p);
}

}  // namespace oracle

#endif  // OSCSEC_TESTS_ORACLES_HPP

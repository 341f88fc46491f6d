#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/report.hpp"
#include "leibniz/tensor.hpp"

namespace leibniz {

inline std::vector<Scalar> basis_vector(Field f, int dim, int i) {
    std::vector<Scalar> v(dim, Scalar(f));
    v[i] = one(f);
    return v;
}

inline bool vec_is_zero(const std::vector<Scalar>& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

inline std::vector<Scalar> vec_add(std::vector<Scalar> a, const std::vector<Scalar>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline std::vector<Scalar> vec_sub(std::vector<Scalar> a, const std::vector<Scalar>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline std::vector<std::string> vec_strings(const std::vector<Scalar>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

/// A finite-dimensional Leibniz algebra by structure constants:
/// [e_i, e_j] = sum_k c[i][j][k] e_k.
class LeibnizAlgebra {
public:
    LeibnizAlgebra(Field f, int dim) : field_(f), dim_(dim), c_(f, {dim, dim, dim}) {
        if (dim < 1) throw InputError("algebra dimension must be at least 1");
    }

    Field field() const { return field_; }
    int dim() const { return dim_; }

    Scalar& c(int i, int j, int k) { return c_.at({i, j, k}); }
    const Scalar& c(int i, int j, int k) const { return c_.at({i, j, k}); }
    const Tensor& constants() const { return c_; }

    bool operator==(const LeibnizAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

    std::vector<Scalar> bracket(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
        std::vector<Scalar> out(dim_, Scalar(field_));
        for (int i = 0; i < dim_; ++i) {
            if (u[i].is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                if (v[j].is_zero()) continue;
                Scalar w = u[i] * v[j];
                for (int k = 0; k < dim_; ++k) out[k] += w * c(i, j, k);
            }
        }
        return out;
    }

    std::vector<Scalar> bracket_basis(int i, int j) const {
        std::vector<Scalar> out(dim_, Scalar(field_));
        for (int k = 0; k < dim_; ++k) out[k] = c(i, j, k);
        return out;
    }

    bool is_abelian() const { return c_.is_zero(); }

private:
    Field field_;
    int dim_;
    Tensor c_;
};

/// Leibniz identity residual [x,[y,z]] - [[x,y],z] - [y,[x,z]] on a basis triple.
inline std::vector<Scalar> leibniz_residual(const LeibnizAlgebra& g, int i, int j, int k) {
    auto a = g.bracket(basis_vector(g.field(), g.dim(), i), g.bracket_basis(j, k));
    auto b = g.bracket(g.bracket_basis(i, j), basis_vector(g.field(), g.dim(), k));
    auto c = g.bracket(basis_vector(g.field(), g.dim(), j), g.bracket_basis(i, k));
    return vec_sub(vec_sub(a, b), c);
}

inline CheckReport check_leibniz(const LeibnizAlgebra& g) {
    CheckReport report = CheckReport::pass("leibniz-identity");
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            for (int k = 0; k < g.dim(); ++k) {
                auto res = leibniz_residual(g, i, j, k);
                if (!vec_is_zero(res)) {
                    report.fail({"leibniz-identity", {i + 1, j + 1, k + 1}, vec_strings(res)});
                    return report;
                }
            }
    return report;
}

/// Left and right multiplication matrices: L_i is x -> [e_i, x], R_i is x -> [x, e_i].
inline std::pair<std::vector<Matrix>, std::vector<Matrix>> multiplication_operators(const LeibnizAlgebra& g) {
    std::vector<Matrix> left, right;
    for (int i = 0; i < g.dim(); ++i) {
        Matrix li(g.field(), g.dim(), g.dim()), ri(g.field(), g.dim(), g.dim());
        for (int j = 0; j < g.dim(); ++j)
            for (int k = 0; k < g.dim(); ++k) {
                li.at(k, j) = g.c(i, j, k);
                ri.at(k, j) = g.c(j, i, k);
            }
        left.push_back(std::move(li));
        right.push_back(std::move(ri));
    }
    return {left, right};
}

/// A representation: the action of each basis element of g on a carrier V,
/// as a pair of m x m matrix families.
struct Representation {
    LeibnizAlgebra algebra;
    int carrier_dim;
    std::vector<Matrix> rhoL;
    std::vector<Matrix> rhoR;

    Field field() const { return algebra.field(); }

    Matrix rho_l(const std::vector<Scalar>& x) const { return combine(rhoL, x); }
    Matrix rho_r(const std::vector<Scalar>& x) const { return combine(rhoR, x); }

private:
    Matrix combine(const std::vector<Matrix>& fam, const std::vector<Scalar>& x) const {
        Matrix m(field(), carrier_dim, carrier_dim);
        for (int i = 0; i < algebra.dim(); ++i)
            if (!x[i].is_zero()) m = m + fam[i].scaled(x[i]);
        return m;
    }
};

inline Representation regular_representation(const LeibnizAlgebra& g) {
    auto [left, right] = multiplication_operators(g);
    return {g, g.dim(), std::move(left), std::move(right)};
}

inline Representation zero_representation(const LeibnizAlgebra& g, int carrier_dim) {
    std::vector<Matrix> z(g.dim(), Matrix(g.field(), carrier_dim, carrier_dim));
    return {g, carrier_dim, z, z};
}

inline CheckReport check_representation(const Representation& rep) {
    const auto& g = rep.algebra;
    if (static_cast<int>(rep.rhoL.size()) != g.dim() || static_cast<int>(rep.rhoR.size()) != g.dim())
        throw ShapeMismatch("representation needs one matrix pair per basis element");
    for (const auto& m : rep.rhoL)
        if (m.rows() != rep.carrier_dim || m.cols() != rep.carrier_dim)
            throw ShapeMismatch("rhoL matrix size vs carrier dimension");
    for (const auto& m : rep.rhoR)
        if (m.rows() != rep.carrier_dim || m.cols() != rep.carrier_dim)
            throw ShapeMismatch("rhoR matrix size vs carrier dimension");

    CheckReport report = CheckReport::pass("representation-axioms");
    auto commutator = [](const Matrix& a, const Matrix& b) { return a * b - b * a; };
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j) {
            auto bij = g.bracket_basis(i, j);
            Matrix lhs1 = rep.rho_l(bij) - commutator(rep.rhoL[i], rep.rhoL[j]);
            if (!lhs1.is_zero()) {
                report.fail({"rep-axiom-1", {i + 1, j + 1}, {}});
                return report;
            }
            Matrix lhs2 = rep.rho_r(bij) - commutator(rep.rhoL[i], rep.rhoR[j]);
            if (!lhs2.is_zero()) {
                report.fail({"rep-axiom-2", {i + 1, j + 1}, {}});
                return report;
            }
            Matrix lhs3 = rep.rhoR[j] * rep.rhoL[i] + rep.rhoR[j] * rep.rhoR[i];
            if (!lhs3.is_zero()) {
                report.fail({"rep-axiom-3", {i + 1, j + 1}, {}});
                return report;
            }
        }
    return report;
}

/// The sign-twisted transpose pair (V*; (rhoL)*, -(rhoL)* - (rhoR)*), with
/// M* the pairing transpose <rho*(x) xi, v> = -<xi, rho(x) v>.
inline Representation dual_representation(const Representation& rep) {
    Representation dual{rep.algebra, rep.carrier_dim, {}, {}};
    for (int i = 0; i < rep.algebra.dim(); ++i) {
        Matrix lstar = -rep.rhoL[i].transpose();
        Matrix rstar = -rep.rhoR[i].transpose();
        dual.rhoL.push_back(lstar);
        dual.rhoR.push_back(-lstar - rstar);
    }
    return dual;
}

inline Representation dual_regular_representation(const LeibnizAlgebra& g) {
    return dual_representation(regular_representation(g));
}

/// Semidirect product g x| V: [x+u, y+v] = [x,y]_g + rhoL(x)v + rhoR(y)u,
/// with the g-basis first.
inline LeibnizAlgebra semidirect_product(const Representation& rep) {
    const auto& g = rep.algebra;
    int n = g.dim(), m = rep.carrier_dim;
    LeibnizAlgebra big(g.field(), n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) big.c(i, j, k) = g.c(i, j, k);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < m; ++b)
            for (int a = 0; a < m; ++a) {
                big.c(i, n + b, n + a) = rep.rhoL[i].at(a, b);   // [e_i, v_b]
                big.c(n + b, i, n + a) = rep.rhoR[i].at(a, b);   // [v_b, e_i]
            }
    return big;
}

/// A Leibniz algebra with a nondegenerate skew-symmetric invariant form,
/// stored as the matrix omega[i][j] = omega(e_i, e_j).
struct QuadraticStructure {
    LeibnizAlgebra algebra;
    Matrix omega;

    Scalar form(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
        Scalar acc(algebra.field());
        for (int i = 0; i < algebra.dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < algebra.dim(); ++j)
                if (!y[j].is_zero()) acc += x[i] * omega.at(i, j) * y[j];
        }
        return acc;
    }
};

/// Verifies skew-symmetry, nondegeneracy and the invariance condition
/// omega(x,[y,z]) = omega([x,z]+[z,x], y), plus the derived identity
/// omega(x,[y,z]) = -omega([y,x],z) as a consistency cross-check.
inline CheckReport check_quadratic(const QuadraticStructure& qs) {
    const auto& g = qs.algebra;
    CheckReport report = CheckReport::pass("quadratic-structure");
    if (qs.omega.rows() != g.dim() || qs.omega.cols() != g.dim())
        throw ShapeMismatch("form matrix vs algebra dimension");
    if (!(qs.omega + qs.omega.transpose()).is_zero()) {
        report.fail({"skew-symmetry", {}, {}});
        return report;
    }
    try {
        qs.omega.inverse();
    } catch (const SingularMatrix& e) {
        report.fail({"nondegeneracy", {}, {std::to_string(e.rank)}});
        return report;
    }
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            for (int k = 0; k < g.dim(); ++k) {
                auto ei = basis_vector(g.field(), g.dim(), i);
                auto ej = basis_vector(g.field(), g.dim(), j);
                auto ek = basis_vector(g.field(), g.dim(), k);
                Scalar lhs = qs.form(ei, g.bracket_basis(j, k));
                Scalar rhs = qs.form(vec_add(g.bracket_basis(i, k), g.bracket_basis(k, i)), ej);
                if (lhs != rhs) {
                    report.fail({"invariance", {i + 1, j + 1, k + 1}, {(lhs - rhs).str()}});
                    return report;
                }
                Scalar derived = -qs.form(g.bracket_basis(j, i), ek);
                if (lhs != derived) {
                    report.fail({"derived-invariance", {i + 1, j + 1, k + 1}, {(lhs - derived).str()}});
                    return report;
                }
            }
    return report;
}

/// Theta(e_i,e_j,e_k) = omega(e_i, [e_j,e_k]).
inline Tensor cartan_tensor(const QuadraticStructure& qs) {
    if (!check_quadratic(qs).holds) throw InvalidQuadratic("form fails the quadratic axioms");
    const auto& g = qs.algebra;
    Tensor theta(g.field(), {g.dim(), g.dim(), g.dim()});
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            for (int k = 0; k < g.dim(); ++k)
                theta.at({i, j, k}) = qs.form(basis_vector(g.field(), g.dim(), i), g.bracket_basis(j, k));
    return theta;
}

/// Coboundary of a trivial-coefficient 3-cochain, evaluated multilinearly on
/// basis quadruples.
inline Tensor coboundary_of_3cochain(const LeibnizAlgebra& g, const Tensor& theta) {
    int n = g.dim();
    if (theta.shape() != std::vector<int>{n, n, n}) throw ShapeMismatch("3-cochain shape vs algebra dimension");

    // Theta evaluated with one argument replaced by a bracket.
    auto eval = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                    const std::vector<Scalar>& c) {
        Scalar acc(g.field());
        for (int i = 0; i < n; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (b[j].is_zero()) continue;
                for (int k = 0; k < n; ++k)
                    if (!c[k].is_zero()) acc += a[i] * b[j] * c[k] * theta.at({i, j, k});
            }
        }
        return acc;
    };

    Tensor d(g.field(), {n, n, n, n});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w) {
                    auto ex = basis_vector(g.field(), n, x);
                    auto ey = basis_vector(g.field(), n, y);
                    auto ez = basis_vector(g.field(), n, z);
                    auto ew = basis_vector(g.field(), n, w);
                    Scalar v = -eval(g.bracket_basis(x, y), ez, ew)
                             - eval(ey, g.bracket_basis(x, z), ew)
                             - eval(ey, ez, g.bracket_basis(x, w))
                             + eval(ex, g.bracket_basis(y, z), ew)
                             + eval(ex, ez, g.bracket_basis(y, w))
                             - eval(ex, ey, g.bracket_basis(z, w));
                    d.at({x, y, z, w}) = v;
                }
    return d;
}

}  // namespace leibniz

#endif

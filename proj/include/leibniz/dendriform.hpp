#ifndef LEIBNIZ_DENDRIFORM_HPP
#define LEIBNIZ_DENDRIFORM_HPP

#include <utility>

#include "leibniz/yang_baxter.hpp"

namespace leibniz {

/// Two binary products by structure constants, same index convention as a
/// bracket: e_i < e_j = sum_k left[i][j][k] e_k, e_i > e_j = sum_k right[i][j][k] e_k.
struct DendriformAlgebra {
    Field field;
    int dim;
    Tensor left;   // the < product
    Tensor right;  // the > product

    DendriformAlgebra(Field f, int d)
        : field(f), dim(d), left(f, {d, d, d}), right(f, {d, d, d}) {
        if (d < 1) throw InputError("dendriform dimension must be at least 1");
    }

    std::vector<Scalar> prod(const Tensor& c, const std::vector<Scalar>& u,
                             const std::vector<Scalar>& v) const {
        std::vector<Scalar> out(dim, Scalar(field));
        for (int i = 0; i < dim; ++i) {
            if (u[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                if (v[j].is_zero()) continue;
                Scalar w = u[i] * v[j];
                for (int k = 0; k < dim; ++k) out[k] += w * c.at({i, j, k});
            }
        }
        return out;
    }
    std::vector<Scalar> lprod(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
        return prod(left, u, v);
    }
    std::vector<Scalar> rprod(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
        return prod(right, u, v);
    }
};

/// The three compatibility axioms between < and >, on all basis triples:
///   (x<y)<z = x<(y<z) - y<(x<z) - (x>y)<z
///   x<(y>z) = (x<y)>z + y>(x<z) + y>(x>z)
///   x>(y>z) = (x>y)>z + y<(x>z) - x>(y<z)
inline CheckReport check_dendriform(const DendriformAlgebra& a) {
    CheckReport report = CheckReport::pass("dendriform");
    int n = a.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                auto x = basis_vector(a.field, n, i);
                auto y = basis_vector(a.field, n, j);
                auto z = basis_vector(a.field, n, k);
                auto r1 = a.lprod(a.lprod(x, y), z);
                r1 = vec_sub(r1, a.lprod(x, a.lprod(y, z)));
                r1 = vec_add(r1, a.lprod(y, a.lprod(x, z)));
                r1 = vec_add(r1, a.lprod(a.rprod(x, y), z));
                if (!vec_is_zero(r1)) {
                    report.fail({"left-product-axiom", {i + 1, j + 1, k + 1}, vec_strings(r1)});
                    return report;
                }
                auto r2 = a.lprod(x, a.rprod(y, z));
                r2 = vec_sub(r2, a.rprod(a.lprod(x, y), z));
                r2 = vec_sub(r2, a.rprod(y, a.lprod(x, z)));
                r2 = vec_sub(r2, a.rprod(y, a.rprod(x, z)));
                if (!vec_is_zero(r2)) {
                    report.fail({"mixed-product-axiom", {i + 1, j + 1, k + 1}, vec_strings(r2)});
                    return report;
                }
                auto r3 = a.rprod(x, a.rprod(y, z));
                r3 = vec_sub(r3, a.rprod(a.rprod(x, y), z));
                r3 = vec_sub(r3, a.lprod(y, a.rprod(x, z)));
                r3 = vec_add(r3, a.rprod(x, a.lprod(y, z)));
                if (!vec_is_zero(r3)) {
                    report.fail({"right-product-axiom", {i + 1, j + 1, k + 1}, vec_strings(r3)});
                    return report;
                }
            }
    return report;
}

/// [x,y] = x<y + x>y.
inline LeibnizAlgebra subadjacent(const DendriformAlgebra& a) {
    if (!check_dendriform(a).holds) throw NotDendriform();
    LeibnizAlgebra g(a.field, a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) g.c(i, j, k) = a.left.at({i, j, k}) + a.right.at({i, j, k});
    return g;
}

/// (A; L_<, R_>) over the sub-adjacent algebra, with L_<(x)y = x<y and
/// R_>(x)y = y>x. The identity map is a relative Rota-Baxter operator for it.
inline Representation dendriform_rep(const DendriformAlgebra& a) {
    LeibnizAlgebra g = subadjacent(a);
    std::vector<Matrix> rhoL, rhoR;
    for (int i = 0; i < a.dim; ++i) {
        Matrix li(a.field, a.dim, a.dim), ri(a.field, a.dim, a.dim);
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                li.at(k, j) = a.left.at({i, j, k});
                ri.at(k, j) = a.right.at({j, i, k});
            }
        rhoL.push_back(std::move(li));
        rhoR.push_back(std::move(ri));
    }
    return {g, a.dim, std::move(rhoL), std::move(rhoR)};
}

/// u>v = rhoR(Kv)u, u<v = rhoL(Ku)v on the carrier of a verified operator.
inline DendriformAlgebra dendriform_from_rb(const Representation& rep, const Matrix& k) {
    if (!check_relative_rb({rep, k}).holds) throw NotARotaBaxterOperator();
    int m = rep.carrier_dim;
    DendriformAlgebra a(rep.field(), m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto u = basis_vector(rep.field(), m, i);
            auto v = basis_vector(rep.field(), m, j);
            auto r = rep.rho_r(k.apply(v)).apply(u);
            auto l = rep.rho_l(k.apply(u)).apply(v);
            for (int t = 0; t < m; ++t) {
                a.right.at({i, j, t}) = r[t];
                a.left.at({i, j, t}) = l[t];
            }
        }
    return a;
}

/// x>y = K(rhoR(y) Kinv x), x<y = K(rhoL(x) Kinv y) for invertible K; the
/// sub-adjacent algebra recovers the original bracket.
inline DendriformAlgebra compatible_from_invertible_rb(const Representation& rep, const Matrix& k) {
    Matrix kinv;
    try {
        kinv = k.inverse();
    } catch (const SingularMatrix&) {
        throw SingularK();
    }
    if (!check_relative_rb({rep, k}).holds) throw NotARotaBaxterOperator();
    int n = rep.algebra.dim();
    DendriformAlgebra a(rep.field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto x = basis_vector(rep.field(), n, i);
            auto y = basis_vector(rep.field(), n, j);
            auto r = k.apply(rep.rho_r(y).apply(kinv.apply(x)));
            auto l = k.apply(rep.rho_l(x).apply(kinv.apply(y)));
            for (int t = 0; t < n; ++t) {
                a.right.at({i, j, t}) = r[t];
                a.left.at({i, j, t}) = l[t];
            }
        }
    return a;
}

/// The structure on gl(V) + V: (A+u)<(B+v) = AB + Av, (A+u)>(B+v) = -BA.
/// Basis: matrix units E_11, E_12, ..., E_mm row by row, then the V basis.
inline DendriformAlgebra omni_lie(int m) {
    if (m < 1) throw InputError("carrier dimension must be at least 1");
    if (m > 3) throw SearchSpaceTooLarge("carrier dimension beyond the supported sweep size");
    int n = m * m + m;
    DendriformAlgebra alg(Field::rational(), n);
    auto unit = [m](int a, int b) { return a * m + b; };
    Scalar pos = one(Field::rational());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) {
                    if (b == c) alg.left.at({unit(a, b), unit(c, d), unit(a, d)}) += pos;   // E_ab E_cd
                    if (d == a) alg.right.at({unit(a, b), unit(c, d), unit(c, b)}) -= pos;  // -E_cd E_ab
                }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int i = 0; i < m; ++i)
                if (b == i) alg.left.at({unit(a, b), m * m + i, m * m + a}) += pos;  // E_ab v_i
    return alg;
}

/// Doubles a dendriform algebra through its canonical representation and
/// returns the tautological symmetric tensor sum_i (e*_i x e_i + e_i x e*_i)
/// on A + A*, a solution whose inverse pairing is <xi,y> + <eta,x>.
inline std::pair<LeibnizAlgebra, RMatrix> canonical_r(const DendriformAlgebra& a) {
    Representation rep = dendriform_rep(a);  // throws NotDendriform via subadjacent
    LeibnizAlgebra big = semidirect_product(dual_representation(rep));
    Tensor r(a.field, {2 * a.dim, 2 * a.dim});
    for (int i = 0; i < a.dim; ++i) {
        r.at({a.dim + i, i}) = one(a.field);
        r.at({i, a.dim + i}) = one(a.field);
    }
    return {big, RMatrix{big, r}};
}

}  // namespace leibniz

#endif

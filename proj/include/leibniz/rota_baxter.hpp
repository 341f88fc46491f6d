#ifndef LEIBNIZ_ROTA_BAXTER_HPP
#define LEIBNIZ_ROTA_BAXTER_HPP

#include <thread>
#include <utility>
#include <vector>

#include "leibniz/cochain.hpp"

namespace leibniz {

/// A candidate operator K : V -> g against a representation of g on V.
struct OperatorCandidate {
    Representation rep;
    Matrix K;  // rows = dim g, cols = dim V
};

/// [R(x),R(y)] = R([R(x),y] + [x,R(y)]) on all basis pairs.
inline CheckReport check_rota_baxter(const LeibnizAlgebra& g, const Matrix& R) {
    if (R.rows() != g.dim() || R.cols() != g.dim()) throw ShapeMismatch("operator must be square of the algebra dimension");
    CheckReport report = CheckReport::pass("rota-baxter");
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j) {
            auto rx = R.apply(basis_vector(g.field(), g.dim(), i));
            auto ry = R.apply(basis_vector(g.field(), g.dim(), j));
            auto lhs = g.bracket(rx, ry);
            auto inner = vec_add(g.bracket(rx, basis_vector(g.field(), g.dim(), j)),
                                 g.bracket(basis_vector(g.field(), g.dim(), i), ry));
            auto res = vec_sub(lhs, R.apply(inner));
            if (!vec_is_zero(res)) {
                report.fail({"rota-baxter", {i + 1, j + 1}, vec_strings(res)});
                return report;
            }
        }
    return report;
}

/// [Kv1,Kv2]_g = K(rhoL(Kv1)v2 + rhoR(Kv2)v1) on all basis pairs of V.
inline CheckReport check_relative_rb(const OperatorCandidate& cand) {
    const auto& rep = cand.rep;
    const auto& g = rep.algebra;
    if (cand.K.rows() != g.dim() || cand.K.cols() != rep.carrier_dim)
        throw ShapeMismatch("operator shape vs algebra and carrier dimensions");
    CheckReport report = CheckReport::pass("relative-rota-baxter");
    for (int a = 0; a < rep.carrier_dim; ++a)
        for (int b = 0; b < rep.carrier_dim; ++b) {
            auto v1 = basis_vector(g.field(), rep.carrier_dim, a);
            auto v2 = basis_vector(g.field(), rep.carrier_dim, b);
            auto kv1 = cand.K.apply(v1);
            auto kv2 = cand.K.apply(v2);
            auto lhs = g.bracket(kv1, kv2);
            auto inner = vec_add(rep.rho_l(kv1).apply(v2), rep.rho_r(kv2).apply(v1));
            auto res = vec_sub(lhs, cand.K.apply(inner));
            if (!vec_is_zero(res)) {
                report.fail({"relative-rota-baxter", {a + 1, b + 1}, vec_strings(res)});
                return report;
            }
        }
    return report;
}

/// Maps from tensor powers of V into g travel as coefficient tensors of
/// shape [m]^arity x [n]: T[v1..vk][x] is the e_x coefficient of f(v_{v1},...).
inline Tensor cross_map_from_matrix(const Matrix& K) {
    Tensor t(K.field(), {K.cols(), K.rows()});
    for (int v = 0; v < K.cols(); ++v)
        for (int x = 0; x < K.rows(); ++x) t.at({v, x}) = K.at(x, v);
    return t;
}

namespace detail {

inline SplitSignature rb_signature(const Representation& rep) {
    return SplitSignature{rep.algebra.dim(), rep.carrier_dim};
}

inline MultilinearMap lift_cross_map(const Tensor& f, const SplitSignature& sig) {
    std::vector<int> pattern(f.order() - 1, 2);
    return lift(f, sig, pattern, 1);
}

/// Restricts a map on the split space back to its V-entries-to-g block.
/// Bidegree bookkeeping guarantees every other entry is zero; verified.
inline Tensor project_cross_map(const MultilinearMap& f, const SplitSignature& sig) {
    std::vector<int> shape(f.arity(), sig.d2);
    shape.push_back(sig.d1);
    Tensor out(f.field(), shape);
    std::vector<int> in(f.arity(), 0);
    do {
        bool pure = true;
        for (int v : in)
            if (sig.in_first(v)) pure = false;
        for (int j = 0; j < f.dim(); ++j) {
            const Scalar& val = f.at(in, j);
            if (val.is_zero()) continue;
            if (!pure || !sig.in_first(j))
                throw ShapeMismatch("derived bracket left the expected bidegree block");
            std::vector<int> idx;
            for (int v : in) idx.push_back(v - sig.d1);
            idx.push_back(j);
            out.at(idx) = val;
        }
    } while (next_tuple(in, f.dim()));
    return out;
}

}  // namespace detail

/// Derived graded Lie bracket on maps tensor^k V -> g:
/// {g1,g2} = (-1)^{arity(g1)-1} [[mu1, g1-lift], g2-lift], projected back.
/// The sign uses the graded degree arity-1; this is the convention under
/// which {K,K}(v1,v2) = 2([Kv1,Kv2] - K(rhoL(Kv1)v2) - K(rhoR(Kv2)v1)).
inline Tensor derived_bracket(const Representation& rep, const Tensor& g1, const Tensor& g2) {
    SplitSignature sig = detail::rb_signature(rep);
    MultilinearMap mu1 = MultilinearMap::from_bilinear(semidirect_product(rep));
    MultilinearMap a = detail::lift_cross_map(g1, sig);
    MultilinearMap b = detail::lift_cross_map(g2, sig);
    MultilinearMap inner = balavoine_bracket(mu1, a);
    MultilinearMap outer = balavoine_bracket(inner, b);
    int m = g1.order() - 1;
    if ((m - 1) % 2 != 0) outer = -outer;
    return detail::project_cross_map(outer, sig);
}

/// Maurer-Cartan route to the operator identity; must agree with
/// check_relative_rb on every input.
inline bool is_mc_relative_rb(const OperatorCandidate& cand) {
    Tensor k = cross_map_from_matrix(cand.K);
    return derived_bracket(cand.rep, k, k).is_zero();
}

/// [u,v]_K = rhoL(Ku)v + rhoR(Kv)u on V. Requires a verified operator; the
/// result passes the Leibniz identity and K becomes an algebra morphism.
inline LeibnizAlgebra induced_bracket(const OperatorCandidate& cand) {
    if (!check_relative_rb(cand).holds) throw NotARotaBaxterOperator();
    const auto& rep = cand.rep;
    int m = rep.carrier_dim;
    LeibnizAlgebra out(rep.field(), m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            auto u = basis_vector(rep.field(), m, a);
            auto v = basis_vector(rep.field(), m, b);
            auto w = vec_add(rep.rho_l(cand.K.apply(u)).apply(v), rep.rho_r(cand.K.apply(v)).apply(u));
            for (int k = 0; k < m; ++k) out.c(a, b, k) = w[k];
        }
    return out;
}

namespace detail {

inline Matrix matrix_from_flat_index(Field f, int rows, int cols, unsigned long long idx, long p) {
    // base-p digits, most significant first, row-major: lexicographic order
    // of the flattened entries equals numeric order of idx.
    Matrix m(f, rows, cols);
    for (int pos = rows * cols - 1; pos >= 0; --pos) {
        m.at(pos / cols, pos % cols) = Scalar(f, static_cast<long>(idx % p));
        idx /= p;
    }
    return m;
}

}  // namespace detail

/// Every matrix over F_p passing check_relative_rb, in lexicographic order of
/// flattened entries. Output is identical for any worker count.
inline std::vector<Matrix> classify_rb_bruteforce(const Representation& rep, int jobs = 1) {
    Field f = rep.field();
    if (f.is_rational()) throw InputError("classification requires a prime field");
    int n = rep.algebra.dim(), m = rep.carrier_dim;
    long double space = 1;
    for (int t = 0; t < n * m; ++t) space *= f.p;
    if (space > 1e8) throw SearchSpaceTooLarge("search space exceeds 10^8 matrices");
    unsigned long long total = 1;
    for (int t = 0; t < n * m; ++t) total *= static_cast<unsigned long long>(f.p);

    if (jobs < 1) jobs = 1;
    std::vector<std::vector<Matrix>> chunks(jobs);
    auto worker = [&](int w) {
        unsigned long long lo = total * w / jobs;
        unsigned long long hi = total * (w + 1) / jobs;
        for (unsigned long long idx = lo; idx < hi; ++idx) {
            Matrix K = detail::matrix_from_flat_index(f, n, m, idx, f.p);
            if (check_relative_rb({rep, K}).holds) chunks[w].push_back(std::move(K));
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    std::vector<Matrix> out;
    for (auto& c : chunks)
        for (auto& k : c) out.push_back(std::move(k));
    return out;
}

}  // namespace leibniz

#endif

#ifndef LEIBNIZ_COCHAIN_HPP
#define LEIBNIZ_COCHAIN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// A permutation stored as sigma[pos] = image, 0-based, with its parity sign.
struct SignedPermutation {
    std::vector<int> sigma;
    int sign;
};

/// All (i,j)-shuffles of {1..i+j}: sigma(1)<...<sigma(i) and
/// sigma(i+1)<...<sigma(i+j). i=0 or j=0 yields only the identity.
/// Listed in lexicographic order of the first block.
inline std::vector<SignedPermutation> shuffles(int i, int j) {
    if (i < 0 || j < 0) throw InputError("shuffle block sizes must be nonnegative");
    int n = i + j;
    std::vector<SignedPermutation> out;
    std::vector<int> pick(i);
    for (int t = 0; t < i; ++t) pick[t] = t;
    while (true) {
        SignedPermutation sp;
        sp.sigma.resize(n);
        std::vector<bool> used(n, false);
        for (int t = 0; t < i; ++t) {
            sp.sigma[t] = pick[t];
            used[pick[t]] = true;
        }
        int pos = i;
        for (int v = 0; v < n; ++v)
            if (!used[v]) sp.sigma[pos++] = v;
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (sp.sigma[a] > sp.sigma[b]) ++inversions;
        sp.sign = (inversions % 2 == 0) ? 1 : -1;
        out.push_back(std::move(sp));
        // next i-combination of {0..n-1} in lexicographic order
        int t = i - 1;
        while (t >= 0 && pick[t] == n - i + t) --t;
        if (t < 0) break;
        ++pick[t];
        for (int s = t + 1; s < i; ++s) pick[s] = pick[s - 1] + 1;
    }
    return out;
}

/// A dense multilinear map f : (tensor^n W) -> W on a dim-d space W:
/// f(e_{i1},...,e_{in}) = sum_j T[i1..in][j] e_j. Graded degree is n-1.
class MultilinearMap {
public:
    MultilinearMap() = default;
    MultilinearMap(Field f, int dim, int arity)
        : field_(f), dim_(dim), arity_(arity) {
        if (dim < 1) throw InputError("carrier dimension must be at least 1");
        if (arity < 1) throw InputError("arity must be at least 1");
        std::size_t count = 1;
        for (int t = 0; t <= arity; ++t) count *= static_cast<std::size_t>(dim);
        check_allocation(count);
        data_.assign(count, Scalar(f));
    }

    static MultilinearMap from_bilinear(const LeibnizAlgebra& g) {
        MultilinearMap m(g.field(), g.dim(), 2);
        for (int i = 0; i < g.dim(); ++i)
            for (int j = 0; j < g.dim(); ++j)
                for (int k = 0; k < g.dim(); ++k) m.at({i, j}, k) = g.c(i, j, k);
        return m;
    }

    /// Structure constants of an arity-2 map, read as a candidate bracket.
    LeibnizAlgebra to_algebra() const {
        if (arity_ != 2) throw ShapeMismatch("only arity-2 maps induce structure constants");
        LeibnizAlgebra g(field_, dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k) g.c(i, j, k) = at({i, j}, k);
        return g;
    }

    /// Arity-1 map from a square matrix (columns = images of basis vectors).
    static MultilinearMap from_matrix(const Matrix& m) {
        if (m.rows() != m.cols()) throw ShapeMismatch("arity-1 map needs a square matrix");
        MultilinearMap f(m.field(), m.rows(), 1);
        for (int j = 0; j < m.cols(); ++j)
            for (int i = 0; i < m.rows(); ++i) f.at({j}, i) = m.at(i, j);
        return f;
    }

    Field field() const { return field_; }
    int dim() const { return dim_; }
    int arity() const { return arity_; }
    int degree() const { return arity_ - 1; }

    std::size_t flat_in(const std::vector<int>& in) const {
        std::size_t f = 0;
        for (int v : in) f = f * dim_ + v;
        return f;
    }
    Scalar& at(const std::vector<int>& in, int out) { return data_[flat_in(in) * dim_ + out]; }
    const Scalar& at(const std::vector<int>& in, int out) const { return data_[flat_in(in) * dim_ + out]; }

    /// Value on a basis tuple, as a coefficient vector.
    std::vector<Scalar> value(const std::vector<int>& in) const {
        std::size_t base = flat_in(in) * dim_;
        return std::vector<Scalar>(data_.begin() + base, data_.begin() + base + dim_);
    }

    bool is_zero() const {
        for (const auto& s : data_)
            if (!s.is_zero()) return false;
        return true;
    }

    MultilinearMap operator+(const MultilinearMap& o) const {
        require_compatible(o);
        MultilinearMap r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }
    MultilinearMap operator-(const MultilinearMap& o) const {
        require_compatible(o);
        MultilinearMap r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }
    MultilinearMap operator-() const {
        MultilinearMap r = *this;
        for (auto& s : r.data_) s = -s;
        return r;
    }
    MultilinearMap scaled(const Scalar& c) const {
        MultilinearMap r = *this;
        for (auto& s : r.data_) s *= c;
        return r;
    }

    bool operator==(const MultilinearMap& o) const {
        return dim_ == o.dim_ && arity_ == o.arity_ && data_ == o.data_;
    }

private:
    Field field_;
    int dim_ = 0, arity_ = 0;
    std::vector<Scalar> data_;

    void require_compatible(const MultilinearMap& o) const {
        if (dim_ != o.dim_) throw CarrierMismatch();
        if (arity_ != o.arity_) throw ShapeMismatch("map arities differ");
    }
};

inline bool next_tuple(std::vector<int>& t, int base) {
    for (std::size_t k = t.size(); k-- > 0;) {
        if (++t[k] < base) return true;
        t[k] = 0;
    }
    return false;
}

namespace detail {

inline void bracket_guard(int result_arity, int dim) {
    if (result_arity > 5 || dim > 8)
        throw AllocationGuard("graded bracket evaluation exceeds the arity/dimension guard (arity " +
                              std::to_string(result_arity) + ", dim " + std::to_string(dim) + ")");
}

/// (P o_k Q)(x_1..x_N): the shuffle permutes positions 1..k-1+q; the trailing
/// arguments x_{k+q+1}..x_N stay fixed, and x_{k+q} is Q's last argument.
inline MultilinearMap compose_k(const MultilinearMap& P, const MultilinearMap& Q, int k) {
    int d = P.dim();
    int p = P.degree(), q = Q.degree();
    int N = p + q + 1;
    MultilinearMap result(P.field(), d, N);
    auto shs = shuffles(k - 1, q);
    std::vector<int> args(N, 0);
    do {
        std::vector<int> p_in(P.arity());
        std::vector<int> q_in(Q.arity());
        for (const auto& sp : shs) {
            for (int t = 0; t < k - 1; ++t) p_in[t] = args[sp.sigma[t]];
            for (int t = 0; t < q; ++t) q_in[t] = args[sp.sigma[k - 1 + t]];
            q_in[q] = args[k + q - 1];
            for (int t = k + q; t < N; ++t) p_in[t - q] = args[t];
            auto q_val = Q.value(q_in);
            for (int m = 0; m < d; ++m) {
                if (q_val[m].is_zero()) continue;
                p_in[k - 1] = m;
                auto p_val = P.value(p_in);
                for (int j = 0; j < d; ++j) {
                    if (p_val[j].is_zero()) continue;
                    Scalar term = q_val[m] * p_val[j];
                    if (sp.sign < 0) term = -term;
                    result.at(args, j) += term;
                }
            }
        }
    } while (next_tuple(args, d));
    return result;
}

inline MultilinearMap circle_bar(const MultilinearMap& P, const MultilinearMap& Q) {
    int p = P.degree(), q = Q.degree();
    MultilinearMap acc(P.field(), P.dim(), p + q + 1);
    for (int k = 1; k <= p + 1; ++k) {
        MultilinearMap term = compose_k(P, Q, k);
        if (((k - 1) * q) % 2 != 0) term = -term;
        acc = acc + term;
    }
    return acc;
}

}  // namespace detail

/// The graded Lie bracket on multilinear maps:
/// [P,Q] = P oo Q - (-1)^{pq} Q oo P  with  P oo Q = sum_k (-1)^{(k-1)q} P o_k Q.
inline MultilinearMap balavoine_bracket(const MultilinearMap& P, const MultilinearMap& Q) {
    if (P.dim() != Q.dim()) throw CarrierMismatch();
    int p = P.degree(), q = Q.degree();
    detail::bracket_guard(p + q + 1, P.dim());
    MultilinearMap lhs = detail::circle_bar(P, Q);
    MultilinearMap rhs = detail::circle_bar(Q, P);
    if ((p * q) % 2 == 0) return lhs - rhs;
    return lhs + rhs;
}

/// An arity-2 map is Maurer-Cartan iff its self-bracket vanishes, which is
/// exactly the Leibniz identity for the induced structure constants.
inline bool is_maurer_cartan(const MultilinearMap& mu) {
    if (mu.arity() != 2) throw ShapeMismatch("Maurer-Cartan test needs an arity-2 map");
    return balavoine_bracket(mu, mu).is_zero();
}

/// Split carrier bookkeeping: the first d1 basis vectors span g1.
struct SplitSignature {
    int d1, d2;
    int dim() const { return d1 + d2; }
    bool in_first(int idx) const { return idx < d1; }
};

struct Bidegree {
    int l, k;
    bool operator==(const Bidegree&) const = default;
};

/// Returns the unique bidegree of a homogeneous nonzero map, or nullopt for
/// a mixed-bidegree map. The zero map is homogeneous of every bidegree;
/// it also reports nullopt, so callers should test is_zero() first.
inline std::optional<Bidegree> bidegree(const MultilinearMap& f, const SplitSignature& sig) {
    if (f.dim() != sig.dim()) throw ShapeMismatch("map carrier vs split signature");
    std::optional<Bidegree> found;
    std::vector<int> in(f.arity(), 0);
    do {
        int a = 0;
        for (int v : in)
            if (sig.in_first(v)) ++a;
        int b = f.arity() - a;
        for (int j = 0; j < f.dim(); ++j) {
            if (f.at(in, j).is_zero()) continue;
            Bidegree pinned = sig.in_first(j) ? Bidegree{a - 1, b} : Bidegree{a, b - 1};
            if (!found)
                found = pinned;
            else if (*found != pinned)
                return std::nullopt;
        }
    } while (next_tuple(in, f.dim()));
    return found;
}

/// Horizontal lift: the dense coefficients of f on a summand pattern,
/// extended by zero to the whole split space. `f` is given as a tensor of
/// shape [pattern dims..., target dim]; pattern entries and target are 1 or 2.
inline MultilinearMap lift(const Tensor& f, const SplitSignature& sig,
                           const std::vector<int>& source_pattern, int target) {
    int n = static_cast<int>(source_pattern.size());
    if (f.order() != n + 1) throw ShapeMismatch("lift coefficients vs source pattern length");
    std::vector<int> expected;
    for (int s : source_pattern) {
        if (s != 1 && s != 2) throw InputError("source pattern entries must be 1 or 2");
        expected.push_back(s == 1 ? sig.d1 : sig.d2);
    }
    if (target != 1 && target != 2) throw InputError("lift target must be 1 or 2");
    expected.push_back(target == 1 ? sig.d1 : sig.d2);
    if (f.shape() != expected) throw ShapeMismatch("lift coefficient shape vs pattern dimensions");

    MultilinearMap out(f.field(), sig.dim(), n);
    for (std::size_t pos = 0; pos < f.size(); ++pos) {
        if (f[pos].is_zero()) continue;
        std::vector<int> idx = f.unflat(pos);
        std::vector<int> in(n);
        for (int t = 0; t < n; ++t) in[t] = (source_pattern[t] == 1) ? idx[t] : sig.d1 + idx[t];
        int j = (target == 1) ? idx[n] : sig.d1 + idx[n];
        out.at(in, j) = f[pos];
    }
    return out;
}

/// Lift of a linear map H : g2 -> g1 given by a d1 x d2 matrix.
inline MultilinearMap lift_map_2to1(const Matrix& h, const SplitSignature& sig) {
    if (h.rows() != sig.d1 || h.cols() != sig.d2) throw ShapeMismatch("H must be d1 x d2");
    Tensor coeffs(h.field(), {sig.d2, sig.d1});
    for (int v = 0; v < sig.d2; ++v)
        for (int x = 0; x < sig.d1; ++x) coeffs.at({v, x}) = h.at(x, v);
    return lift(coeffs, sig, {2}, 1);
}

/// The four homogeneous components of an arity-2 map on a split space, with
/// bidegrees 2|-1, 1|0, 0|1 and -1|2.
struct BidegreeComponents {
    MultilinearMap phi1, mu1, mu2, phi2;
};

inline BidegreeComponents decompose_bidegree(const MultilinearMap& omega, const SplitSignature& sig) {
    if (omega.arity() != 2) throw ShapeMismatch("bidegree decomposition needs an arity-2 map");
    if (omega.dim() != sig.dim()) throw ShapeMismatch("map carrier vs split signature");
    BidegreeComponents c{MultilinearMap(omega.field(), omega.dim(), 2),
                         MultilinearMap(omega.field(), omega.dim(), 2),
                         MultilinearMap(omega.field(), omega.dim(), 2),
                         MultilinearMap(omega.field(), omega.dim(), 2)};
    std::vector<int> in(2, 0);
    do {
        int a = (sig.in_first(in[0]) ? 1 : 0) + (sig.in_first(in[1]) ? 1 : 0);
        for (int j = 0; j < omega.dim(); ++j) {
            const Scalar& v = omega.at(in, j);
            if (v.is_zero()) continue;
            bool out_first = sig.in_first(j);
            MultilinearMap* dst = nullptr;
            if (a == 2)
                dst = out_first ? &c.mu1 : &c.phi1;
            else if (a == 1)
                dst = out_first ? &c.mu2 : &c.mu1;
            else
                dst = out_first ? &c.phi2 : &c.mu2;
            dst->at(in, j) = v;
        }
    } while (next_tuple(in, omega.dim()));
    return c;
}

}  // namespace leibniz

#endif

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_support.hpp"

using namespace leibniz;
using leibniz::testing::Rng;

namespace {
const Field Q = Field::rational();

Matrix make2(Field f, long a, long b, long c, long d) {
    Matrix m(f, 2, 2);
    m.at(0, 0) = Scalar(f, a);
    m.at(0, 1) = Scalar(f, b);
    m.at(1, 0) = Scalar(f, c);
    m.at(1, 1) = Scalar(f, d);
    return m;
}

std::string matrix_key(const Matrix& m) {
    std::string s;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += m.at(i, j).str() + ";";
    return s;
}

// Direct restatement of the operator identity with explicit index loops,
// sharing no code with check_relative_rb.
bool plain_identity(const Representation& rep, const Matrix& K) {
    const auto& g = rep.algebra;
    int n = g.dim(), m = rep.carrier_dim;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int x = 0; x < n; ++x) {
                Scalar lhs = zero(g.field());
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) lhs = lhs + K.at(i, a) * K.at(j, b) * g.c(i, j, x);
                Scalar rhs = zero(g.field());
                for (int v = 0; v < m; ++v) {
                    Scalar lv = zero(g.field());
                    Scalar rv = zero(g.field());
                    for (int i = 0; i < n; ++i) {
                        lv = lv + K.at(i, a) * rep.rhoL[i].at(v, b);
                        rv = rv + K.at(i, b) * rep.rhoR[i].at(v, a);
                    }
                    rhs = rhs + K.at(x, v) * (lv + rv);
                }
                if (lhs != rhs) return false;
            }
    return true;
}
}  // namespace

TEST_CASE("square operators on the algebra itself") {
    LeibnizAlgebra g = fixture_alg2();
    CHECK(check_rota_baxter(g, Matrix(Q, 2, 2)).holds);
    // the identity doubles the right-hand side on any nonabelian algebra
    CheckReport r = check_rota_baxter(g, Matrix::identity(Q, 2));
    CHECK_FALSE(r.holds);
    CHECK(r.witnesses[0].condition == "rota-baxter");
    CHECK(check_rota_baxter(LeibnizAlgebra(Q, 3), Matrix::identity(Q, 3)).holds);
    CHECK_THROWS_AS(check_rota_baxter(g, Matrix(Q, 2, 3)), ShapeMismatch);
}

TEST_CASE("relative operators against the dual of the regular representation") {
    LeibnizAlgebra g = fixture_alg2();
    Representation rep = dual_regular_representation(g);

    // the symmetric family (a b; b 0)
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) CHECK(check_relative_rb({rep, make2(Q, a, b, b, 0)}).holds);
    // the column family (a 0; -a 0)
    for (long a = -2; a <= 2; ++a) CHECK(check_relative_rb({rep, make2(Q, a, 0, -a, 0)}).holds);
    // the checkerboard family (c -c; -c c)
    for (long c = -2; c <= 2; ++c) CHECK(check_relative_rb({rep, make2(Q, c, -c, -c, c)}).holds);

    CHECK(check_relative_rb({rep, fixture_k_family_i()}).holds);
    CHECK(check_relative_rb({rep, fixture_k_family_ii()}).holds);

    CheckReport r = check_relative_rb({rep, Matrix::identity(Q, 2)});
    CHECK_FALSE(r.holds);
    CHECK(r.witnesses[0].condition == "relative-rota-baxter");

    CHECK_THROWS_AS(check_relative_rb({rep, Matrix(Q, 2, 3)}), ShapeMismatch);
}

TEST_CASE("derived bracket anchors the sign convention") {
    Rng rng(71);
    for (int t = 0; t < 30; ++t) {
        int n = rng.pick(1, 3);
        LeibnizAlgebra g = rng.random_leibniz(Q, n);
        Representation rep = rng.pick(0, 1) ? regular_representation(g) : dual_regular_representation(g);
        Matrix K = rng.matrix(Q, n, rep.carrier_dim);
        Tensor k = cross_map_from_matrix(K);
        Tensor d = derived_bracket(rep, k, k);
        for (int a = 0; a < rep.carrier_dim; ++a)
            for (int b = 0; b < rep.carrier_dim; ++b) {
                auto v1 = basis_vector(Q, rep.carrier_dim, a);
                auto v2 = basis_vector(Q, rep.carrier_dim, b);
                auto kv1 = K.apply(v1), kv2 = K.apply(v2);
                auto expect = vec_sub(g.bracket(kv1, kv2),
                                      K.apply(vec_add(rep.rho_l(kv1).apply(v2), rep.rho_r(kv2).apply(v1))));
                for (int x = 0; x < n; ++x) CHECK(d.at({a, b, x}) == expect[x] * Scalar(Q, 2));
            }
    }
}

TEST_CASE("maurer-cartan route agrees with the direct identity") {
    Field f3 = Field::prime(3);
    Representation rep3 = dual_regular_representation(fixture_alg2(f3));
    int holds = 0;
    for (unsigned long long idx = 0; idx < 81; ++idx) {
        Matrix K = make2(f3, (idx / 27) % 3, (idx / 9) % 3, (idx / 3) % 3, idx % 3);
        bool direct = check_relative_rb({rep3, K}).holds;
        CHECK(is_mc_relative_rb({rep3, K}) == direct);
        if (direct) ++holds;
    }
    CHECK(holds > 1);  // the zero matrix is never alone

    Rng rng(73);
    for (int t = 0; t < 100; ++t) {
        int n = rng.pick(1, 3);
        LeibnizAlgebra g = rng.random_leibniz(Q, n);
        Representation rep = rng.pick(0, 1) ? regular_representation(g) : dual_regular_representation(g);
        Matrix K = rng.matrix(Q, n, rep.carrier_dim, 1);
        OperatorCandidate cand{rep, K};
        CHECK(is_mc_relative_rb(cand) == check_relative_rb(cand).holds);
    }
}

TEST_CASE("induced bracket on the carrier") {
    LeibnizAlgebra g = fixture_alg2();
    Representation rep = dual_regular_representation(g);
    for (const Matrix& K : {fixture_k_family_i(), fixture_k_family_ii(), make2(Q, 2, 0, -2, 0)}) {
        OperatorCandidate cand{rep, K};
        LeibnizAlgebra h = induced_bracket(cand);
        CHECK(check_leibniz(h).holds);
        // K is a morphism from the induced bracket to g
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                auto lhs = K.apply(h.bracket_basis(a, b));
                auto rhs = g.bracket(K.apply(basis_vector(Q, 2, a)), K.apply(basis_vector(Q, 2, b)));
                CHECK(lhs == rhs);
            }
    }
    CHECK_THROWS_AS(induced_bracket({rep, Matrix::identity(Q, 2)}), NotARotaBaxterOperator);
}

TEST_CASE("brute-force classification over small prime fields") {
    Field f5 = Field::prime(5);
    Representation rep5 = dual_regular_representation(fixture_alg2(f5));
    auto found = classify_rb_bruteforce(rep5);

    // independent oracle: enumerate and test the identity with raw loops
    std::set<std::string> expect;
    for (int code = 0; code < 625; ++code) {
        Matrix K = make2(f5, (code / 125) % 5, (code / 25) % 5, (code / 5) % 5, code % 5);
        if (plain_identity(rep5, K)) expect.insert(matrix_key(K));
    }
    std::set<std::string> got;
    for (const auto& k : found) got.insert(matrix_key(k));
    CHECK(got == expect);
    CHECK(got.size() == found.size());  // no duplicates

    // every member of the three parameter families appears
    for (long a = 0; a < 5; ++a)
        for (long b = 0; b < 5; ++b) {
            CHECK(got.count(matrix_key(make2(f5, a, b, b, 0))) == 1);
            CHECK(got.count(matrix_key(make2(f5, a, 0, (5 - a) % 5, 0))) == 1);
        }
    for (long c = 0; c < 5; ++c) CHECK(got.count(matrix_key(make2(f5, c, (5 - c) % 5, (5 - c) % 5, c))) == 1);

    // output order is lexicographic in the flattened entries and stable
    // under any worker count
    auto two = classify_rb_bruteforce(rep5, 2);
    auto seven = classify_rb_bruteforce(rep5, 7);
    REQUIRE(two.size() == found.size());
    REQUIRE(seven.size() == found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        CHECK(two[i] == found[i]);
        CHECK(seven[i] == found[i]);
    }

    // zero representation over an abelian algebra accepts everything
    Representation triv = zero_representation(LeibnizAlgebra(Field::prime(2), 1), 2);
    CHECK(classify_rb_bruteforce(triv).size() == 4);

    CHECK_THROWS_AS(classify_rb_bruteforce(dual_regular_representation(fixture_alg2())), InputError);
    Representation big = zero_representation(LeibnizAlgebra(Field::prime(7), 4), 4);
    CHECK_THROWS_AS(classify_rb_bruteforce(big), SearchSpaceTooLarge);
}

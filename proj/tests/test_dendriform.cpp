#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace leibniz;
using leibniz::testing::Rng;

namespace {
const Field Q = Field::rational();
}

TEST_CASE("product axioms") {
    CHECK(check_dendriform(DendriformAlgebra(Q, 2)).holds);
    CHECK(check_dendriform(omni_lie(1)).holds);
    CHECK(check_dendriform(omni_lie(2)).holds);
    CHECK(check_dendriform(omni_lie(3)).holds);

    DendriformAlgebra broken = omni_lie(1);
    broken.left.at({1, 1, 0}) = one(Q);
    CheckReport r = check_dendriform(broken);
    CHECK_FALSE(r.holds);
    CHECK(r.witnesses[0].indices.size() == 3);
    CHECK_THROWS_AS(subadjacent(broken), NotDendriform);

    CHECK_THROWS_AS(DendriformAlgebra(Q, 0), InputError);
}

TEST_CASE("smallest matrix-plus-vector structure") {
    DendriformAlgebra a = omni_lie(1);
    // basis: f1 the single matrix unit, f2 the vector
    CHECK(a.left.at({0, 0, 0}) == one(Q));    // f1 < f1 = f1
    CHECK(a.left.at({0, 1, 1}) == one(Q));    // f1 < f2 = f2
    CHECK(a.right.at({0, 0, 0}) == -one(Q));  // f1 > f1 = -f1
    // every other entry vanishes
    int nonzero_left = 0, nonzero_right = 0;
    for (std::size_t i = 0; i < a.left.size(); ++i) {
        if (!a.left[i].is_zero()) ++nonzero_left;
        if (!a.right[i].is_zero()) ++nonzero_right;
    }
    CHECK(nonzero_left == 2);
    CHECK(nonzero_right == 1);

    LeibnizAlgebra g = subadjacent(a);
    CHECK(check_leibniz(g).holds);
    auto br = g.bracket_basis(0, 1);
    CHECK(br[0].is_zero());
    CHECK(br[1] == one(Q));  // [f1,f2] = f2
    CHECK(vec_is_zero(g.bracket_basis(0, 0)));
    CHECK(vec_is_zero(g.bracket_basis(1, 0)));
    CHECK(vec_is_zero(g.bracket_basis(1, 1)));

    CHECK_THROWS_AS(omni_lie(0), InputError);
    CHECK_THROWS_AS(omni_lie(4), SearchSpaceTooLarge);
}

TEST_CASE("canonical representation and the identity operator") {
    for (int m = 1; m <= 2; ++m) {
        DendriformAlgebra a = omni_lie(m);
        Representation rep = dendriform_rep(a);
        CHECK(check_representation(rep).holds);
        CHECK(check_relative_rb({rep, Matrix::identity(Q, a.dim)}).holds);
    }
}

TEST_CASE("splitting a bracket through an operator") {
    LeibnizAlgebra g = fixture_alg2();
    Representation rep = dual_regular_representation(g);
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            Matrix k(Q, 2, 2);
            k.at(0, 0) = Scalar(Q, a);
            k.at(0, 1) = Scalar(Q, b);
            k.at(1, 0) = Scalar(Q, b);
            DendriformAlgebra d = dendriform_from_rb(rep, k);
            CHECK(check_dendriform(d).holds);
            CHECK(subadjacent(d) == induced_bracket({rep, k}));
        }
    CHECK_THROWS_AS(dendriform_from_rb(rep, Matrix::identity(Q, 2)), NotARotaBaxterOperator);
}

TEST_CASE("invertible operators split the bracket itself") {
    LeibnizAlgebra g = fixture_alg2();
    Representation rep = dual_regular_representation(g);

    DendriformAlgebra d = compatible_from_invertible_rb(rep, fixture_k_family_i());
    CHECK(check_dendriform(d).holds);
    CHECK(subadjacent(d) == g);

    // singularity is reported before the operator identity
    CHECK_THROWS_AS(compatible_from_invertible_rb(rep, fixture_k_family_ii()), SingularK);
    CHECK_THROWS_AS(compatible_from_invertible_rb(rep, Matrix::identity(Q, 2)), NotARotaBaxterOperator);
}

TEST_CASE("doubling into a symmetric solution") {
    for (int m = 1; m <= 2; ++m) {
        DendriformAlgebra a = omni_lie(m);
        auto [big, rm] = canonical_r(a);
        int n = a.dim;
        CHECK(big.dim() == 2 * n);
        CHECK(check_leibniz(big).holds);
        // dual summand stays abelian under the semidirect construction
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) CHECK(vec_is_zero(big.bracket_basis(n + x, n + y)));

        CHECK(rm.r == swap_slots(rm.r, 0, 1));
        CHECK(check_clybe(rm).holds);

        // the induced map swaps the two summands, so the inverse form does too
        auto [b, rep] = closed_form_from_r(rm);
        CHECK(rep.holds);
        for (int i = 0; i < 2 * n; ++i)
            for (int j = 0; j < 2 * n; ++j) {
                bool cross = (i < n) != (j < n) && (i % n) == (j % n);
                CHECK(b.at(i, j) == (cross ? one(Q) : zero(Q)));
            }
    }
}

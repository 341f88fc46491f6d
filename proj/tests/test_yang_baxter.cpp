#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace leibniz;
using leibniz::testing::Rng;

namespace {
const Field Q = Field::rational();

Tensor elem2(Field f, int n, int i, int j) {
    Tensor t(f, {n, n});
    t.at({i, j}) = one(f);
    return t;
}

Tensor expect3(Field f, int n, std::initializer_list<std::array<long, 4>> terms) {
    Tensor t(f, {n, n, n});
    for (const auto& [i, j, k, c] : terms) t.at({(int)i - 1, (int)j - 1, (int)k - 1}) += Scalar(f, c);
    return t;
}
}  // namespace

TEST_CASE("coefficient transfers") {
    LeibnizAlgebra g = fixture_alg2();
    Tensor p(Q, {2, 2});
    p.at({0, 1}) = Scalar(Q, 3);
    CHECK(psi(g, p) == p);
    CHECK(upsilon(g, psi(g, p)) == p);
    CHECK_THROWS_AS(psi(g, Tensor(Q, {2})), ShapeMismatch);
    CHECK_THROWS_AS(psi(g, Tensor(Q, {2, 3})), ShapeMismatch);

    Tensor t = upsilon_of_matrix(g, fixture_k_family_i());
    CHECK(t.at({0, 0}) == one(Q));
    CHECK(t.at({0, 1}) == one(Q));
    CHECK(t.at({1, 0}) == one(Q));
    CHECK(t.at({1, 1}).is_zero());

    RMatrix rm = fixture_r_family_i(2, 5);
    Matrix sharp = r_sharp(rm);
    CHECK(sharp.at(0, 0) == Scalar(Q, 2));
    CHECK(sharp.at(0, 1) == Scalar(Q, 5));
    CHECK(sharp.at(1, 0) == Scalar(Q, 5));
    CHECK(sharp.at(1, 1).is_zero());
    // matrix and tensor views agree through the transfer
    CHECK(upsilon_of_matrix(g, sharp) == rm.r);
}

TEST_CASE("worked bracket values on basis 2-tensors") {
    LeibnizAlgebra g = fixture_alg2();
    struct Case {
        int a, b, c, d;
        Tensor expect;
    };
    std::vector<Case> cases;
    cases.push_back({1, 1, 1, 1, Tensor(Q, {2, 2, 2})});
    cases.push_back({1, 1, 1, 2, expect3(Q, 2, {{1, 1, 1, 1}})});
    cases.push_back({1, 1, 2, 1, expect3(Q, 2, {{1, 1, 1, -1}})});
    cases.push_back({1, 1, 2, 2, expect3(Q, 2, {{2, 1, 1, 2}, {1, 2, 1, -1}, {1, 1, 2, -1}})});
    cases.push_back({1, 2, 1, 2, expect3(Q, 2, {{1, 1, 1, 2}})});
    cases.push_back({1, 2, 2, 1, expect3(Q, 2, {{1, 2, 1, 1}, {1, 1, 1, -1}})});
    cases.push_back({1, 2, 2, 2,
                     expect3(Q, 2, {{2, 1, 2, 1}, {1, 2, 2, -1}, {2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 2, -1}})});
    cases.push_back({2, 1, 2, 1, expect3(Q, 2, {{1, 2, 1, -2}})});
    cases.push_back({2, 1, 2, 2,
                     expect3(Q, 2, {{2, 1, 1, 1}, {1, 2, 1, -2}, {2, 2, 1, 1}, {1, 2, 2, -1}})});
    cases.push_back({2, 2, 2, 2, expect3(Q, 2, {{2, 1, 2, 2}, {1, 2, 2, -4}, {2, 2, 1, 2}})});
    for (const auto& cs : cases) {
        Tensor p = elem2(Q, 2, cs.a - 1, cs.b - 1);
        Tensor q = elem2(Q, 2, cs.c - 1, cs.d - 1);
        CHECK(tensor_bracket_22_closed(g, p, q) == cs.expect);
        CHECK(tensor_bracket(g, p, q) == cs.expect);
    }
}

TEST_CASE("the two bracket routes agree everywhere") {
    LeibnizAlgebra g = fixture_alg2();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    Tensor p = elem2(Q, 2, a, b);
                    Tensor q = elem2(Q, 2, c, d);
                    CHECK(tensor_bracket(g, p, q) == tensor_bracket_22_closed(g, p, q));
                }

    Rng rng(103);
    for (int t = 0; t < 25; ++t) {
        int n = rng.pick(1, 3);
        LeibnizAlgebra h = rng.random_leibniz(Q, n);
        Tensor p(Q, {n, n}), q(Q, {n, n});
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = rng.scalar(Q);
        for (std::size_t i = 0; i < q.size(); ++i) q[i] = rng.scalar(Q);
        CHECK(tensor_bracket(h, p, q) == tensor_bracket_22_closed(h, p, q));
    }
}

TEST_CASE("solution verdicts") {
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) CHECK(check_clybe(fixture_r_family_i(a, b)).holds);
    for (long c = -2; c <= 2; ++c) CHECK(check_clybe(fixture_r_family_ii(c)).holds);

    CheckReport r = check_clybe(fixture_r_e2e2());
    CHECK_FALSE(r.holds);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].condition == "self-bracket-nonzero");
    CHECK(r.witnesses[0].residual ==
          std::vector<std::string>{"(1,2,2)=-4", "(2,1,2)=2", "(2,2,1)=2"});

    RMatrix asym{fixture_alg2(), elem2(Q, 2, 0, 1)};
    CheckReport ra = check_clybe(asym);
    CHECK_FALSE(ra.holds);
    CHECK(ra.witnesses[0].condition == "not-symmetric");
}

TEST_CASE("nondegenerate solutions and the inverse form") {
    auto [b, rep] = closed_form_from_r(fixture_r_family_i(1, 1));
    CHECK(rep.holds);
    // B is the transposed inverse of the (1 1; 1 0) matrix
    CHECK(b.at(0, 0).is_zero());
    CHECK(b.at(0, 1) == one(Q));
    CHECK(b.at(1, 0) == one(Q));
    CHECK(b.at(1, 1) == -one(Q));

    // nondegenerate non-solution: the identity tensor
    RMatrix idr{fixture_alg2(), elem2(Q, 2, 0, 0) + elem2(Q, 2, 1, 1)};
    auto [b2, rep2] = closed_form_from_r(idr);
    CHECK_FALSE(rep2.holds);
    CHECK(rep2.witnesses[0].condition == "closed-condition");

    CHECK_THROWS_AS(closed_form_from_r(fixture_r_e2e2()), SingularRSharp);
    // the checkerboard family is degenerate
    CHECK_THROWS_AS(closed_form_from_r(fixture_r_family_ii(1)), SingularRSharp);
}

TEST_CASE("quadratic forms intertwine the dual actions") {
    LeibnizAlgebra g = fixture_alg2();
    ManinTriple mt = standard_manin_triple(g);
    QuadraticStructure qs{mt.big, mt.omega};

    CheckReport ok = quadratic_bridge(qs, Matrix(Q, 4, 4));
    CHECK(ok.holds);
    CheckReport bad = quadratic_bridge(qs, Matrix::identity(Q, 4));
    CHECK_FALSE(bad.holds);
    CHECK(bad.witnesses.back().condition == "operator-identity");
    for (const auto& [key, val] : bad.notes)
        if (key == "relative-operator" || key == "composed-operator") CHECK(val == "fails");

    Matrix skew(Q, 2, 2);
    skew.at(0, 1) = one(Q);
    skew.at(1, 0) = -one(Q);
    CHECK_THROWS_AS(quadratic_bridge({g, skew}, Matrix(Q, 2, 2)), InvalidQuadratic);
}

TEST_CASE("doubling an operator into a solution") {
    LeibnizAlgebra g = fixture_alg2();
    Representation rep = dual_regular_representation(g);
    auto [big, rm] = solution_from_relative_rb(rep, fixture_k_family_i());
    CHECK(big.dim() == 4);
    CHECK(check_leibniz(big).holds);
    CHECK(rm.r == swap_slots(rm.r, 0, 1));
    CHECK(check_clybe(rm).holds);

    CHECK_THROWS_AS(solution_from_relative_rb(rep, Matrix::identity(Q, 2)), NotARotaBaxterOperator);
}

TEST_CASE("symmetric solutions match relative operators over F_5") {
    Field f5 = Field::prime(5);
    LeibnizAlgebra g = fixture_alg2(f5);
    Representation rep = dual_regular_representation(g);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c) {
                Tensor r(f5, {2, 2});
                r.at({0, 0}) = Scalar(f5, a);
                r.at({0, 1}) = Scalar(f5, b);
                r.at({1, 0}) = Scalar(f5, b);
                r.at({1, 1}) = Scalar(f5, c);
                RMatrix rm{g, r};
                CHECK(check_clybe(rm).holds == check_relative_rb({rep, r_sharp(rm)}).holds);
            }
}

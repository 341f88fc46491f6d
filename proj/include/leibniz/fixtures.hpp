#ifndef LEIBNIZ_FIXTURES_HPP
#define LEIBNIZ_FIXTURES_HPP

#include <string>

#include "leibniz/json_io.hpp"

namespace leibniz {

/// The 2-dimensional algebra with [e2,e1] = e1 and [e2,e2] = e1, the running
/// example behind most canned data.
inline LeibnizAlgebra fixture_alg2(Field f = Field::rational()) {
    LeibnizAlgebra g(f, 2);
    g.c(1, 0, 0) = one(f);
    g.c(1, 1, 0) = one(f);
    return g;
}

inline Matrix fixture_k_family_i(Field f = Field::rational()) {
    // the (a b; b 0) family at a = b = 1
    Matrix k(f, 2, 2);
    k.at(0, 0) = one(f);
    k.at(0, 1) = one(f);
    k.at(1, 0) = one(f);
    return k;
}

inline Matrix fixture_k_family_ii(Field f = Field::rational()) {
    // the (c -c; -c c) family at c = 1
    Matrix k(f, 2, 2);
    k.at(0, 0) = one(f);
    k.at(0, 1) = -one(f);
    k.at(1, 0) = -one(f);
    k.at(1, 1) = one(f);
    return k;
}

inline RMatrix fixture_r_family_i(long a, long b) {
    LeibnizAlgebra g = fixture_alg2();
    Tensor r(g.field(), {2, 2});
    r.at({0, 0}) = Scalar(g.field(), a);
    r.at({0, 1}) = Scalar(g.field(), b);
    r.at({1, 0}) = Scalar(g.field(), b);
    return {g, r};
}

inline RMatrix fixture_r_family_ii(long c) {
    LeibnizAlgebra g = fixture_alg2();
    Tensor r(g.field(), {2, 2});
    r.at({0, 0}) = Scalar(g.field(), c);
    r.at({0, 1}) = Scalar(g.field(), -c);
    r.at({1, 0}) = Scalar(g.field(), -c);
    r.at({1, 1}) = Scalar(g.field(), c);
    return {g, r};
}

inline RMatrix fixture_r_e2e2() {
    LeibnizAlgebra g = fixture_alg2();
    Tensor r(g.field(), {2, 2});
    r.at({1, 1}) = one(g.field());
    return {g, r};
}

/// Writes one named fixture file under dir and returns its path.
inline std::string fixtures_emit(const std::string& name, const std::string& dir) {
    json j;
    if (name == "alg2") {
        j = algebra_to_json(fixture_alg2());
    } else if (name == "dualreg") {
        j = representation_to_json(dual_regular_representation(fixture_alg2()));
    } else if (name == "k-i") {
        j = operator_to_json(fixture_k_family_i());
    } else if (name == "k-ii") {
        j = operator_to_json(fixture_k_family_ii());
    } else if (name == "r-family-i") {
        j = rmatrix_to_json(fixture_r_family_i(1, 1));
    } else if (name == "r-family-ii") {
        j = rmatrix_to_json(fixture_r_family_ii(1));
    } else if (name == "r-e2e2") {
        j = rmatrix_to_json(fixture_r_e2e2());
    } else if (name == "omni1") {
        j = dendriform_to_json(omni_lie(1));
    } else if (name == "manin-alg2") {
        j = manin_to_json(standard_manin_triple(fixture_alg2()));
    } else {
        throw UnknownFixture(name);
    }
    std::string path = dir + "/" + name + ".json";
    save_json_file(path, j);
    return path;
}

inline const char* const kFixtureNames[] = {"alg2",       "dualreg",     "k-i",
                                            "k-ii",       "r-family-i",  "r-family-ii",
                                            "r-e2e2",     "omni1",       "manin-alg2"};

}  // namespace leibniz

#endif

#ifndef LEIBNIZ_JSON_IO_HPP
#define LEIBNIZ_JSON_IO_HPP

#include <fstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "leibniz/dendriform.hpp"

namespace leibniz {

// nlohmann::json with the default std::map object type: keys come out
// sorted, which keeps every emitted document byte-stable.
using json = nlohmann::json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const json& j, bool pretty = true) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

inline json field_to_json(Field f) {
    if (f.is_rational()) return json{{"kind", "rational"}};
    return json{{"kind", "prime"}, {"p", f.p}};
}

inline Field field_from_json(const json& j) {
    if (!j.contains("field")) return Field::rational();
    const json& f = j.at("field");
    std::string kind = f.value("kind", "rational");
    if (kind == "rational") return Field::rational();
    if (kind == "prime") {
        if (!f.contains("p")) throw InputError("prime field needs a modulus 'p'");
        return Field::prime(f.at("p").get<long>());
    }
    throw InputError("unknown field kind: '" + kind + "'");
}

inline int dim_from_json(const json& j, const char* key = "dim") {
    if (!j.contains(key)) throw InputError(std::string("missing '") + key + "'");
    int n = j.at(key).get<int>();
    if (n < 1) throw InputError(std::string("'") + key + "' must be at least 1");
    return n;
}

/// Sparse 1-based bracket entries {"i":..,"j":..,"out":{"k":"coeff",...}}.
inline void constants_from_json(const json& entries, Tensor& c, int n, Field f) {
    if (!entries.is_array()) throw InputError("bracket list must be an array");
    for (const auto& e : entries) {
        int i = e.at("i").get<int>(), j = e.at("j").get<int>();
        if (i < 1 || i > n || j < 1 || j > n) throw InputError("bracket index out of range");
        for (const auto& [ks, coeff] : e.at("out").items()) {
            int k = std::stoi(ks);
            if (k < 1 || k > n) throw InputError("bracket output index out of range");
            c.at({i - 1, j - 1, k - 1}) = Scalar::parse(f, coeff.get<std::string>());
        }
    }
}

inline json constants_to_json(const Tensor& c, int n) {
    json out = json::array();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            json row = json::object();
            for (int k = 0; k < n; ++k)
                if (!c.at({i, j, k}).is_zero()) row[std::to_string(k + 1)] = c.at({i, j, k}).str();
            if (!row.empty()) out.push_back(json{{"i", i + 1}, {"j", j + 1}, {"out", row}});
        }
    return out;
}

inline LeibnizAlgebra algebra_from_json(const json& j) {
    Field f = field_from_json(j);
    int n = dim_from_json(j);
    LeibnizAlgebra g(f, n);
    if (j.contains("brackets")) {
        Tensor c(f, {n, n, n});
        constants_from_json(j.at("brackets"), c, n, f);
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < n; ++a)
                for (int k = 0; k < n; ++k) g.c(i, a, k) = c.at({i, a, k});
    }
    return g;
}

inline json algebra_to_json(const LeibnizAlgebra& g) {
    return json{{"field", field_to_json(g.field())},
                {"dim", g.dim()},
                {"brackets", constants_to_json(g.constants(), g.dim())}};
}

inline Matrix matrix_from_json(Field f, const json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) throw InputError("matrix row count mismatch");
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw InputError("matrix column count mismatch");
        for (int c = 0; c < cols; ++c) m.at(i, c) = Scalar::parse(f, row.at(c).get<std::string>());
    }
    return m;
}

inline json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        out.push_back(std::move(row));
    }
    return out;
}

inline Representation representation_from_json(const json& j) {
    LeibnizAlgebra g = algebra_from_json(j);
    int m = dim_from_json(j, "carrier_dim");
    const json& ljs = j.at("rhoL");
    const json& rjs = j.at("rhoR");
    if (static_cast<int>(ljs.size()) != g.dim() || static_cast<int>(rjs.size()) != g.dim())
        throw InputError("need one rhoL and one rhoR matrix per basis element");
    Representation rep{g, m, {}, {}};
    for (int i = 0; i < g.dim(); ++i) {
        rep.rhoL.push_back(matrix_from_json(g.field(), ljs.at(i), m, m));
        rep.rhoR.push_back(matrix_from_json(g.field(), rjs.at(i), m, m));
    }
    return rep;
}

inline json representation_to_json(const Representation& rep) {
    json j = algebra_to_json(rep.algebra);
    j["carrier_dim"] = rep.carrier_dim;
    json l = json::array(), r = json::array();
    for (const auto& m : rep.rhoL) l.push_back(matrix_to_json(m));
    for (const auto& m : rep.rhoR) r.push_back(matrix_to_json(m));
    j["rhoL"] = std::move(l);
    j["rhoR"] = std::move(r);
    return j;
}

inline Matrix operator_from_json(const json& j, Field f) {
    int rows = dim_from_json(j, "rows");
    int cols = dim_from_json(j, "cols");
    return matrix_from_json(f, j.at("matrix"), rows, cols);
}

inline json operator_to_json(const Matrix& m) {
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"matrix", matrix_to_json(m)}};
}

inline QuadraticStructure quadratic_from_json(const json& j) {
    LeibnizAlgebra g = algebra_from_json(j.at("algebra"));
    Matrix w = matrix_from_json(g.field(), j.at("omega"), g.dim(), g.dim());
    return {g, w};
}

inline json quadratic_to_json(const QuadraticStructure& qs) {
    return json{{"algebra", algebra_to_json(qs.algebra)}, {"omega", matrix_to_json(qs.omega)}};
}

inline json manin_to_json(const ManinTriple& mt) {
    return json{{"algebra", algebra_to_json(mt.big)},
                {"omega", matrix_to_json(mt.omega)},
                {"d1", mt.sig.d1}};
}

inline ManinTriple manin_from_json(const json& j) {
    QuadraticStructure qs = quadratic_from_json(j);
    int d1 = dim_from_json(j, "d1");
    if (d1 > qs.algebra.dim()) throw InputError("'d1' exceeds the algebra dimension");
    return {qs.algebra, qs.omega, SplitSignature{d1, qs.algebra.dim() - d1}};
}

inline SplitAlgebra split_from_json(const json& j) {
    LeibnizAlgebra g = algebra_from_json(j.at("algebra"));
    int d1 = dim_from_json(j, "d1");
    if (d1 > g.dim()) throw InputError("'d1' exceeds the algebra dimension");
    return {g, SplitSignature{d1, g.dim() - d1}};
}

inline json split_to_json(const SplitAlgebra& sa) {
    return json{{"algebra", algebra_to_json(sa.algebra)}, {"d1", sa.sig.d1}};
}

/// r entries are sparse: [{"i":..,"j":..,"coeff":".."}]. The algebra may be
/// inline under "algebra" or supplied separately by the caller.
inline Tensor rtensor_from_json(const json& j, const LeibnizAlgebra& g) {
    Tensor r(g.field(), {g.dim(), g.dim()});
    for (const auto& e : j.at("r")) {
        int i = e.at("i").get<int>(), k = e.at("j").get<int>();
        if (i < 1 || i > g.dim() || k < 1 || k > g.dim()) throw InputError("r index out of range");
        r.at({i - 1, k - 1}) = Scalar::parse(g.field(), e.at("coeff").get<std::string>());
    }
    return r;
}

inline RMatrix rmatrix_from_json(const json& j) {
    LeibnizAlgebra g = algebra_from_json(j.at("algebra"));
    return {g, rtensor_from_json(j, g)};
}

inline json rmatrix_to_json(const RMatrix& rm) {
    json entries = json::array();
    for (int i = 0; i < rm.algebra.dim(); ++i)
        for (int j = 0; j < rm.algebra.dim(); ++j)
            if (!rm.r.at({i, j}).is_zero())
                entries.push_back(json{{"i", i + 1}, {"j", j + 1}, {"coeff", rm.r.at({i, j}).str()}});
    return json{{"algebra", algebra_to_json(rm.algebra)}, {"r", entries}};
}

inline BialgebraPair bialgebra_from_json(const json& j) {
    return {algebra_from_json(j.at("g")), algebra_from_json(j.at("gstar"))};
}

inline json bialgebra_to_json(const BialgebraPair& p) {
    return json{{"g", algebra_to_json(p.g)}, {"gstar", algebra_to_json(p.gstar)}};
}

inline MatchedPairData matched_pair_from_json(const json& j) {
    LeibnizAlgebra g1 = algebra_from_json(j.at("g1"));
    LeibnizAlgebra g2 = algebra_from_json(j.at("g2"));
    Field f = g1.field();
    auto fam = [&](const char* key, int count, int size) {
        std::vector<Matrix> out;
        const json& arr = j.at(key);
        if (static_cast<int>(arr.size()) != count) throw InputError(std::string(key) + " family size mismatch");
        for (int i = 0; i < count; ++i) out.push_back(matrix_from_json(f, arr.at(i), size, size));
        return out;
    };
    return {g1,
            g2,
            fam("rho1L", g1.dim(), g2.dim()),
            fam("rho1R", g1.dim(), g2.dim()),
            fam("rho2L", g2.dim(), g1.dim()),
            fam("rho2R", g2.dim(), g1.dim())};
}

inline json matched_pair_to_json(const MatchedPairData& mp) {
    auto fam = [](const std::vector<Matrix>& v) {
        json out = json::array();
        for (const auto& m : v) out.push_back(matrix_to_json(m));
        return out;
    };
    return json{{"g1", algebra_to_json(mp.g1)},   {"g2", algebra_to_json(mp.g2)},
                {"rho1L", fam(mp.rho1L)},         {"rho1R", fam(mp.rho1R)},
                {"rho2L", fam(mp.rho2L)},         {"rho2R", fam(mp.rho2R)}};
}

inline DendriformAlgebra dendriform_from_json(const json& j) {
    Field f = field_from_json(j);
    int n = dim_from_json(j);
    DendriformAlgebra a(f, n);
    constants_from_json(j.at("left"), a.left, n, f);
    constants_from_json(j.at("right"), a.right, n, f);
    return a;
}

inline json dendriform_to_json(const DendriformAlgebra& a) {
    return json{{"field", field_to_json(a.field)},
                {"dim", a.dim},
                {"left", constants_to_json(a.left, a.dim)},
                {"right", constants_to_json(a.right, a.dim)}};
}

inline MultilinearMap multilinear_from_json(const json& j) {
    Field f = field_from_json(j);
    int d = dim_from_json(j);
    int arity = dim_from_json(j, "arity");
    MultilinearMap m(f, d, arity);
    if (j.contains("entries"))
        for (const auto& e : j.at("entries")) {
            std::vector<int> in;
            for (const auto& v : e.at("in")) {
                int idx = v.get<int>();
                if (idx < 1 || idx > d) throw InputError("map input index out of range");
                in.push_back(idx - 1);
            }
            if (static_cast<int>(in.size()) != arity) throw InputError("map entry arity mismatch");
            for (const auto& [ks, coeff] : e.at("out").items()) {
                int k = std::stoi(ks);
                if (k < 1 || k > d) throw InputError("map output index out of range");
                m.at(in, k - 1) = Scalar::parse(f, coeff.get<std::string>());
            }
        }
    return m;
}

inline json multilinear_to_json(const MultilinearMap& m) {
    json entries = json::array();
    std::vector<int> in(m.arity(), 0);
    do {
        json row = json::object();
        for (int k = 0; k < m.dim(); ++k)
            if (!m.at(in, k).is_zero()) row[std::to_string(k + 1)] = m.at(in, k).str();
        if (!row.empty()) {
            json idx = json::array();
            for (int v : in) idx.push_back(v + 1);
            entries.push_back(json{{"in", idx}, {"out", row}});
        }
    } while (next_tuple(in, m.dim()));
    return json{{"field", field_to_json(m.field())},
                {"dim", m.dim()},
                {"arity", m.arity()},
                {"entries", entries}};
}

inline Tensor tensor_from_json(Field f, const json& j) {
    std::vector<int> shape;
    for (const auto& d : j.at("shape")) shape.push_back(d.get<int>());
    if (shape.empty()) throw InputError("tensor needs a nonempty shape");
    Tensor t(f, shape);
    if (j.contains("entries"))
        for (const auto& e : j.at("entries")) {
            const json& in = e.at("in");
            if (static_cast<int>(in.size()) != t.order()) throw InputError("tensor entry order mismatch");
            std::vector<int> idx;
            for (int q = 0; q < t.order(); ++q) {
                int v = in.at(q).get<int>();
                if (v < 1 || v > shape[q]) throw InputError("tensor index out of range");
                idx.push_back(v - 1);
            }
            t.at(idx) = Scalar::parse(f, e.at("coeff").get<std::string>());
        }
    return t;
}

inline json tensor_to_json(const Tensor& t) {
    json entries = json::array();
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (t[f].is_zero()) continue;
        auto idx = t.unflat(f);
        json ids = json::array();
        for (int v : idx) ids.push_back(v + 1);
        entries.push_back(json{{"in", ids}, {"coeff", t[f].str()}});
    }
    json shape = json::array();
    for (int d : t.shape()) shape.push_back(d);
    return json{{"shape", shape}, {"entries", entries}};
}

inline json report_to_json(const CheckReport& r) {
    json j{{"status", r.holds ? "holds" : "fails"}, {"subject", r.subject}};
    if (!r.witnesses.empty()) {
        json ws = json::array();
        for (const auto& w : r.witnesses) {
            json wj{{"condition", w.condition}};
            if (!w.indices.empty()) wj["indices"] = w.indices;
            if (!w.residual.empty()) wj["residual"] = w.residual;
            ws.push_back(std::move(wj));
        }
        j["witnesses"] = std::move(ws);
    }
    if (!r.notes.empty()) {
        json notes = json::object();
        for (const auto& [k, v] : r.notes) notes[k] = v;
        j["notes"] = std::move(notes);
    }
    return j;
}

}  // namespace leibniz

#endif

#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leibniz/fixtures.hpp"

using namespace leibniz;

namespace {

json load(const std::string& path) { return load_json_file(path); }

/// Reduces an exact rational scalar into F_p; the denominator must be a unit.
Scalar reduce_scalar(const Scalar& s, Field fp) {
    std::string str = s.str();
    auto slash = str.find('/');
    if (slash == std::string::npos) return Scalar::parse(fp, str);
    Scalar num = Scalar::parse(fp, str.substr(0, slash));
    Scalar den = Scalar::parse(fp, str.substr(slash + 1));
    return num * den.inverse();
}

LeibnizAlgebra reduce_algebra(const LeibnizAlgebra& g, Field fp) {
    if (!g.field().is_rational()) {
        if (g.field().p != fp.p) throw InputError("input field does not match the requested prime");
        return g;
    }
    LeibnizAlgebra out(fp, g.dim());
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            for (int k = 0; k < g.dim(); ++k) out.c(i, j, k) = reduce_scalar(g.c(i, j, k), fp);
    return out;
}

Matrix reduce_matrix(const Matrix& m, Field fp) {
    Matrix out(fp, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = reduce_scalar(m.at(i, j), fp);
    return out;
}

Representation reduce_representation(const Representation& rep, Field fp) {
    if (!rep.field().is_rational()) {
        if (rep.field().p != fp.p) throw InputError("input field does not match the requested prime");
        return rep;
    }
    Representation out{reduce_algebra(rep.algebra, fp), rep.carrier_dim, {}, {}};
    for (const auto& m : rep.rhoL) out.rhoL.push_back(reduce_matrix(m, fp));
    for (const auto& m : rep.rhoR) out.rhoR.push_back(reduce_matrix(m, fp));
    return out;
}

struct Cli {
    CLI::App app{"exact-arithmetic toolkit for Leibniz algebra structures"};
    bool pretty = false;
    int code = 0;

    void print(const json& j) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

    void report(const CheckReport& r) {
        print(report_to_json(r));
        code = r.holds ? 0 : 1;
    }

    using Files = std::vector<std::string>;

    CLI::App* leaf(CLI::App* parent, const char* name, int nfiles,
                   std::function<void(const Files&)> fn) {
        auto files = std::make_shared<Files>();
        CLI::App* sub = parent->add_subcommand(name);
        if (nfiles > 0) sub->add_option("files", *files, "input files")->expected(nfiles)->required();
        sub->callback([files, fn = std::move(fn)] { fn(*files); });
        return sub;
    }

    Cli() {
        app.require_subcommand(1);
        app.add_flag("--pretty", pretty, "indent JSON output");

        CLI::App* check = app.add_subcommand("check", "verify a structure, exit 0 holds / 1 fails");
        check->require_subcommand(1);
        leaf(check, "leibniz", 1, [this](const Files& f) { report(check_leibniz(algebra_from_json(load(f[0])))); });
        leaf(check, "rep", 1, [this](const Files& f) { report(check_representation(representation_from_json(load(f[0])))); });
        leaf(check, "quadratic", 1, [this](const Files& f) { report(check_quadratic(quadratic_from_json(load(f[0])))); });
        leaf(check, "rb", 2, [this](const Files& f) {
            LeibnizAlgebra g = algebra_from_json(load(f[0]));
            report(check_rota_baxter(g, operator_from_json(load(f[1]), g.field())));
        });
        leaf(check, "relative-rb", 2, [this](const Files& f) {
            Representation rep = representation_from_json(load(f[0]));
            report(check_relative_rb({rep, operator_from_json(load(f[1]), rep.field())}));
        });
        leaf(check, "clybe", 2, [this](const Files& f) {
            LeibnizAlgebra g = algebra_from_json(load(f[0]));
            report(check_clybe({g, rtensor_from_json(load(f[1]), g)}));
        });
        leaf(check, "bialgebra", 1, [this](const Files& f) {
            BialgebraPair pair = bialgebra_from_json(load(f[0]));
            CheckReport r = check_bialgebra(pair);
            EquivalenceVerdict v = equivalence_harness(pair);
            r.notes.emplace_back("verdict-bialgebra", v.bialgebra ? "holds" : "fails");
            r.notes.emplace_back("verdict-matched-pair", v.matched_pair ? "holds" : "fails");
            r.notes.emplace_back("verdict-manin-triple", v.manin_triple ? "holds" : "fails");
            report(r);
        });
        leaf(check, "matched-pair", 1, [this](const Files& f) { report(check_matched_pair(matched_pair_from_json(load(f[0])))); });
        leaf(check, "manin", 1, [this](const Files& f) {
            ManinTriple mt = manin_from_json(load(f[0]));
            report(check_manin_triple(mt.big, mt.omega, mt.sig));
        });
        leaf(check, "dendriform", 1, [this](const Files& f) { report(check_dendriform(dendriform_from_json(load(f[0])))); });

        CLI::App* build = app.add_subcommand("build", "construct a derived object and write it to -o");
        build->require_subcommand(1);
        auto built = [this](CLI::App* sub, int nfiles, std::function<json(const Files&)> fn) {
            auto files = std::make_shared<Files>();
            auto out = std::make_shared<std::string>();
            if (nfiles > 0) sub->add_option("files", *files, "input files")->expected(nfiles)->required();
            sub->add_option("-o,--output", *out, "output file")->required();
            sub->callback([this, files, out, fn = std::move(fn)] {
                json j = fn(*files);
                save_json_file(*out, j, pretty);
                print(j);
            });
        };
        built(build->add_subcommand("dual-rep"), 1,
              [](const Files& f) { return representation_to_json(dual_representation(representation_from_json(load(f[0])))); });
        built(build->add_subcommand("semidirect"), 1,
              [](const Files& f) { return algebra_to_json(semidirect_product(representation_from_json(load(f[0])))); });
        built(build->add_subcommand("twist"), 2, [](const Files& f) {
            SplitAlgebra sa = split_from_json(load(f[0]));
            Matrix h = operator_from_json(load(f[1]), sa.algebra.field());
            return split_to_json(twist(sa, h));
        });
        built(build->add_subcommand("bowtie"), 1,
              [](const Files& f) { return split_to_json(bowtie_product(matched_pair_from_json(load(f[0])))); });
        built(build->add_subcommand("manin-standard"), 1,
              [](const Files& f) { return manin_to_json(standard_manin_triple(algebra_from_json(load(f[0])))); });
        built(build->add_subcommand("triangular"), 2, [](const Files& f) {
            LeibnizAlgebra g = algebra_from_json(load(f[0]));
            RMatrix rm{g, rtensor_from_json(load(f[1]), g)};
            if (!check_clybe(rm).holds) throw InputError("r is not a solution; cannot build the triangular pair");
            LeibnizAlgebra gstar = induced_bracket({dual_regular_representation(g), r_sharp(rm)});
            return bialgebra_to_json({g, gstar});
        });
        built(build->add_subcommand("dendriform-from-rb"), 2, [](const Files& f) {
            Representation rep = representation_from_json(load(f[0]));
            return dendriform_to_json(dendriform_from_rb(rep, operator_from_json(load(f[1]), rep.field())));
        });
        built(build->add_subcommand("canonical-r"), 1,
              [](const Files& f) { return rmatrix_to_json(canonical_r(dendriform_from_json(load(f[0]))).second); });
        built(build->add_subcommand("solution-from-rb"), 2, [](const Files& f) {
            Representation rep = representation_from_json(load(f[0]));
            Matrix k = operator_from_json(load(f[1]), rep.field());
            return rmatrix_to_json(solution_from_relative_rb(rep, k).second);
        });

        CLI::App* bracket = app.add_subcommand("bracket", "evaluate a graded bracket");
        bracket->require_subcommand(1);
        leaf(bracket, "balavoine", 2, [this](const Files& f) {
            print(multilinear_to_json(balavoine_bracket(multilinear_from_json(load(f[0])), multilinear_from_json(load(f[1])))));
        });
        leaf(bracket, "derived", 3, [this](const Files& f) {
            Representation rep = representation_from_json(load(f[0]));
            Tensor t1 = tensor_from_json(rep.field(), load(f[1]));
            Tensor t2 = tensor_from_json(rep.field(), load(f[2]));
            print(tensor_to_json(derived_bracket(rep, t1, t2)));
        });
        leaf(bracket, "tensor", 3, [this](const Files& f) {
            LeibnizAlgebra g = algebra_from_json(load(f[0]));
            Tensor r1 = rtensor_from_json(load(f[1]), g);
            Tensor r2 = rtensor_from_json(load(f[2]), g);
            print(tensor_to_json(tensor_bracket(g, r1, r2)));
        });

        CLI::App* classify = app.add_subcommand("classify", "enumerate operators over a prime field");
        classify->require_subcommand(1);
        {
            auto files = std::make_shared<Files>();
            auto prime = std::make_shared<long>(0);
            auto jobs = std::make_shared<int>(1);
            CLI::App* rb = classify->add_subcommand("rb");
            rb->add_option("files", *files, "algebra file and representation file")->expected(2)->required();
            rb->add_option("--prime", *prime, "field modulus")->required();
            rb->add_option("--jobs", *jobs, "worker count");
            rb->callback([files, prime, jobs] {
                Field fp = Field::prime(*prime);
                LeibnizAlgebra g = reduce_algebra(algebra_from_json(load((*files)[0])), fp);
                Representation rep = reduce_representation(representation_from_json(load((*files)[1])), fp);
                if (!(rep.algebra == g)) throw InputError("algebra and representation files disagree");
                // one compact object per line so large sweeps stream
                for (const Matrix& k : classify_rb_bruteforce(rep, *jobs))
                    std::cout << operator_to_json(k).dump() << "\n";
            });
        }

        CLI::App* fixtures = app.add_subcommand("fixtures", "write canonical example files");
        {
            auto name = std::make_shared<std::string>();
            auto dir = std::make_shared<std::string>(".");
            fixtures->add_option("name", *name, "fixture name, or 'all'")->required();
            fixtures->add_option("--dir", *dir, "output directory");
            fixtures->callback([name, dir] {
                if (*name == "all") {
                    for (const char* n : kFixtureNames) std::cout << fixtures_emit(n, *dir) << "\n";
                } else {
                    std::cout << fixtures_emit(*name, *dir) << "\n";
                }
            });
        }

        // let the global --pretty flag appear anywhere on the command line
        std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
            a->fallthrough();
            for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; })) allow_fallthrough(s);
        };
        allow_fallthrough(&app);
    }
};

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    try {
        cli.app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return cli.app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return cli.code;
}

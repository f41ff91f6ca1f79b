// gentype: command-line front end. All output is JSON on stdout.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "gentype/json_io.hpp"
#include "gentype/verify.hpp"

using namespace gentype;
using io::json;

namespace {

struct Settings {
    std::uint64_t seed = kDefaultSeed;
    std::size_t scale = 0;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string format = "json";
};

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
        case ErrorKind::UnknownSuite: return 2;
        case ErrorKind::UnsupportedField: return 3;
        default: return 4;
    }
}

void emit(const json& j, const Settings& s) {
    std::cout << (s.format == "pretty" ? j.dump(2) : j.dump()) << "\n";
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, path + ": " + e.what());
    }
}

Matrix read_matrix(const std::string& path) {
    Matrix m = io::matrix_from_json(read_json_file(path));
    if (!m.is_square()) fail(ErrorKind::NotSquare, path + " does not hold a square matrix");
    if (m.field().kind() == FieldKind::Extension && m.field().prime_field().kind() == FieldKind::Rationals) {
        fail(ErrorKind::UnsupportedField, "extensions of Q are not supported for matrix input");
    }
    return m;
}

int cmd_mtype(const std::string& path, const Settings& s) {
    const Matrix x = read_matrix(path);
    const CycleType ct = cycle_type(x, s.seed);
    const GreenType gt = green_type(ct);
    const GeneralizedType gen = generalized_type(ct);
    emit({{"field", io::field_to_json(x.field())},
          {"n", x.rows()},
          {"cycle_type", io::cycle_type_to_json(ct)},
          {"green_type", io::green_type_to_json(gt)},
          {"generalized_type", io::generalized_type_to_json(gen)},
          {"text", {{"cycle_type", ct.to_string()}, {"green_type", gt.to_string()}, {"generalized_type", gen.to_string()}}}},
         s);
    return 0;
}

int cmd_centconj(const std::string& px, const std::string& py, const Settings& s) {
    const Matrix x = read_matrix(px);
    const Matrix y = read_matrix(py);
    const auto cert = centralizers_conjugate(x, y, s.seed);
    emit(io::certificate_to_json(cert), s);
    return cert.verdict ? 0 : 1;
}

int cmd_perm(const std::string& gs, const std::string& hs, const std::string& group, std::size_t n, const Settings& s) {
    Permutation g = io::permutation_from_text(gs, n);
    Permutation h = io::permutation_from_text(hs, n);
    if (n == 0) {
        const std::size_t m = std::max(g.n(), h.n());
        g = io::permutation_from_text(gs, m);
        h = io::permutation_from_text(hs, m);
    }
    const VariationReport rep = group == "an" ? an_cent_equal(g, h) : sn_cent_equal(g, h);
    json out = io::variation_report_to_json(rep);
    out["group"] = group;
    out["n"] = g.n();
    out["g"] = g.to_string();
    out["h"] = h.to_string();
    emit(out, s);
    return rep.equal ? 0 : 1;
}

int cmd_verify(const std::string& suite, const Settings& s) {
    const verify::Report rep = verify::run_suite(suite, {s.seed, s.scale, s.jobs});
    emit(rep.to_json(), s);
    std::cerr << suite << ": " << rep.instances_checked << " checks, " << rep.failures.size() << " failures, "
              << rep.elapsed_seconds << " s\n";
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Settings s;
    CLI::App app{"Types of matrices and conjugacy of centralizer algebras"};
    app.require_subcommand(1);
    app.add_option("--seed", s.seed, "seed for randomized algorithms");
    app.add_option("--format", s.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

    std::string file_x, file_y, g, h, group = "sn", suite;
    std::size_t n = 0;

    auto* mtype = app.add_subcommand("mtype", "cycle, Green and generalized type of a matrix");
    mtype->add_option("matrix", file_x, "matrix JSON file")->required();

    auto* centconj = app.add_subcommand("centconj", "decide whether Cent(X) and Cent(Y) are conjugate");
    centconj->add_option("x", file_x, "matrix JSON file")->required();
    centconj->add_option("y", file_y, "matrix JSON file")->required();

    auto* perm = app.add_subcommand("perm", "decide whether two permutations have equal centralizers");
    perm->add_option("first", g, "cycle notation or image array")->required();
    perm->add_option("second", h, "cycle notation or image array (default: identity)");
    perm->add_option("--group", group, "sn or an")->check(CLI::IsMember({"sn", "an"}));
    perm->add_option("--n", n, "degree (default: largest point mentioned)");

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "suite name")->required();
    ver->add_option("--scale", s.scale, "suite size (0 = default)");
    ver->add_option("--jobs", s.jobs, "worker threads");

    for (auto* sub : {mtype, centconj, perm, ver}) {
        sub->add_option("--seed", s.seed, "seed for randomized algorithms");
        sub->add_option("--format", s.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(io::error_to_json(ErrorKind::ParseError, e.what()), s);
        return 2;
    }

    try {
        if (*mtype) return cmd_mtype(file_x, s);
        if (*centconj) return cmd_centconj(file_x, file_y, s);
        if (*perm) return cmd_perm(g, h, group, n, s);
        return cmd_verify(suite, s);
    } catch (const Error& e) {
        emit(io::error_to_json(e.kind(), e.what()), s);
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}

#include <spoke/serialize.hpp>
#include <spoke/verify.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <future>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerifyFailed = 4;

int exit_code_for(const spoke::SpokeError& e) {
    return e.kind() == spoke::ErrorKind::ParseError ? kExitUsage : kExitDomain;
}

std::string plain_int_list(const std::vector<spoke::BigInt>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

void emit_json(const spoke::Json& j) { std::cout << j.dump(2) << "\n"; }

struct ElementArgs {
    unsigned long p = 0;
    unsigned long n = 0;
    std::string elem;
    bool json = false;
};

int run_marks(const ElementArgs& a) {
    spoke::GroupSpec g(a.p, a.n);
    spoke::BurnsideElement x = spoke::parse_element(a.elem, g);
    spoke::MarksVector marks = to_marks(x);
    if (a.json) {
        spoke::Json j{{"element", spoke::to_json(x)},
                      {"marks", spoke::detail::bigints_to_json(marks)}};
        emit_json(j);
    } else {
        std::cout << plain_int_list(marks) << "\n";
    }
    return kExitOk;
}

int run_mahowald(const ElementArgs& a) {
    spoke::require(a.n >= 1, spoke::ErrorKind::ParseError, "--n must be at least 1");
    spoke::GroupSpec level(a.p, a.n - 1);
    spoke::BurnsideElement x = spoke::parse_element(a.elem, level);
    spoke::MahowaldResult r = spoke::mahowald_invariant(x);
    if (a.json) {
        emit_json(spoke::to_json(r));
        return kExitOk;
    }
    std::cout << "degree: " << r.degree << "\n";
    std::cout << "coefficients: " << plain_int_list(r.coefficients) << "\n";
    if (r.j) {
        std::cout << "invariant: " << r.display << "\n";
        std::cout << "modulus: " << r.j->modulus.get_str() << "\n";
        std::cout << "indeterminacy: " << r.j->indeterminacy << "\n";
    } else if (r.residue) {
        std::cout << "residue: " << r.residue->get_str() << "\n";
    }
    return kExitOk;
}

struct MkArgs {
    unsigned long p = 0;
    unsigned long n = 0;
    long k = 0;
    std::string mode = "oracle";
    bool json = false;
};

int run_mk(const MkArgs& a) {
    spoke::GroupSpec g(a.p, a.n);
    spoke::FixedLattice f = [&] {
        if (a.mode == "oracle") {
            spoke::OracleSweep sweep(g);
            return sweep.fixed_lattice(a.k);
        }
        if (a.mode == "closed")
            return spoke::lattice_of_classes(g, a.k, spoke::closed_form_complex_basis(g, a.k),
                                             spoke::LatticeProvenance::ClosedFormComplex);
        if (a.mode == "real")
            return spoke::lattice_of_classes(g, a.k, spoke::closed_form_real_basis(g, a.k),
                                             spoke::LatticeProvenance::ClosedFormReal);
        spoke::fail(spoke::ErrorKind::ParseError, "unknown mode: " + a.mode);
    }();
    if (a.json) {
        emit_json(spoke::to_json(f));
        return kExitOk;
    }
    const spoke::IntMatrix& b = f.lattice.basis();
    for (std::size_t r = 0; r < b.nrows; ++r) std::cout << plain_int_list(b.e[r]) << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    unsigned long max_n = 0;
    long max_k = 0;
    bool parallel = false;
    bool json = false;
};

int run_verify(const VerifyArgs& a) {
    const auto& suites = spoke::verify_suites();
    auto it = suites.find(a.suite);
    spoke::require(it != suites.end(), spoke::ErrorKind::ParseError, "unknown suite: " + a.suite);
    spoke::SweepLimits lim{a.max_n, a.max_k};

    const std::vector<int>& indices = it->second;
    std::vector<spoke::CheckResult> results;
    if (a.parallel) {
        std::vector<std::future<spoke::CheckResult>> futs;
        futs.reserve(indices.size());
        for (int idx : indices)
            futs.push_back(std::async(std::launch::async,
                                      [idx, lim] { return spoke::run_criterion(idx, lim); }));
        for (auto& f : futs) results.push_back(f.get());
    } else {
        for (int idx : indices) results.push_back(spoke::run_criterion(idx, lim));
    }

    bool all_pass = true;
    if (a.json) {
        spoke::Json out{{"suite", a.suite}};
        spoke::Json arr = spoke::Json::array();
        for (std::size_t i = 0; i < results.size(); ++i) {
            const spoke::CheckResult& r = results[i];
            all_pass = all_pass && r.pass;
            spoke::Json jr{{"criterion", indices[i]}, {"name", r.name},    {"pass", r.pass},
                           {"checks", r.checks},      {"ms", r.elapsed_ms}};
            jr["failures"] = r.failures;
            arr.push_back(std::move(jr));
        }
        out["results"] = std::move(arr);
        out["pass"] = all_pass;
        emit_json(out);
    } else {
        for (std::size_t i = 0; i < results.size(); ++i) {
            const spoke::CheckResult& r = results[i];
            all_pass = all_pass && r.pass;
            std::printf("%s %2d %s: %s (%lu checks, %ld ms)\n", r.pass ? "PASS" : "FAIL",
                        indices[i], r.name.c_str(), r.summary.c_str(), r.checks, r.elapsed_ms);
            for (const std::string& f : r.failures) std::printf("      %s\n", f.c_str());
        }
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant K-theory filtration calculator"};
    app.require_subcommand(1);

    ElementArgs marks_args;
    CLI::App* marks = app.add_subcommand("marks", "subgroup marks of a Burnside element");
    marks->add_option("--p", marks_args.p, "prime")->required();
    marks->add_option("--n", marks_args.n, "Burnside ring level of the element")->required();
    marks->add_option("--elem", marks_args.elem, "element: t:[...], z:[...], marks:[...], JSON, or -")
        ->required();
    marks->add_flag("--json", marks_args.json, "emit a JSON document");

    ElementArgs mah_args;
    CLI::App* mah = app.add_subcommand("mahowald", "invariant of an element one level down");
    mah->add_option("--p", mah_args.p, "prime")->required();
    mah->add_option("--n", mah_args.n, "ambient level; the element lives at n-1")->required();
    mah->add_option("--elem", mah_args.elem, "element: t:[...], z:[...], marks:[...], JSON, or -")
        ->required();
    mah->add_flag("--json", mah_args.json, "emit a JSON document");

    MkArgs mk_args;
    CLI::App* mk = app.add_subcommand("mk", "fixed-lattice basis in one topological degree");
    mk->add_option("--p", mk_args.p, "prime")->required();
    mk->add_option("--n", mk_args.n, "group level")->required();
    mk->add_option("--k", mk_args.k, "topological degree")->required();
    mk->add_option("--mode", mk_args.mode, "oracle, closed, or real (default oracle)");
    mk->add_flag("--json", mk_args.json, "emit a JSON document");

    VerifyArgs ver_args;
    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", ver_args.suite,
                    "burnside, repring, oracle-vs-closed, f-tables, examples, presentation, "
                    "quotients, or all (default all)");
    ver->add_option("--max-n", ver_args.max_n, "cap the group level in sweeps");
    ver->add_option("--max-k", ver_args.max_k, "cap the degree in sweeps");
    ver->add_flag("--parallel", ver_args.parallel, "run criteria concurrently");
    ver->add_flag("--json", ver_args.json, "emit a JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*marks) return run_marks(marks_args);
        if (*mah) return run_mahowald(mah_args);
        if (*mk) return run_mk(mk_args);
        if (*ver) return run_verify(ver_args);
    } catch (const spoke::SpokeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDomain;
    }
    return kExitUsage;
}

// Command-line front end for the average-entropy library: entropy vectors of
// distribution files, Shannon checks, the averaging and second-difference
// transforms, cone membership, and the Reed-Solomon theorem harness.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage/parse error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <vector>

#include "aef/entropy_geometry.hpp"
#include "aef/io.hpp"
#include "aef/theorem_harness.hpp"

namespace {

struct Options {
    double tol = aef::kDefaultTol;
    std::uint64_t guard = aef::kDefaultGuard;
    std::uint64_t seed = 0;
    bool tsv = false;

    char sep() const { return tsv ? '\t' : ' '; }
};

void print_vector(const std::vector<double>& v, const Options& opt) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) std::cout << opt.sep();
        std::cout << aef::format_value(v[i]);
    }
    std::cout << '\n';
}

aef::JointDistribution load_distribution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return aef::read_distribution(in);
}

const char* kind_name(aef::InequalityKind k) {
    switch (k) {
        case aef::InequalityKind::Nonneg: return "nonneg";
        case aef::InequalityKind::Monotone: return "monotone";
        default: return "submodular";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"average entropy functions: Shannon cone, averaging map, "
                 "Reed-Solomon extreme rays"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--tol", opt.tol, "inequality tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--guard", opt.guard, "max support size")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "RNG seed");
    app.add_flag("--tsv", opt.tsv, "tab-separated output");

    std::string file;
    std::vector<double> values;
    int n = 0, k = 0, samples = 0;
    std::vector<int> mults;

    auto* c_entropy = app.add_subcommand("entropy", "entropy vector of a distribution file");
    c_entropy->add_option("file", file)->required();

    auto* c_check = app.add_subcommand("check", "Shannon inequality check of an entropy-vector file");
    c_check->add_option("file", file)->required();

    auto* c_average = app.add_subcommand("average", "averaging map of an entropy-vector file");
    c_average->add_option("file", file)->required();

    auto* c_diff = app.add_subcommand("diff", "second-order difference of an average vector");
    c_diff->add_option("values", values)->required();

    auto* c_invdiff = app.add_subcommand("invdiff", "inverse second-order difference");
    c_invdiff->add_option("values", values)->required();

    auto* c_member = app.add_subcommand("member", "cone membership and ray decomposition");
    c_member->add_option("values", values)->required();

    auto* c_ray = app.add_subcommand("ray", "unit ray min(j,k)");
    c_ray->add_option("n", n)->required();
    c_ray->add_option("k", k)->required();

    auto* c_vray = app.add_subcommand("verify-ray", "verify the (n,k) Reed-Solomon ray");
    c_vray->add_option("n", n)->required();
    c_vray->add_option("k", k)->required();

    auto* c_achieve = app.add_subcommand("achieve", "realize an integer conic combination");
    c_achieve->add_option("n", n)->required();
    c_achieve->add_option("multiplicities", mults)->required();

    auto* c_vthm = app.add_subcommand("verify-theorem", "run the three-stage theorem sweep");
    c_vthm->add_option("n", n)->required();
    c_vthm->add_option("samples", samples)->required();

    // accept the global flags after a subcommand as well
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (c_entropy->parsed()) {
        aef::write_entropy_vector(std::cout, aef::entropy_vector(load_distribution(file)));
        return 0;
    }
    if (c_check->parsed()) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file);
        const aef::EntropyVector H = aef::read_entropy_vector(in);
        const aef::ShannonReport report = aef::shannon_check_full(H, opt.tol);
        for (const auto& v : report.violations)
            std::cout << kind_name(v.kind) << opt.sep() << v.alpha << opt.sep()
                      << v.beta << opt.sep() << aef::format_value(v.slack) << '\n';
        return report.passed ? 0 : 1;
    }
    if (c_average->parsed()) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file);
        print_vector(aef::average_map(aef::read_entropy_vector(in)).h, opt);
        return 0;
    }
    if (c_diff->parsed()) {
        const aef::AverageVector h{static_cast<int>(values.size()), values};
        print_vector(aef::second_diff(h).g, opt);
        return 0;
    }
    if (c_invdiff->parsed()) {
        const aef::DiffVector g{static_cast<int>(values.size()), values};
        print_vector(aef::second_diff_inv(g).h, opt);
        return 0;
    }
    if (c_member->parsed()) {
        const aef::AverageVector h{static_cast<int>(values.size()), values};
        const auto verdict = aef::phi_membership(h, opt.tol);
        std::cout << (verdict.member ? "MEMBER" : "NOT-MEMBER") << '\n';
        std::cout << "lambda";
        for (double l : aef::decompose(h)) std::cout << opt.sep() << aef::format_value(l);
        std::cout << '\n';
        return verdict.member ? 0 : 1;
    }
    if (c_ray->parsed()) {
        print_vector(aef::unit_ray(n, k).h, opt);
        return 0;
    }
    if (c_vray->parsed()) {
        const aef::Report report = aef::verify_ray(n, k, opt.tol, opt.guard);
        std::cout << report.render();
        const auto avg = aef::average_map(
            aef::entropy_vector(aef::extreme_ray_distribution(n, k, opt.guard).dist));
        std::cout << "average";
        for (double v : avg.h) std::cout << opt.sep() << aef::format_value(v);
        std::cout << '\n';
        return report.passed() ? 0 : 1;
    }
    if (c_achieve->parsed()) {
        if (static_cast<int>(mults.size()) > n)
            throw std::invalid_argument("achieve: more multiplicities than levels");
        mults.resize(n, 0);  // trailing levels default to zero
        const aef::AchieveResult result = aef::achieve(n, mults, opt.guard);
        std::cout << result.report.render();
        std::cout << "average";
        for (double v : result.average.h) std::cout << opt.sep() << aef::format_value(v);
        std::cout << '\n';
        std::cout << "support " << result.dist.support.size() << '\n';
        return result.report.passed() ? 0 : 1;
    }
    // verify-theorem
    const aef::Report report = aef::verify_theorem(n, samples, opt.seed, opt.guard);
    std::cout << report.render();
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const aef::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

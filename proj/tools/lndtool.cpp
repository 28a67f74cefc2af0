// lndtool: command-line front end for fixture files.

#include "lnd/dixmier.hpp"
#include "lnd/fixture.hpp"
#include "lnd/invariant_lab.hpp"
#include "lnd/parser.hpp"
#include "lnd/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <vector>

#ifndef LND_CORPUS_DIR
#define LND_CORPUS_DIR "corpus"
#endif

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    unsigned degree = 3;
    unsigned max_steps = lnd::kDefaultMaxSteps;
    std::string order;
    std::string out;
    unsigned jobs = 1;
};

lnd::RunOptions run_options(const GlobalOptions& g) {
    lnd::RunOptions opts;
    opts.degree = g.degree;
    opts.max_steps = g.max_steps;
    if (!g.order.empty()) opts.order = lnd::parse_order_kind(g.order);
    return opts;
}

lnd::FixtureInstance load(const std::string& path, const GlobalOptions& g) {
    return lnd::instantiate(lnd::load_fixture(path), run_options(g).order);
}

void write_json(const std::string& path, const nlohmann::json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw lnd::FixtureError("cannot write '" + path + "'", 0);
    out << j.dump(2) << "\n";
}

std::string render_certificate(const lnd::NilpotencyCertificate& cert) {
    std::string out = cert.certified ? "certified" : "inconclusive(" + std::to_string(cert.bound) + ")";
    out += " {";
    for (std::size_t i = 0; i < cert.per_generator_index.size(); ++i) {
        const auto& [name, index] = cert.per_generator_index[i];
        out += (i ? ", " : "") + name + ":" + (index ? std::to_string(*index) : "?");
    }
    return out + "}";
}

int cmd_check(const std::string& path, const GlobalOptions& g) {
    const auto fx = load(path, g);
    std::cout << "ring: " << fx.ring->variables().size() << " variables, Groebner basis {";
    for (std::size_t i = 0; i < fx.ring->groebner().size(); ++i) {
        std::cout << (i ? ", " : "") << fx.ring->to_string(fx.ring->groebner()[i]);
    }
    std::cout << "}\n";
    int code = kExitPass;
    for (const auto& d : fx.derivations) {
        if (d.derivation) {
            std::cout << d.name << ": well-defined\n";
        } else {
            std::cout << d.name << ": NOT well-defined, residue " << fx.ring->to_string(*d.residue) << "\n";
            code = kExitFail;
        }
    }
    return code;
}

int cmd_lnd(const std::string& path, const std::string& name, const GlobalOptions& g) {
    const auto fx = load(path, g);
    const auto cert = lnd::certify_lnd(fx.derivation(name), g.max_steps);
    std::cout << name << ": " << render_certificate(cert) << "\n";
    return cert.certified ? kExitPass : kExitFail;
}

int cmd_slice(const std::string& path, const std::string& name, const GlobalOptions& g) {
    const auto fx = load(path, g);
    const auto report = lnd::find_slices(fx.derivation(name));
    std::cout << name << ": searched " << report.search_space << "\n";
    std::cout << "slices (" << report.slices.size() << "):";
    for (const auto& s : report.slices) std::cout << " " << s.to_string() << ";";
    std::cout << "\nlocal slices (" << report.local_slices.size() << "):";
    for (const auto& ls : report.local_slices) std::cout << " (" << ls.r.to_string() << ", " << ls.t.to_string() << ");";
    std::cout << "\n";
    return kExitPass;
}

int cmd_kernel(const std::string& path, const std::string& name, const std::string& slice, bool degree_given,
               const GlobalOptions& g) {
    const auto fx = load(path, g);
    const lnd::Derivation& d = fx.derivation(name);
    std::optional<lnd::RingElement> s;
    if (!slice.empty()) {
        s = lnd::parse_element(slice, fx.ring);
    } else if (!degree_given) {
        const auto report = lnd::find_slices(d);
        if (!report.slices.empty()) s = report.slices.front();
    }
    if (s) {
        const auto kernel = lnd::kernel_via_slice(d, *s, g.max_steps);
        std::cout << "Ker " << name << " = Q[";
        for (std::size_t i = 0; i < kernel.generators.size(); ++i) {
            std::cout << (i ? ", " : "") << kernel.generators[i].to_string();
        }
        std::cout << "]  via " << kernel.via << "\n";
        return kExitPass;
    }
    lnd::LabOptions lab;
    lab.max_steps = g.max_steps;
    const auto span = lnd::kernel_basis_bounded(d, g.degree, lab);
    std::cout << "Ker " << name << " in degree <= " << g.degree << " (dimension " << span.dimension()
              << "): " << span.describe() << "\n";
    return kExitPass;
}

int cmd_intersect(const std::string& path, const std::vector<std::string>& names, const GlobalOptions& g) {
    const auto fx = load(path, g);
    lnd::LabOptions lab;
    lab.max_steps = g.max_steps;
    std::vector<lnd::SpanBasis> kernels;
    for (const auto& n : names) kernels.push_back(lnd::kernel_basis_bounded(fx.derivation(n), g.degree, lab));
    const auto span = lnd::intersect_spans(kernels);
    std::cout << "intersection in degree <= " << g.degree << " (dimension " << span.dimension()
              << "): " << span.describe() << "\n";
    return kExitPass;
}

int cmd_mlstar(const std::string& path, const GlobalOptions& g) {
    const auto fx = load(path, g);
    std::vector<lnd::SliceWitness> family;
    for (const auto& nd : fx.derivations) {
        if (!nd.derivation) continue;
        if (!lnd::certify_lnd(*nd.derivation, g.max_steps).certified) continue;
        const auto report = lnd::find_slices(*nd.derivation);
        if (report.slices.empty()) continue;
        std::cout << nd.name << ": slice " << report.slices.front().to_string() << "\n";
        family.push_back({*nd.derivation, report.slices.front()});
    }
    if (family.empty()) {
        std::cout << "no declared derivation has a slice in the template space; ML* estimate is B\n";
        return kExitPass;
    }
    lnd::LabOptions lab;
    lab.max_steps = g.max_steps;
    const auto span = lnd::ml_star_estimate_bounded(family, g.degree, lab);
    std::cout << "ML* estimate in degree <= " << g.degree << " (dimension " << span.dimension()
              << "): " << span.describe() << (span.dimension() == 1 ? "  [trivial]" : "") << "\n";
    return kExitPass;
}

int cmd_verify(const std::string& path, const GlobalOptions& g) {
    const auto report = lnd::run_fixture(path, run_options(g));
    std::cout << report.render_text();
    write_json(g.out, report.to_json());
    return report.exit_code();
}

int cmd_corpus(const std::string& dir, const GlobalOptions& g) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".toml") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "no fixtures in " << dir << "\n";
        return kExitUsage;
    }

    const lnd::RunOptions opts = run_options(g);
    std::vector<std::optional<lnd::VerificationReport>> reports(files.size());
    std::vector<std::string> errors(files.size());
    const auto n = static_cast<std::ptrdiff_t>(files.size());
    const int jobs = static_cast<int>(std::max(1u, g.jobs));
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            reports[k] = lnd::run_fixture(files[k], opts);
        } catch (const std::exception& e) {
            errors[k] = e.what();
        }
    }

    int code = kExitPass;
    nlohmann::json all = nlohmann::json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (!reports[i]) {
            std::cout << "fixture " << files[i] << ": ERROR " << errors[i] << "\n";
            code = kExitUsage;
            continue;
        }
        std::cout << reports[i]->render_text();
        all.push_back(reports[i]->to_json());
        if (!reports[i]->passed() && code == kExitPass) code = kExitFail;
    }
    write_json(g.out, all);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locally nilpotent derivations: certification, slices, Dixmier maps and bounded kernels"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--degree", g.degree, "Degree bound for bounded computations")->capture_default_str();
    app.add_option("--max-steps", g.max_steps, "Iteration bound for nilpotency")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--order", g.order, "Term order override")->check(CLI::IsMember({"lex", "grevlex"}));
    app.add_option("--out", g.out, "Write a JSON report to this path");
    app.add_option("--jobs", g.jobs, "Fixtures run concurrently by 'corpus'")->capture_default_str();

    std::string file;
    std::string derivation;
    std::vector<std::string> derivations;
    std::string slice;
    std::string corpus_dir = LND_CORPUS_DIR;

    auto* check = app.add_subcommand("check", "Check that every derivation is well defined");
    check->add_option("file", file)->required();
    auto* lnd_cmd = app.add_subcommand("lnd", "Local-nilpotency certificate");
    lnd_cmd->add_option("file", file)->required();
    lnd_cmd->add_option("derivation", derivation)->required();
    auto* slice_cmd = app.add_subcommand("slice", "Search for slices and local slices");
    slice_cmd->add_option("file", file)->required();
    slice_cmd->add_option("derivation", derivation)->required();
    auto* kernel = app.add_subcommand("kernel", "Kernel generators via a slice, or a bounded kernel basis");
    kernel->add_option("file", file)->required();
    kernel->add_option("derivation", derivation)->required();
    kernel->add_option("--slice", slice, "Slice to use");
    auto* intersect = app.add_subcommand("intersect", "Intersection of bounded kernels");
    intersect->add_option("file", file)->required();
    intersect->add_option("derivations", derivations)->required();
    auto* mlstar = app.add_subcommand("mlstar", "ML* estimate from the declared derivations that have slices");
    mlstar->add_option("file", file)->required();
    auto* verify = app.add_subcommand("verify", "Run every expectation of a fixture");
    verify->add_option("file", file)->required();
    auto* corpus = app.add_subcommand("corpus", "Run all bundled fixtures");
    corpus->add_option("--dir", corpus_dir, "Fixture directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*check) return cmd_check(file, g);
        if (*lnd_cmd) return cmd_lnd(file, derivation, g);
        if (*slice_cmd) return cmd_slice(file, derivation, g);
        if (*kernel) return cmd_kernel(file, derivation, slice, app.count("--degree") > 0, g);
        if (*intersect) return cmd_intersect(file, derivations, g);
        if (*mlstar) return cmd_mlstar(file, g);
        if (*verify) return cmd_verify(file, g);
        if (*corpus) return cmd_corpus(corpus_dir, g);
    } catch (const lnd::FixtureError& e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lnd::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lnd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

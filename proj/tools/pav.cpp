// Command-line front end: sampling, scaling-limit comparison, exact
// verification, enumeration, and the chamber bridge DP.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pav/cones.hpp"
#include "pav/dyson.hpp"
#include "pav/io.hpp"
#include "pav/label_matrix.hpp"
#include "pav/replicas.hpp"
#include "pav/sampler.hpp"
#include "pav/scaled_family.hpp"
#include "pav/stats.hpp"

using namespace pav;

namespace {

struct RunConfig {
    std::string command;
    int n = 1000;
    int d = 2;
    int replicas = 1;
    std::uint64_t seed = 1;
    int grid = 1024;
    std::string out = ".";
    std::vector<std::string> formats{"csv"};
    bool force = false;

    void validate() const {
        if (n < 1) throw CLI::ValidationError("--n must be at least 1");
        if (d < 2 || d > 8) throw CLI::ValidationError("--d must be in [2, 8]");
        if (replicas < 1) throw CLI::ValidationError("--replicas must be at least 1");
    }

    std::string provenance() const {
        std::ostringstream os;
        os << "pav " << command << " n=" << n << " d=" << d << " replicas=" << replicas
           << " seed=" << seed << " grid=" << grid;
        return os.str();
    }

    bool wants(const std::string& f) const {
        for (const auto& x : formats)
            if (x == f) return true;
        return false;
    }
};

std::filesystem::path out_path(const RunConfig& cfg, const std::string& name) {
    return std::filesystem::path(cfg.out) / name;
}

int cmd_sample(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.out);
    const auto perms =
        sample_avoiders(cfg.n, cfg.d, static_cast<std::size_t>(cfg.replicas), cfg.seed);

    {
        std::ostringstream os;
        os << "# " << cfg.provenance() << "\n";
        for (const auto& p : perms) os << p.to_line() << "\n";
        write_file(out_path(cfg, "permutations.txt").string(), os.str());
    }

    std::vector<ScaledPathFamily> psig(perms.size()), shat(perms.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(perms.size()); ++r) {
        const auto& sigma = perms[static_cast<std::size_t>(r)];
        psig[static_cast<std::size_t>(r)] = build_p_sigma(sigma, cfg.d);
        shat[static_cast<std::size_t>(r)] =
            build_s_hat(path_from_words(words_from_perm(sigma, cfg.d)));
    }

    if (cfg.wants("csv")) {
        for (std::size_t r = 0; r < perms.size(); ++r) {
            const std::string tag = std::to_string(r);
            write_file(out_path(cfg, "p_sigma_" + tag + ".csv").string(),
                       family_values_csv(psig[r], cfg.provenance() + " replica=" + tag));
            write_file(out_path(cfg, "s_hat_" + tag + ".csv").string(),
                       family_values_csv(shat[r], cfg.provenance() + " replica=" + tag));
        }
    }
    if (cfg.wants("csv"))
        write_file(out_path(cfg, "p_sigma_breakpoints_0.csv").string(),
                   family_breakpoints_csv(psig[0], cfg.provenance() + " replica=0"));
    if (cfg.wants("svg")) {
        write_file(out_path(cfg, "p_sigma.svg").string(),
                   family_svg({&psig[0]}, cfg.provenance() + " replica=0"));
        write_file(out_path(cfg, "overlay.svg").string(),
                   family_svg({&psig[0], &shat[0]}, cfg.provenance() + " replica=0"));
    }
    if (cfg.wants("json")) {
        std::ostringstream os;
        os << "{\"config\":\"" << cfg.provenance() << "\",\"count\":" << perms.size() << "}";
        write_file(out_path(cfg, "sample.json").string(), os.str());
    }
    std::cout << "wrote " << perms.size() << " samples to " << cfg.out << "\n";
    return 0;
}

// marginal of one scaled-family coordinate across replicas
Sample family_marginal(const std::vector<ScaledPathFamily>& fams, int layer, double t,
                       const std::string& label) {
    Sample s;
    s.label = label;
    s.values.reserve(fams.size());
    for (const auto& f : fams) s.values.push_back(f.value(layer, t));
    return s;
}

int cmd_compare(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.out);
    const std::size_t reps = static_cast<std::size_t>(cfg.replicas);
    const double alpha = 1e-3;
    {
        // KS needs threshold < 1 to be informative
        const double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
        const double needed = 2.0 * c * c;
        if (static_cast<double>(reps) <= needed) {
            std::cerr << "compare: need more than " << static_cast<int>(needed)
                      << " replicas for an informative KS threshold at alpha=" << alpha << "\n";
            return 2;
        }
    }

    // permutation side
    const auto perms = sample_avoiders(cfg.n, cfg.d, reps, cfg.seed);
    std::vector<ScaledPathFamily> psig(reps);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(reps); ++r)
        psig[static_cast<std::size_t>(r)] = build_p_sigma(perms[static_cast<std::size_t>(r)], cfg.d);

    // limit side
    std::vector<EigenPath> lams(reps);
    for_each_replica(reps, cfg.seed, 1u << 20, true, [&](std::size_t r, SeededRng& rng) {
        lams[r] = eigenvalue_process(sample_hermitian_bridge(cfg.d, cfg.grid, rng));
    });
    if (cfg.wants("csv"))
        write_file(out_path(cfg, "eigen_path_0.csv").string(),
                   eigen_path_csv(lams[0], cfg.provenance() + " replica=0"));
    if (cfg.wants("json")) {
        SeededRng rng0(cfg.seed, 1u << 20);
        write_file(out_path(cfg, "bridge_0.json").string(),
                   bridge_matrices_json(sample_hermitian_bridge(cfg.d, cfg.grid, rng0),
                                        cfg.provenance() + " replica=0"));
    }

    const std::vector<double> ts{0.25, 0.5, 0.75};
    bool all_pass = true;
    std::ostringstream js;
    js << "{\"config\":\"" << cfg.provenance() << "\",\"tests\":[";
    bool first = true;

    for (double t : ts) {
        const int k = static_cast<int>(t * cfg.grid + 0.5);
        for (int layer = 1; layer <= cfg.d; ++layer) {
            Sample a = family_marginal(psig, layer, t, "P_sigma layer " + std::to_string(layer));
            Sample b;
            b.label = "eigenvalue " + std::to_string(layer);
            b.values.reserve(reps);
            for (const auto& lam : lams)
                b.values.push_back(lam.values[static_cast<std::size_t>(k)][static_cast<std::size_t>(layer - 1)]);
            const auto rep = ks_two_sample(a, b, alpha);
            all_pass = all_pass && rep.pass;
            if (!first) js << ",";
            first = false;
            js << "{\"t\":" << t << ",\"coordinate\":" << layer << "," << rep.to_json().substr(1);
            std::cout << (rep.pass ? "PASS" : "FAIL") << "  t=" << t << " coord=" << layer
                      << "  D=" << rep.statistic << " thr=" << rep.threshold << "\n";
        }
    }

    if (cfg.d == 2) {
        // top curve * sqrt(2) against the three-bridge norm
        SeededRng rng(cfg.seed, 1u << 21);
        Sample bessel;
        bessel.label = "three-bridge norm";
        const double t = 0.5;
        for (std::size_t r = 0; r < reps; ++r) {
            const double sd = std::sqrt(t * (1 - t));
            const double b1 = sd * rng.normal(), b2 = sd * rng.normal(), b3 = sd * rng.normal();
            bessel.values.push_back(std::sqrt(b1 * b1 + b2 * b2 + b3 * b3));
        }
        Sample top = family_marginal(psig, 1, t, "sqrt2 top curve");
        for (auto& v : top.values) v *= std::sqrt(2.0);
        const auto rep = ks_two_sample(top, bessel, alpha);
        all_pass = all_pass && rep.pass;
        js << ",{\"t\":0.5,\"coordinate\":\"sqrt2-top-vs-excursion\"," << rep.to_json().substr(1);
        std::cout << (rep.pass ? "PASS" : "FAIL") << "  sqrt2*top vs three-bridge norm  D="
                  << rep.statistic << " thr=" << rep.threshold << "\n";
    }

    js << "],\"all_pass\":" << (all_pass ? "true" : "false") << "}";
    write_file(out_path(cfg, "compare.json").string(), js.str());
    std::cout << (all_pass ? "all marginal tests passed" : "some marginal tests FAILED") << "\n";
    return all_pass ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.out);
    struct Line {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Line> lines;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        lines.push_back({name, pass, detail});
        std::cout << (pass ? "PASS" : "FAIL") << "  " << name << (detail.empty() ? "" : "  (" + detail + ")")
                  << "\n";
    };

    {
        bool ok = true;
        for (int n = 1; n <= 8; ++n) {
            BigInt cat;
            mpz_bin_uiui(cat.get_mpz_t(), static_cast<unsigned long>(2 * n),
                         static_cast<unsigned long>(n));
            cat /= (n + 1);
            ok = ok && (BigInt(static_cast<long>(enumerate_avoiders(n, 2).size())) == cat);
        }
        add("catalan-enumeration n<=8", ok, "");
    }
    {
        bool ok = true;
        for (int n = 1; n <= 7; ++n)
            ok = ok && (avoider_count(n, 3) == BigInt(static_cast<long>(enumerate_avoiders(n, 3).size())));
        add("hook-count consistency n<=7 d=3", ok, "");
    }
    {
        // properness <=> image of an avoider, exhaustive at n=4, d in {2,3}
        bool ok = true;
        for (int d = 2; d <= 3 && ok; ++d) {
            std::vector<std::string> image;
            for (const auto& sigma : enumerate_avoiders(4, d))
                image.push_back(words_from_perm(sigma, d).to_line());
            std::sort(image.begin(), image.end());
            const long total = static_cast<long>(std::pow(d, 4));
            std::vector<std::uint8_t> a(4), b(4);
            for (long ia = 0; ia < total && ok; ++ia) {
                long v = ia;
                for (int i = 0; i < 4; ++i) {
                    a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(1 + v % d);
                    v /= d;
                }
                for (long ib = 0; ib < total && ok; ++ib) {
                    long w = ib;
                    for (int i = 0; i < 4; ++i) {
                        b[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(1 + w % d);
                        w /= d;
                    }
                    const LayeredWords om(a, b, d);
                    if (!in_omega_n(om)) continue;
                    const bool minimal =
                        std::binary_search(image.begin(), image.end(), om.to_line());
                    if (is_proper(om) != minimal) ok = false;
                }
            }
        }
        add("properness equals minimality n=4", ok, "");
    }
    {
        bool ok = true;
        for (int n = 1; n <= 7 && ok; ++n)
            for (const auto& sigma : enumerate_avoiders(n, 3)) {
                const auto w = words_from_perm(sigma, 3);
                if (!cone_class(w, ConeVariant::SCWPlusPlus, 0, n,
                                LatticePoint(3, 0), LatticePoint(3, 0)))
                    ok = false;
            }
        add("scw++ membership for avoider words n<=7 d=3", ok, "");
    }
    {
        bool ok = true;
        SeededRng rng(cfg.seed, 0);
        for (int d = 2; d <= 4; ++d) {
            for (int rep = 0; rep < 100; ++rep) {
                std::vector<std::int64_t> x(static_cast<std::size_t>(d));
                std::int64_t s = 0;
                for (int i = 0; i + 1 < d; ++i) {
                    x[static_cast<std::size_t>(i)] = rng.uniform_int(-50, 50);
                    s += x[static_cast<std::size_t>(i)];
                }
                x[static_cast<std::size_t>(d - 1)] = -s;
                __int128 lhs = 0;
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) {
                        auto y = x;
                        y[static_cast<std::size_t>(i)] += 1;
                        y[static_cast<std::size_t>(j)] -= 1;
                        lhs += vandermonde_u(y);
                    }
                if (lhs != static_cast<__int128>(d) * d * vandermonde_u(x)) ok = false;
            }
        }
        add("discrete harmonicity of U, d in {2,3,4}", ok, "exact integer identity");
    }
    {
        bool ok = true;
        SeededRng rng(cfg.seed, 1);
        for (int d = 2; d <= 6; ++d) {
            const auto t = householder(d);
            const auto ones = reflect(t, std::vector<double>(static_cast<std::size_t>(d), 1.0));
            for (int i = 0; i + 1 < d; ++i)
                if (std::abs(ones[static_cast<std::size_t>(i)]) > 1e-12) ok = false;
            if (std::abs(ones[static_cast<std::size_t>(d - 1)] - std::sqrt(static_cast<double>(d))) > 1e-12)
                ok = false;
            std::vector<double> x(static_cast<std::size_t>(d));
            for (auto& v : x) v = rng.normal();
            const auto hh = reflect(t, reflect(t, x));
            for (int i = 0; i < d; ++i)
                if (std::abs(hh[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i)]) > 1e-12)
                    ok = false;
        }
        add("householder identities d in {2..6}", ok, "");
    }

    bool all = true;
    std::ostringstream js;
    js << "{\"config\":\"" << cfg.provenance() << "\",\"checks\":[";
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) js << ",";
        js << "{\"name\":\"" << lines[i].name << "\",\"pass\":" << (lines[i].pass ? "true" : "false")
           << "}";
        all = all && lines[i].pass;
    }
    js << "],\"all_pass\":" << (all ? "true" : "false") << "}";
    write_file(out_path(cfg, "verify.json").string(), js.str());
    return all ? 0 : 1;
}

int cmd_enumerate(const RunConfig& cfg) {
    const auto avoiders = enumerate_avoiders(cfg.n, cfg.d, 10, cfg.force);
    for (const auto& p : avoiders) std::cout << p.to_line() << "\n";
    std::cerr << avoiders.size() << " permutations\n";
    return 0;
}

int cmd_bridge_dp(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.out);
    const auto table = bridge_dp(cfg.n, cfg.d);
    write_file(out_path(cfg, "bridge_dp.json").string(), table.to_json());
    std::cout << "bridge words: " << table.bridge_count().get_str() << " (" << table.state_count()
              << " DP states)\n";
    if (cfg.replicas > 1) {
        std::ostringstream os;
        os << "# " << cfg.provenance() << "\n";
        SeededRng rng(cfg.seed, 0);
        for (int r = 0; r < cfg.replicas; ++r)
            os << sample_weyl_bridge(table, rng).to_line() << "\n";
        write_file(out_path(cfg, "bridge_words.txt").string(), os.str());
        std::cout << "wrote " << cfg.replicas << " bridge words\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern-avoiding permutations, chamber walks, and their scaling limit"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "permutation length / walk length");
        sub->add_option("--d", cfg.d, "number of layers (2..8)");
        sub->add_option("--replicas", cfg.replicas, "number of replicas");
        sub->add_option("--seed", cfg.seed, "root seed");
        sub->add_option("--grid", cfg.grid, "bridge grid resolution");
        sub->add_option("--out", cfg.out, "output directory");
        sub->add_option("--format", cfg.formats, "output formats: csv,json,svg");
        sub->add_flag("--force", cfg.force, "override brute-force guards");
    };

    add_common(app.add_subcommand("sample", "sample avoiders and write their scaled families"));
    add_common(app.add_subcommand("compare", "marginal KS comparison against the matrix bridge"));
    add_common(app.add_subcommand("verify", "exact identity and predicate suite"));
    add_common(app.add_subcommand("enumerate", "list avoiders (guarded brute force)"));
    add_common(app.add_subcommand("bridge-dp", "exact chamber bridge counts and sampling"));

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.validate();
        const auto* sub = app.get_subcommands().front();
        cfg.command = sub->get_name();
        if (cfg.command == "sample") return cmd_sample(cfg);
        if (cfg.command == "compare") return cmd_compare(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        if (cfg.command == "enumerate") return cmd_enumerate(cfg);
        if (cfg.command == "bridge-dp") return cmd_bridge_dp(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

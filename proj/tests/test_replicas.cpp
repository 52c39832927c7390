#include "doctest.h"

#include <vector>

#include "pav/cones.hpp"
#include "pav/dyson.hpp"
#include "pav/io.hpp"
#include "pav/replicas.hpp"
#include "pav/sampler.hpp"
#include "pav/scaled_family.hpp"
#include "pav/stats.hpp"

using namespace pav;

TEST_CASE("replica fan-out is identical serial and parallel") {
    const std::size_t reps = 64;
    std::vector<double> serial(reps), parallel(reps);
    auto body = [](std::vector<double>& out) {
        return [&out](std::size_t r, SeededRng& rng) {
            double acc = 0.0;
            for (int i = 0; i < 100; ++i) acc += rng.normal();
            out[r] = acc;
        };
    };
    for_each_replica(reps, 12345, 7, false, body(serial));
    for_each_replica(reps, 12345, 7, true, body(parallel));
    CHECK(serial == parallel);

    // a different seed changes the draws
    std::vector<double> other(reps);
    for_each_replica(reps, 54321, 7, false, body(other));
    CHECK(serial != other);
}

TEST_CASE("rng streams are reproducible and distinct") {
    SeededRng a(9, 3), b(9, 3), c(9, 4);
    for (int i = 0; i < 32; ++i) CHECK(a.next_u64() == b.next_u64());
    bool differs = false;
    SeededRng a2(9, 3);
    for (int i = 0; i < 32; ++i) differs |= (a2.next_u64() != c.next_u64());
    CHECK(differs);
}

TEST_CASE("batch avoider sampling is thread-count independent") {
    ShapeSamplerOptions serial_opts;
    serial_opts.parallel = false;
    ShapeSamplerOptions parallel_opts;
    parallel_opts.parallel = true;

    const auto a = sample_avoiders(40, 3, 24, 777, 0, serial_opts);
    const auto b = sample_avoiders(40, 3, 24, 777, 0, parallel_opts);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

    // mcmc route is deterministic for a fixed seed as well
    ShapeSamplerOptions mcmc1, mcmc2;
    mcmc1.max_partitions = mcmc2.max_partitions = 0;
    const auto c = sample_avoiders(40, 3, 8, 88, 0, mcmc1);
    const auto d = sample_avoiders(40, 3, 8, 88, 0, mcmc2);
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == d[i]);
}

TEST_CASE("export formats") {
    SeededRng rng(233, 0);
    const auto z = sample_hermitian_bridge(2, 4, rng);
    const auto lam = eigenvalue_process(z);
    const auto csv = eigen_path_csv(lam, "probe");
    CHECK(csv.find("# probe\n") == 0);
    CHECK(csv.find("t,lambda1,lambda2") != std::string::npos);
    const auto js = bridge_matrices_json(z, "probe");
    CHECK(js.find("\"d\":2") != std::string::npos);
    CHECK(js.find("\"re\":[[") != std::string::npos);

    const auto fam = build_p_sigma(Permutation({2, 3, 1}), 2);
    const auto bp = family_breakpoints_csv(fam, "probe");
    CHECK(bp.find("layer,t,y") != std::string::npos);
    CHECK(bp.find("\n1,0,0\n") != std::string::npos);

    const auto pcsv = path_csv(path_from_words(LayeredWords({1, 1, 2}, {2, 1, 1}, 2)), "probe");
    CHECK(pcsv.find("t,x1,x2") != std::string::npos);
    CHECK(pcsv.find("\n1,1,-1\n") != std::string::npos);
}

TEST_CASE("cone report json") {
    const LayeredWords dips({2, 1}, {1, 2}, 2);
    const auto rep = cone_report(dips, ConeVariant::CW, 0, 2, LatticePoint{0, 0}, LatticePoint{0, 0});
    const auto js = rep.to_json();
    CHECK(js == "{\"variant\":\"CW\",\"window\":[0,2],\"holds\":false,\"first_violation_time\":1}");
}

TEST_CASE("matched laws pass the comparison harness") {
    // the harness against itself: two independent eigenvalue samples
    SeededRng a(239, 0), b(239, 1);
    Sample sa{{}, "bridge A"}, sb{{}, "bridge B"};
    for (int r = 0; r < 800; ++r) {
        sa.values.push_back(eig_hermitian(sample_hermitian_bridge(2, 4, a).matrices[2], 2)[0]);
        sb.values.push_back(eig_hermitian(sample_hermitian_bridge(2, 4, b).matrices[2], 2)[0]);
    }
    CHECK(ks_two_sample(sa, sb, 1e-3).pass);
}

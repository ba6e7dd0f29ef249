// Compares the serial reference kernels against their OpenMP twins on the
// kinds of inputs the library actually sees, checking outputs match while
// timing both. Build target: covlat_bench.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "covlat/dyck.hpp"
#include "covlat/kernels.hpp"

using namespace covlat;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count() /
           1000.0;
}

struct Instance {
    std::string name;
    Digraph covers;
    std::vector<int> topo;
};

Instance from_poset(std::string name, const Poset& p) {
    Instance inst{std::move(name), Digraph(p.size()), p.topo_order()};
    for (auto [a, b] : p.cover_pairs()) inst.covers.add_edge(a, b);
    return inst;
}

Instance random_dag(std::string name, int n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Digraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < density) g.add_edge(i, j);
    std::vector<int> topo = *topological_order(g);
    return {std::move(name), std::move(g), std::move(topo)};
}

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e18;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        f();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

void report(const char* kernel, const std::string& instance, int n, double serial_ms,
            double parallel_ms, bool match) {
    std::printf("%-10s %-22s n=%-5d serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n",
                kernel, instance.c_str(), n, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, match ? "match" : "MISMATCH");
}

int run(const Instance& inst, int reps) {
    const int n = inst.covers.n;
    BitMatrix up_s, up_p;
    double t_s = best_of(reps, [&] { up_s = closure_serial(inst.covers, inst.topo); });
    double t_p = best_of(reps, [&] { up_p = closure_parallel(inst.covers, inst.topo); });
    bool ok = up_s == up_p;
    report("closure", inst.name, n, t_s, t_p, up_s == up_p);

    BitMatrix cov_s, cov_p;
    t_s = best_of(reps, [&] { cov_s = covers_serial(up_s); });
    t_p = best_of(reps, [&] { cov_p = covers_parallel(up_p); });
    ok = ok && cov_s == cov_p;
    report("covers", inst.name, n, t_s, t_p, cov_s == cov_p);

    // tables and mobius want the topological column layout
    BitMatrix down = transpose(up_s);
    std::vector<int> pos(n);
    for (int t = 0; t < n; ++t) pos[inst.topo[t]] = t;
    BitMatrix up_t(n, n), down_t(n, n);
    for (int i = 0; i < n; ++i) {
        rowops::for_each_bit(up_s.row(i), up_s.words(), [&](int j) { up_t.set(i, pos[j]); });
        rowops::for_each_bit(down.row(i), down.words(), [&](int j) { down_t.set(i, pos[j]); });
    }
    MeetJoinTables mj_s, mj_p;
    t_s = best_of(reps, [&] { mj_s = meet_join_tables_serial(down_t, up_t, inst.topo); });
    t_p = best_of(reps, [&] { mj_p = meet_join_tables_parallel(down_t, up_t, inst.topo); });
    ok = ok && mj_s.meet == mj_p.meet && mj_s.join == mj_p.join;
    report("meet/join", inst.name, n, t_s, t_p, mj_s.meet == mj_p.meet && mj_s.join == mj_p.join);

    std::vector<std::int64_t> mu_s, mu_p;
    t_s = best_of(reps, [&] { mu_s = mobius_serial(up_s, down, inst.topo); });
    t_p = best_of(reps, [&] { mu_p = mobius_parallel(up_s, down, inst.topo); });
    ok = ok && mu_s == mu_p;
    report("mobius", inst.name, n, t_s, t_p, mu_s == mu_p);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
    std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled at build time\n");
#endif
    int rc = 0;
    rc |= run(from_poset("tamari(5,2)", mtamari(5, 2).poset), reps);
    rc |= run(from_poset("tamari(5,3)", mtamari(5, 3).poset), reps);
    rc |= run(from_poset("tamari(5,4)", mtamari(5, 4).poset), reps);
    rc |= run(random_dag("dag(1500,1%)", 1500, 0.01, 20250810), reps);
    return rc;
}

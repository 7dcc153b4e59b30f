// Benchmark comparing the serial reference kernels against the OpenMP batch
// kernels.  Each kernel is timed best-of-5 and the two result vectors are
// required to match bitwise before a row is reported.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "fiscsim/batch.hpp"
#include "fiscsim/households.hpp"
#include "fiscsim/production.hpp"
#include "fiscsim/scenario.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        fn();
        auto t1 = Clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

template <class T>
bool bitwise_equal(const std::vector<T>& a, const std::vector<T>& b);

template <>
bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

template <>
bool bitwise_equal(const std::vector<fiscsim::MarginalProducts>& a,
                   const std::vector<fiscsim::MarginalProducts>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].mpk != b[i].mpk || a[i].mpl != b[i].mpl || a[i].mpkp != b[i].mpkp)
            return false;
    return true;
}

template <>
bool bitwise_equal(const std::vector<fiscsim::ScenarioResult>& a,
                   const std::vector<fiscsim::ScenarioResult>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].y_hat != b[i].y_hat || a[i].chan_gc != b[i].chan_gc ||
            a[i].chan_gi != b[i].chan_gi || a[i].chan_q != b[i].chan_q ||
            a[i].chan_b != b[i].chan_b)
            return false;
    return true;
}

void report_row(const char* name, std::size_t n, double serial_ms, double parallel_ms,
                bool match) {
    double speedup = parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0;
    std::printf("%-24s %10zu %11.3f %11.3f %8.2fx  %s\n", name, n, serial_ms, parallel_ms,
                speedup, match ? "ok" : "MISMATCH");
    if (!match) std::exit(1);
}

}  // namespace

int main() {
    const int reps = 5;
    std::mt19937_64 rng(20260816);
    std::uniform_real_distribution<double> log_factor(-0.7, 0.7);
    std::uniform_real_distribution<double> alpha_raw(0.1, 1.0);
    std::uniform_real_distribution<double> small(-0.15, 0.15);

    // CES production kernels over a large batch of factor bundles.
    const std::size_t n_bundles = 200000;
    fiscsim::ProductionParams prod;
    std::vector<fiscsim::FactorBundle> bundles;
    bundles.reserve(n_bundles);
    for (std::size_t i = 0; i < n_bundles; ++i) {
        bundles.push_back({std::exp(log_factor(rng)) * 3.0, std::exp(log_factor(rng)),
                           std::exp(log_factor(rng)) * 0.5});
    }

    std::printf("%-24s %10s %11s %11s %9s\n", "kernel", "n", "serial_ms", "parallel_ms",
                "speedup");

    {
        std::vector<double> serial_out, parallel_out;
        double s = time_ms([&] { serial_out = fiscsim::batch::output_levels_serial(bundles, prod); }, reps);
        double p = time_ms([&] { parallel_out = fiscsim::batch::output_levels_parallel(bundles, prod); }, reps);
        report_row("output_levels", n_bundles, s, p, bitwise_equal(serial_out, parallel_out));
    }
    {
        std::vector<fiscsim::MarginalProducts> serial_out, parallel_out;
        double s = time_ms([&] { serial_out = fiscsim::batch::gradients_serial(bundles, prod); }, reps);
        double p = time_ms([&] { parallel_out = fiscsim::batch::gradients_parallel(bundles, prod); }, reps);
        report_row("gradients", n_bundles, s, p, bitwise_equal(serial_out, parallel_out));
    }
    {
        std::vector<double> serial_out, parallel_out;
        double s = time_ms([&] { serial_out = fiscsim::batch::cross_partials_k_kp_serial(bundles, prod); }, reps);
        double p = time_ms([&] { parallel_out = fiscsim::batch::cross_partials_k_kp_parallel(bundles, prod); }, reps);
        report_row("cross_partials_k_kp", n_bundles, s, p, bitwise_equal(serial_out, parallel_out));
    }

    // Scenario impact kernel over a large batch of impulses.
    const std::size_t n_impulses = 500000;
    fiscsim::CalibratedElasticities elast;
    std::vector<fiscsim::ScenarioImpulse> impulses;
    impulses.reserve(n_impulses);
    for (std::size_t i = 0; i < n_impulses; ++i) {
        impulses.push_back({small(rng), small(rng), small(rng), small(rng), ""});
    }
    {
        std::vector<fiscsim::ScenarioResult> serial_out, parallel_out;
        double s = time_ms([&] { serial_out = fiscsim::batch::impact_outputs_serial(impulses, elast); }, reps);
        double p = time_ms([&] { parallel_out = fiscsim::batch::impact_outputs_parallel(impulses, elast); }, reps);
        report_row("impact_outputs", n_impulses, s, p, bitwise_equal(serial_out, parallel_out));
    }

    // Steady-state MPC kernel: each element solves a nonlinear equation.
    const std::size_t n_phis = 2000;
    fiscsim::HouseholdParams hh;
    std::vector<double> phis;
    phis.reserve(n_phis);
    for (std::size_t i = 0; i < n_phis; ++i)
        phis.push_back(0.02 + 0.98 * static_cast<double>(i) / static_cast<double>(n_phis - 1));
    {
        std::vector<double> serial_out, parallel_out;
        double s = time_ms([&] { serial_out = fiscsim::batch::steady_state_mpcs_serial(phis, 1.0, 0.02, hh); }, reps);
        double p = time_ms([&] { parallel_out = fiscsim::batch::steady_state_mpcs_parallel(phis, 1.0, 0.02, hh); }, reps);
        report_row("steady_state_mpcs", n_phis, s, p, bitwise_equal(serial_out, parallel_out));
    }

    return 0;
}

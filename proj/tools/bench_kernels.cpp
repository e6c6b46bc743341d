// Timing harness comparing the OpenMP kernels against their serial
// reference implementations on representative inputs.

#include <chrono>
#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qmoments/genfun.hpp"
#include "qmoments/qseries.hpp"

namespace {

using namespace qmoments;

double time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed
              << std::setprecision(1) << std::setw(12) << serial_ms << std::setw(12)
              << parallel_ms << std::setw(10) << std::setprecision(2)
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::int64_t n = argc > 1 ? std::atoll(argv[1]) : 1500;
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#endif
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12)
              << "serial ms" << std::setw(12) << "omp ms" << std::setw(10) << "speedup"
              << "\n";

    {
        const QSeries a = pbar_series(n);
        const QSeries b = partition_series(n);
        QSeries r1(0), r2(0);
        const double ts = time_ms([&] { r1 = qs_mul_serial(a, b); });
        const double tp = time_ms([&] { r2 = qs_mul(a, b); });
        if (!(r1 == r2)) {
            std::cerr << "qs_mul mismatch\n";
            return 1;
        }
        row("qs_mul integer N=" + std::to_string(n), ts, tp);
    }
    {
        const QSeries a = qs_scale(pbar_series(n / 2), make_rational(1, 3));
        const QSeries b = qs_scale(partition_series(n / 2), make_rational(2, 7));
        QSeries r1(0), r2(0);
        const double ts = time_ms([&] { r1 = qs_mul_serial(a, b); });
        const double tp = time_ms([&] { r2 = qs_mul(a, b); });
        if (!(r1 == r2)) {
            std::cerr << "qs_mul rational mismatch\n";
            return 1;
        }
        row("qs_mul rational N=" + std::to_string(n / 2), ts, tp);
    }
    {
        const std::int64_t zn = 40;
        const ZQSeries c = crank_gf(CrankVariant::Residual1, zn);
        const ZQSeries r = rank_gf(RankVariant::Dyson, zn);
        ZQSeries r1(0), r2(0);
        const double ts = time_ms([&] { r1 = zq_mul_serial(c, r); });
        const double tp = time_ms([&] { r2 = zq_mul(c, r); });
        if (!(r1 == r2)) {
            std::cerr << "zq_mul mismatch\n";
            return 1;
        }
        row("zq_mul two-variable N=" + std::to_string(zn), ts, tp);
    }
    {
        const double t = time_ms([&] { moment_series(MomentFamily::Rank, 2, n, n); });
        row("rank second-moment DP N=" + std::to_string(n), t, t);
    }
    return 0;
}

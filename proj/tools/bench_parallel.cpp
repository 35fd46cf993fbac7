// Timing harness for the OpenMP entry-assembly and quadrature paths against
// their serial reference implementations, with bitwise agreement checked on
// every run.
#include <chrono>
#include <cstring>
#include <iostream>

#include "matel/matelem.hpp"
#include "matel/oracle.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool bitwise_equal(double a, double b) {
    return std::memcmp(&a, &b, sizeof(double)) == 0;
}

} // namespace

int main(int argc, char** argv) {
    int size = 16;
    if (argc > 1) size = std::max(2, std::atoi(argv[1]));

    using namespace matel;
    matelem::KernelQuery query;
    query.kernel = matelem::Kernel::log;
    query.basis = matelem::Basis::shifted;
    query.region = matelem::Region::square;

    std::cout << "exact log-kernel matrix, size " << size << "\n";
    auto start = std::chrono::steady_clock::now();
    const auto serial = matelem::assemble_matrix(query, size, matelem::Mode::exact, false);
    const double serial_time = seconds_since(start);
    start = std::chrono::steady_clock::now();
    const auto parallel = matelem::assemble_matrix(query, size, matelem::Mode::exact, true);
    const double parallel_time = seconds_since(start);
    bool equal = true;
    for (int m = 0; m < size; ++m)
        for (int n = 0; n < size; ++n)
            if (serial.entries[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] !=
                parallel.entries[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)])
                equal = false;
    std::cout << "  serial   " << serial_time << " s\n"
              << "  parallel " << parallel_time << " s\n"
              << "  entries identical: " << (equal ? "yes" : "NO") << "\n";

    std::cout << "quadrature referee, log kernel (6,5)\n";
    oracle::QuadConfig cfg;
    start = std::chrono::steady_clock::now();
    const auto quad_serial = oracle::quad_log_L_detail(6, 5, cfg, false);
    const double qs_time = seconds_since(start);
    start = std::chrono::steady_clock::now();
    const auto quad_parallel = oracle::quad_log_L_detail(6, 5, cfg, true);
    const double qp_time = seconds_since(start);
    const bool quad_equal = bitwise_equal(quad_serial.value, quad_parallel.value);
    std::cout << "  serial   " << qs_time << " s (" << quad_serial.rounds << " rounds)\n"
              << "  parallel " << qp_time << " s (" << quad_parallel.rounds << " rounds)\n"
              << "  values bitwise identical: " << (quad_equal ? "yes" : "NO") << "\n";

    if (!equal || !quad_equal) {
        std::cerr << "parallel paths diverged from the serial reference\n";
        return 1;
    }
    return 0;
}

#include <chrono>
#include <iostream>
#include <random>

#include "hopf/linalg.hpp"

using namespace hopf;
using clk = std::chrono::steady_clock;

namespace {

Matrix random_matrix(std::size_t n, std::mt19937 &rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Scalar::fraction(num(rng), den(rng));
    return m;
}

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

}  // namespace

int main(int argc, char **argv) {
    std::size_t n = argc > 1 ? std::stoul(argv[1]) : 128;
    std::mt19937 rng(12345);
    Matrix a = random_matrix(n, rng), b = random_matrix(n, rng);

    auto t0 = clk::now();
    Matrix serial = mat_mul_serial(a, b);
    double ts = ms_since(t0);

    t0 = clk::now();
    Matrix parallel = mat_mul(a, b);
    double tp = ms_since(t0);

    if (serial != parallel) {
        std::cerr << "MISMATCH between serial and parallel products\n";
        return 1;
    }
    std::cout << "n=" << n << "  serial " << ts << " ms, parallel " << tp
              << " ms, speedup " << (tp > 0 ? ts / tp : 0) << "x\n";
    return 0;
}

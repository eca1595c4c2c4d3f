// Serial reference vs OpenMP kernels. Usage: bench_kernels [repeats]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "sally/examples.hpp"
#include "sally/invariants.hpp"

using namespace sally;

namespace {

double best_of(int repeats, const std::function<void()>& body) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        auto start = std::chrono::steady_clock::now();
        body();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

void row(const std::string& name, int repeats, const std::function<void(Backend)>& body) {
    double serial = best_of(repeats, [&] { body(Backend::serial); });
    double parallel = best_of(repeats, [&] { body(Backend::openmp); });
    std::printf("%-34s %10.4f %10.4f %8.2fx\n", name.c_str(), serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "openmp s", "speedup");

    auto rossi = rossi_example();
    auto big = gno_family(2, 3, {1, 2});

    row("groebner_basis(rossi I^14)", repeats, [&](Backend b) {
        auto power = ideal_power(rossi.ideal, 14);
        auto gens = power.gens();
        groebner_basis(std::vector<Poly>(gens.begin(), gens.end()), b);
    });

    auto leads = ideal_power(rossi.ideal, 40).leading_monomials();
    row("standard monomials (rossi I^40)", repeats, [&](Backend b) {
        standard_monomials_by_degree(leads, rossi.ring->nvars(), b);
    });

    row("analyze_pair(" + big.name + ")", repeats, [&](Backend b) {
        auto ring = big.ring->with_backend(b);
        auto rebase = [&](const IdealHandle& h) {
            return IdealHandle(ring, std::vector<Poly>(h.gens().begin(), h.gens().end()));
        };
        IdealPair pair(rebase(big.ideal), rebase(big.reduction));
        analyze_pair(pair);
    });
    return 0;
}

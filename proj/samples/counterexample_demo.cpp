// Computes the range of the two-periodic example operator and prints the
// hyperbolicity verdict of its dual boundary curve.
#include <cstdio>

#include "ptoeplitz/ptoeplitz.hpp"

int main() {
    using namespace ptoeplitz;
    const auto spec = counterexample_spec();

    const auto range = operator_range(spec, 360, 360);
    const auto extent = real_axis_extent(range.polygon);
    std::printf("hull vertices: %zu\n", range.polygon.size());
    if (extent) std::printf("real axis: [%.6f, %.6f]\n", extent->first, extent->second);

    const auto verdict = hyperbolicity_test(counterexample_dual(), 720, 1e-7);
    std::printf("dual hyperbolic: %s\n", verdict.hyperbolic ? "yes" : "no");
    if (verdict.witness_angle) {
        std::printf("witness angle %.6f, roots:", *verdict.witness_angle);
        for (Complex z : *verdict.witness_roots) std::printf(" (%.5f%+.5fi)", z.real(), z.imag());
        std::printf("\n");
    }
}

#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version and a serial
// reference kept for testing and benchmarking; both must agree.

#include <cstdint>
#include <vector>

#include "arithgenus/big_real.hpp"

namespace arithgenus::kernels {

/// Number of threads OpenMP would use (1 when built without OpenMP).
int max_threads();

/// prod_{r=1}^{delta-1} sin(pi r / delta)^(-(delta/r)) at `bits` precision,
/// with (delta/r) the Kronecker symbol. Factors with (delta/r) = 0 are skipped.
BigReal sine_product_serial(long delta, long bits);
/// Same product split into a fixed number of blocks so the rounding does not
/// depend on the thread count.
BigReal sine_product_parallel(long delta, long bits);

/// One axis of a genus scan: the admissible numerators k (gcd(k, order) = 1)
/// of invariants k/order at one place.
struct ScanAxis {
    long order;
    std::vector<long> numerators;
};

/// All numerator tuples (one per axis, in axis order) whose invariants sum to
/// an integer. Output is sorted lexicographically by numerator tuple.
std::vector<std::vector<long>> zero_sum_tuples_serial(const std::vector<ScanAxis>& axes);
std::vector<std::vector<long>> zero_sum_tuples_parallel(const std::vector<ScanAxis>& axes);

/// Upper bound on the tuple space a scan will visit before failing loudly.
inline constexpr std::uint64_t kMaxScan = 200'000'000;

}  // namespace arithgenus::kernels

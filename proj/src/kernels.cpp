#include "arithgenus/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "arithgenus/error.hpp"
#include "arithgenus/number_core.hpp"

namespace arithgenus::kernels {

namespace {

constexpr long kSineBlocks = 64;

struct SinePartial {
    BigReal numerator;    // factors with symbol -1
    BigReal denominator;  // factors with symbol +1
};

SinePartial sine_block(long delta, long first, long last, long bits, const BigReal& pi) {
    SinePartial out{BigReal(1, bits), BigReal(1, bits)};
    const Integer d(delta);
    for (long r = first; r < last; ++r) {
        const int chi = kronecker_symbol(d, Integer(r));
        if (chi == 0) continue;
        BigReal angle = pi * BigReal(Rational(r, delta), bits);
        BigReal s = sin(angle);
        if (chi < 0) {
            out.numerator *= s;
        } else {
            out.denominator *= s;
        }
    }
    return out;
}

void check_delta(long delta) {
    if (delta < 2) throw DomainError("sine product needs modulus >= 2, got " + std::to_string(delta));
}

std::uint64_t scan_size(const std::vector<ScanAxis>& axes) {
    std::uint64_t total = 1;
    for (const auto& axis : axes) {
        if (axis.numerators.empty()) return 0;
        total *= axis.numerators.size();
        if (total > kMaxScan) throw LimitError("genus scan exceeds " + std::to_string(kMaxScan) + " tuples");
    }
    return total;
}

long common_order(const std::vector<ScanAxis>& axes) {
    long l = 1;
    for (const auto& axis : axes) l = std::lcm(l, axis.order);
    return l;
}

// Decodes a mixed-radix index, last axis fastest, so index order is lexicographic.
bool decode_if_zero_sum(const std::vector<ScanAxis>& axes, long lcm, std::uint64_t index,
                        std::vector<long>& tuple) {
    long sum = 0;
    for (std::size_t i = axes.size(); i-- > 0;) {
        const auto& axis = axes[i];
        const std::uint64_t radix = axis.numerators.size();
        const long k = axis.numerators[index % radix];
        index /= radix;
        tuple[i] = k;
        sum = (sum + k * (lcm / axis.order)) % lcm;
    }
    return sum == 0;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

BigReal sine_product_serial(long delta, long bits) {
    check_delta(delta);
    const BigReal pi = BigReal::pi(bits);
    SinePartial all = sine_block(delta, 1, delta, bits, pi);
    return all.numerator / all.denominator;
}

BigReal sine_product_parallel(long delta, long bits) {
    check_delta(delta);
    const BigReal pi = BigReal::pi(bits);
    const long blocks = std::min(kSineBlocks, delta - 1);
    const long per_block = (delta - 1 + blocks - 1) / blocks;
    std::vector<SinePartial> partials(blocks, SinePartial{BigReal(1, bits), BigReal(1, bits)});

#pragma omp parallel for schedule(dynamic, 1)
    for (long b = 0; b < blocks; ++b) {
        const long first = 1 + b * per_block;
        const long last = std::min(delta, first + per_block);
        if (first < last) partials[b] = sine_block(delta, first, last, bits, pi);
    }

    BigReal numerator(1, bits), denominator(1, bits);
    for (const auto& part : partials) {
        numerator *= part.numerator;
        denominator *= part.denominator;
    }
    return numerator / denominator;
}

std::vector<std::vector<long>> zero_sum_tuples_serial(const std::vector<ScanAxis>& axes) {
    std::vector<std::vector<long>> out;
    if (scan_size(axes) == 0) return out;
    const long lcm = common_order(axes);
    std::vector<std::size_t> digit(axes.size(), 0);
    std::vector<long> tuple(axes.size());
    while (true) {
        long sum = 0;
        for (std::size_t i = 0; i < axes.size(); ++i) {
            tuple[i] = axes[i].numerators[digit[i]];
            sum = (sum + tuple[i] * (lcm / axes[i].order)) % lcm;
        }
        if (sum == 0) out.push_back(tuple);
        std::size_t i = axes.size();
        while (i > 0) {
            --i;
            if (++digit[i] < axes[i].numerators.size()) break;
            digit[i] = 0;
            if (i == 0) return out;
        }
        if (axes.empty()) return out;
    }
}

std::vector<std::vector<long>> zero_sum_tuples_parallel(const std::vector<ScanAxis>& axes) {
    const std::uint64_t total = scan_size(axes);
    if (total == 0) return {};
    const long lcm = common_order(axes);

    const int threads = max_threads();
    std::vector<std::vector<std::vector<long>>> found(threads);
#pragma omp parallel
    {
#ifdef _OPENMP
        const int t = omp_get_thread_num();
#else
        const int t = 0;
#endif
        std::vector<long> tuple(axes.size());
        // Static schedule: thread t gets a contiguous index range, so
        // concatenating per-thread results in thread order keeps index order.
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
            if (decode_if_zero_sum(axes, lcm, static_cast<std::uint64_t>(i), tuple)) {
                found[t].push_back(tuple);
            }
        }
    }
    std::vector<std::vector<long>> out;
    for (auto& chunk : found) {
        out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
    }
    return out;
}

}  // namespace arithgenus::kernels

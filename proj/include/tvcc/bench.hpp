#ifndef TVCC_BENCH_HPP
#define TVCC_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tvcc/catastrophic.hpp"
#include "tvcc/encoder.hpp"

namespace tvcc {

/// Catastrophic family [1+D^m, (1+D^m)(1+D)], repeated over `period` phases.
PeriodicEncoder bench_family(std::size_t m, std::size_t period = 1);

/// Cost of deciding one family member both ways.
struct BenchRow {
    std::size_t m = 0;
    std::size_t state_bits = 0;
    // minor-GCD path
    std::uint64_t gcd_multiplications = 0;
    std::uint64_t gcd_coefficient_ops = 0;
    double gcd_seconds = 0;
    Verdict gcd_verdict = Verdict::NonCatastrophic;
    // state-graph path
    std::uint64_t oracle_edges = 0;
    std::uint64_t oracle_edges_visited = 0;
    double oracle_seconds = 0;
    Verdict oracle_verdict = Verdict::NonCatastrophic;
};

std::vector<BenchRow> run_bench(std::size_t m_min, std::size_t m_max, std::size_t period = 1);

}  // namespace tvcc

#endif

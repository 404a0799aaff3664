#include "tvcc/bench.hpp"

#include <chrono>

#include "tvcc/error.hpp"
#include "tvcc/oracle.hpp"

namespace tvcc {

PeriodicEncoder bench_family(std::size_t m, std::size_t period) {
    if (period == 0) throw InvalidArgument("period must be positive");
    const Poly base = Poly::from_exponents({0, m});
    const TimeInvariantEncoder constituent(PolyMatrix{{base, base * Poly::from_exponents({0, 1})}});
    return PeriodicEncoder(std::vector<TimeInvariantEncoder>(period, constituent));
}

std::vector<BenchRow> run_bench(std::size_t m_min, std::size_t m_max, std::size_t period) {
    using Clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    for (std::size_t m = m_min; m <= m_max; ++m) {
        const PeriodicEncoder e = bench_family(m, period);
        BenchRow row;
        row.m = m;

        {
            ops::Scope scope;
            const auto start = Clock::now();
            row.gcd_verdict = periodic_check(e).verdict;
            row.gcd_seconds = std::chrono::duration<double>(Clock::now() - start).count();
            row.gcd_multiplications = scope.counters().multiplications;
            row.gcd_coefficient_ops = scope.counters().coefficient_ops;
        }

        const auto start = Clock::now();
        const StateGraph graph = realize(e);
        const OracleResult result = oracle_check(graph);
        row.oracle_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        row.state_bits = graph.state_bits();
        row.oracle_edges = graph.edge_count();
        row.oracle_edges_visited = result.edges_visited;
        row.oracle_verdict = result.verdict;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace tvcc

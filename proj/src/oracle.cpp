#include "tvcc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "tvcc/error.hpp"

namespace tvcc {

namespace {

bool parity(std::uint32_t x) { return (std::popcount(x) & 1) != 0; }

std::string bits_string(std::uint32_t value, std::size_t width) {
    std::string s;
    for (std::size_t i = 0; i < width; ++i) s.push_back(((value >> i) & 1U) != 0 ? '1' : '0');
    return s;
}

StateGraph build_graph(const PeriodicEncoder& base, const Poly& den) {
    const std::size_t p = base.period();
    const std::size_t k = base.inputs();
    const std::size_t n = base.outputs();
    const std::size_t m = base.memory();
    const std::size_t len = std::max(m, *den.degree());
    if (k > 8 || n > 32) throw TooLarge("state graph supports at most 8 inputs and 32 outputs");
    if (k * len > kMaxStateBits)
        throw TooLarge("realization needs " + std::to_string(k * len) + " state bits, the limit is " +
                       std::to_string(kMaxStateBits));

    StateGraph graph(p, k, n, len);
    const std::uint32_t row_mask = len == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << len) - 1);

    std::uint32_t feedback = 0;  // bit s-1 <-> den coefficient of D^s
    for (std::size_t s = 1; s <= len; ++s)
        if (den.coeff(s)) feedback |= std::uint32_t{1} << (s - 1);

    for (std::size_t phase = 0; phase < p; ++phase) {
        const PolyMatrix& g = base.constituent(phase).transfer();
        // For output c: register taps over the whole state, and the undelayed taps over the rows.
        std::vector<std::uint32_t> delayed(n, 0);
        std::vector<std::uint32_t> direct(n, 0);
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t r = 0; r < k; ++r) {
                if (g(r, c).coeff(0)) direct[c] |= std::uint32_t{1} << r;
                for (std::size_t j = 1; j <= m; ++j)
                    if (g(r, c).coeff(j)) delayed[c] |= std::uint32_t{1} << (r * len + j - 1);
            }
        }

        for (std::uint32_t state = 0; state < graph.state_count(); ++state) {
            for (std::uint32_t input = 0; input < (std::uint32_t{1} << k); ++input) {
                std::uint32_t w = 0;
                std::uint32_t next = 0;
                for (std::size_t r = 0; r < k; ++r) {
                    const std::uint32_t reg = len == 0 ? 0 : (state >> (r * len)) & row_mask;
                    const bool bit = (((input >> r) & 1U) != 0) != parity(reg & feedback);
                    if (bit) w |= std::uint32_t{1} << r;
                    if (len != 0) next |= (((reg << 1) | (bit ? 1U : 0U)) & row_mask) << (r * len);
                }
                std::uint32_t out = 0;
                for (std::size_t c = 0; c < n; ++c)
                    if (parity(state & delayed[c]) != parity(w & direct[c])) out |= std::uint32_t{1} << c;
                graph.edge(phase, state, input) = {next, out};
            }
        }
    }
    return graph;
}

// Iterative Tarjan over the zero-output edges among `reachable` nodes.
std::vector<std::uint32_t> zero_output_sccs(const StateGraph& g, const std::vector<bool>& reachable,
                                            std::uint64_t& visited) {
    constexpr std::uint32_t kUnset = ~std::uint32_t{0};
    const std::size_t nodes = g.node_count();
    const std::uint32_t fanout = std::uint32_t{1} << g.inputs();
    std::vector<std::uint32_t> index(nodes, kUnset), low(nodes, 0), comp(nodes, kUnset);
    std::vector<std::uint32_t> stack;
    std::vector<bool> on_stack(nodes, false);
    struct Frame {
        std::uint32_t node;
        std::uint32_t next_input;
    };
    std::vector<Frame> calls;
    std::uint32_t counter = 0;
    std::uint32_t components = 0;

    auto successor = [&](std::uint32_t v, std::uint32_t input) -> std::uint32_t {
        const std::size_t phase = v / g.state_count();
        const auto state = static_cast<std::uint32_t>(v % g.state_count());
        const auto& e = g.edge(phase, state, input);
        if (e.output != 0) return kUnset;
        return static_cast<std::uint32_t>(g.node((phase + 1) % g.phases(), e.next_state));
    };

    for (std::uint32_t root = 0; root < nodes; ++root) {
        if (!reachable[root] || index[root] != kUnset) continue;
        calls.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!calls.empty()) {
            Frame& f = calls.back();
            const std::uint32_t v = f.node;
            if (f.next_input < fanout) {
                const std::uint32_t w = successor(v, f.next_input++);
                ++visited;
                if (w == kUnset) continue;
                if (index[w] == kUnset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    calls.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = components;
                } while (w != v);
                ++components;
            }
            calls.pop_back();
            if (!calls.empty()) low[calls.back().node] = std::min(low[calls.back().node], low[v]);
        }
    }
    return comp;
}

}  // namespace

StateGraph::StateGraph(std::size_t phases, std::size_t inputs, std::size_t outputs, std::size_t register_length)
    : phases_(phases), inputs_(inputs), outputs_(outputs), register_length_(register_length) {
    edges_.resize((phases_ * state_count()) << inputs_);
}

std::string StateGraph::state_string(std::uint32_t state) const {
    if (state_bits() == 0) return "-";
    return bits_string(state, state_bits());
}

StateGraph realize(const PeriodicEncoder& e) { return build_graph(e, Poly::one()); }

StateGraph realize(const RationalPeriodicEncoder& e) { return build_graph(e.base(), e.den()); }

OracleResult oracle_check(const StateGraph& g) {
    OracleResult result;
    const std::size_t nodes = g.node_count();
    const std::uint32_t fanout = std::uint32_t{1} << g.inputs();
    auto next_node = [&](std::size_t v, std::uint32_t input) {
        const std::size_t phase = v / g.state_count();
        const auto state = static_cast<std::uint32_t>(v % g.state_count());
        return g.node((phase + 1) % g.phases(), g.edge(phase, state, input).next_state);
    };

    std::vector<bool> reachable(nodes, false);
    std::deque<std::size_t> queue{g.node(0, 0)};
    reachable[g.node(0, 0)] = true;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::uint32_t input = 0; input < fanout; ++input) {
            ++result.edges_visited;
            const std::size_t w = next_node(v, input);
            if (!reachable[w]) {
                reachable[w] = true;
                queue.push_back(w);
            }
        }
    }

    const auto comp = zero_output_sccs(g, reachable, result.edges_visited);

    for (std::size_t v = 0; v < nodes; ++v) {
        if (!reachable[v]) continue;
        const std::size_t phase = v / g.state_count();
        const auto state = static_cast<std::uint32_t>(v % g.state_count());
        for (std::uint32_t input = 1; input < fanout; ++input) {
            const auto& e = g.edge(phase, state, input);
            const std::size_t w = g.node((phase + 1) % g.phases(), e.next_state);
            if (e.output != 0 || comp[w] != comp[v]) continue;

            // Close the cycle with a shortest zero-output path w -> v inside the component.
            std::vector<std::size_t> parent(nodes, nodes);
            std::vector<std::uint32_t> via(nodes, 0);
            std::deque<std::size_t> bfs{w};
            parent[w] = w;
            while (!bfs.empty() && parent[v] == nodes) {
                const std::size_t x = bfs.front();
                bfs.pop_front();
                const std::size_t xp = x / g.state_count();
                const auto xs = static_cast<std::uint32_t>(x % g.state_count());
                for (std::uint32_t in = 0; in < fanout; ++in) {
                    const auto& xe = g.edge(xp, xs, in);
                    const std::size_t y = g.node((xp + 1) % g.phases(), xe.next_state);
                    if (xe.output != 0 || comp[y] != comp[v] || parent[y] != nodes) continue;
                    parent[y] = x;
                    via[y] = in;
                    bfs.push_back(y);
                }
            }

            WitnessCycle cycle;
            cycle.steps.push_back({phase, state, input});
            std::vector<WitnessStep> tail;
            for (std::size_t y = v; y != w; y = parent[y]) {
                const std::size_t x = parent[y];
                tail.push_back({x / g.state_count(), static_cast<std::uint32_t>(x % g.state_count()), via[y]});
            }
            cycle.steps.insert(cycle.steps.end(), tail.rbegin(), tail.rend());

            result.verdict = Verdict::Catastrophic;
            result.witness = std::move(cycle);
            return result;
        }
    }
    return result;
}

BitStream simulate(const StateGraph& g, const BitStream& input) {
    if (input.width() != g.inputs()) throw ShapeMismatch("input width does not match the state graph");
    BitStream out(g.outputs(), input.size());
    std::uint32_t state = 0;
    for (std::size_t t = 0; t < input.size(); ++t) {
        std::uint32_t in = 0;
        for (std::size_t r = 0; r < g.inputs(); ++r)
            if (input.bit(t, r)) in |= std::uint32_t{1} << r;
        const auto& e = g.edge(t % g.phases(), state, in);
        for (std::size_t c = 0; c < g.outputs(); ++c) out.set(t, c, ((e.output >> c) & 1U) != 0);
        state = e.next_state;
    }
    return out;
}

std::string format_witness(const StateGraph& g, const WitnessCycle& cycle) {
    std::string s;
    for (const auto& step : cycle.steps) {
        const auto& e = g.edge(step.phase, step.state, step.input);
        s += std::to_string(step.phase) + ' ' + g.state_string(step.state) + ' ' + bits_string(step.input, g.inputs()) +
             " -> " + g.state_string(e.next_state) + " / " + bits_string(e.output, g.outputs()) + '\n';
    }
    return s;
}

}  // namespace tvcc

#ifndef TVCC_ORACLE_HPP
#define TVCC_ORACLE_HPP

/*
 * Brute-force catastrophe test on the explicit state-transition graph.
 *
 * Each input row is realized as a shift register holding the last M values of
 * w = u / den (controller canonical form; den = 1 for feedforward encoders),
 * where M = max(memory, deg den). A node is (phase, register contents) with
 * phase = t mod p, so the graph has p * 2^state_bits nodes and 2^k edges out of
 * every node.
 *
 * The encoder is catastrophic iff some cycle reachable from the zero state has
 * zero output weight and positive input weight.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tvcc/catastrophic.hpp"
#include "tvcc/encoder.hpp"

namespace tvcc {

inline constexpr std::size_t kMaxStateBits = 20;

class StateGraph {
   public:
    struct Edge {
        std::uint32_t next_state;
        std::uint32_t output;  // bit c is output c
    };

    StateGraph(std::size_t phases, std::size_t inputs, std::size_t outputs, std::size_t register_length);

    std::size_t phases() const noexcept { return phases_; }
    std::size_t inputs() const noexcept { return inputs_; }
    std::size_t outputs() const noexcept { return outputs_; }
    /// Register cells per input row.
    std::size_t register_length() const noexcept { return register_length_; }
    std::size_t state_bits() const noexcept { return inputs_ * register_length_; }
    std::size_t state_count() const noexcept { return std::size_t{1} << state_bits(); }
    std::size_t node_count() const noexcept { return phases_ * state_count(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::size_t node(std::size_t phase, std::uint32_t state) const noexcept { return phase * state_count() + state; }

    const Edge& edge(std::size_t phase, std::uint32_t state, std::uint32_t input) const {
        return edges_[(node(phase, state) << inputs_) | input];
    }
    Edge& edge(std::size_t phase, std::uint32_t state, std::uint32_t input) {
        return edges_[(node(phase, state) << inputs_) | input];
    }

    /// Register cells row by row, most recent first: "10" is w[t-1]=1, w[t-2]=0. "-" when empty.
    std::string state_string(std::uint32_t state) const;

   private:
    std::size_t phases_;
    std::size_t inputs_;
    std::size_t outputs_;
    std::size_t register_length_;
    std::vector<Edge> edges_;
};

/// Throws TooLarge above kMaxStateBits state bits or more than 8 inputs / 32 outputs.
StateGraph realize(const PeriodicEncoder& e);
StateGraph realize(const RationalPeriodicEncoder& e);

struct WitnessStep {
    std::size_t phase;
    std::uint32_t state;
    std::uint32_t input;
};

/// Closed walk in the graph: the last step's edge returns to the first step's node.
struct WitnessCycle {
    std::vector<WitnessStep> steps;
};

struct OracleResult {
    Verdict verdict = Verdict::NonCatastrophic;
    std::optional<WitnessCycle> witness;
    std::uint64_t edges_visited = 0;
};

OracleResult oracle_check(const StateGraph& g);

/// Walks the graph from phase 0 and the zero state.
BitStream simulate(const StateGraph& g, const BitStream& input);

/// One line per edge: `phase state input -> next_state / output`.
std::string format_witness(const StateGraph& g, const WitnessCycle& cycle);

}  // namespace tvcc

#endif

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trisynth/gates.hpp"
#include "trisynth/matrix.hpp"

namespace trisynth {

// Basis-index convention: wire 0 is the most significant trit, so basis
// index i on n wires decodes to trits (t_0, ..., t_{n-1}) with
// i = Σ t_w · 3^{n-1-w}.
std::size_t pow3(int n);
std::vector<int> trits_of(std::size_t index, int n_wires);
std::size_t index_of(const std::vector<int>& trits);

/**
 * ControlledGate: a single-qutrit base applied on the target wire exactly
 * when every (wire, value) control matches; identity otherwise.  An empty
 * control set is an unconditional single-qutrit gate.
 */
struct ControlledGate {
    std::vector<std::pair<int, int>> controls;  // (wire, trit value), wires distinct
    int target = 0;
    Matrix<LocalOmega> base;                    // 3×3
    std::optional<GateWord> word;

    static ControlledGate plain(int target, Matrix<LocalOmega> base,
                                std::optional<GateWord> word = std::nullopt) {
        ControlledGate g;
        g.target = target;
        g.base = std::move(base);
        g.word = std::move(word);
        return g;
    }
};

void validate_gate(const ControlledGate& g, int n_wires);

// Exact 3^n × 3^n matrix of the gate.
Matrix<LocalOmega> controlled_matrix(const ControlledGate& g, int n_wires);

// In-place M ← controlled_matrix(g)·M without materializing the gate matrix.
void apply_controlled_left(const ControlledGate& g, int n_wires, Matrix<LocalOmega>& m);

// Rewrites the gate so every control sits at value 2, sandwiching each
// non-|2⟩ control wire with uncontrolled X conjugations.  The returned list
// is in application order and multiplies exactly to the input gate.
std::vector<ControlledGate> normalize_controls(const ControlledGate& g);

/**
 * Circuit: an ordered gate list on n_wires qutrits.  gates[0] acts first, so
 * the circuit matrix is the product of gate matrices in reverse list order.
 */
struct Circuit {
    int n_wires = 1;
    int ancillas = 0;
    std::vector<ControlledGate> gates;

    void push(ControlledGate g) { gates.push_back(std::move(g)); }
    void push_all(std::vector<ControlledGate> gs) {
        for (auto& g : gs) gates.push_back(std::move(g));
    }
};

Matrix<LocalOmega> circuit_matrix(const Circuit& c);

// One gate per line, stable across runs; meant for diffing.
std::string circuit_text(const Circuit& c);

}  // namespace trisynth

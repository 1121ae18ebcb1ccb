#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trisynth/gates.hpp"
#include "trisynth/matrix.hpp"

namespace trisynth {

/**
 * LevelMatrix: a 1-, 2- or 3-level unitary — a small base block planted on a
 * tuple of coordinates, identity on the rest.  The tuple order is
 * significant: embedding puts base(r, c) at (indices[r], indices[c]).
 */
struct LevelMatrix {
    Matrix<LocalOmega> base;            // level × level
    std::vector<std::size_t> indices;   // distinct row indices, size = level
    std::optional<GateWord> word;       // symbolic provenance, 3-level only

    int level() const { return static_cast<int>(base.rows()); }
};

LevelMatrix make_level1(const LocalOmega& phase, std::size_t j,
                        std::optional<GateWord> word = std::nullopt);
LevelMatrix make_level2(const Matrix<LocalOmega>& base, std::size_t j, std::size_t l,
                        std::optional<GateWord> word = std::nullopt);
LevelMatrix make_level3(const Matrix<LocalOmega>& base, std::size_t j1, std::size_t j2,
                        std::size_t j3, std::optional<GateWord> word = std::nullopt);

// Checks the index tuple against the target dimension m.
void validate_level(const LevelMatrix& lm, std::size_t m);

// The m×m unitary acting as base on the listed coordinates.
Matrix<LocalOmega> embed_level(const LevelMatrix& lm, std::size_t m);

// In-place W ← embed(lm)·W and u ← embed(lm)·u, touching only the listed rows.
void apply_level_left(const LevelMatrix& lm, Matrix<LocalOmega>& w);
void apply_level_left(const LevelMatrix& lm, Vector<LocalOmega>& u);

// Inverse within the same level structure (base†, inverted word).
LevelMatrix level_inverse(const LevelMatrix& lm);

LevelMatrix shift_indices(LevelMatrix lm, std::size_t offset);

}  // namespace trisynth

#include "trisynth/level.hpp"

#include <algorithm>

namespace trisynth {

LevelMatrix make_level1(const LocalOmega& phase, std::size_t j,
                        std::optional<GateWord> word) {
    LevelMatrix lm;
    lm.base = Matrix<LocalOmega>(1, 1);
    lm.base.at(0, 0) = phase;
    lm.indices = {j};
    lm.word = std::move(word);
    return lm;
}

LevelMatrix make_level2(const Matrix<LocalOmega>& base, std::size_t j, std::size_t l,
                        std::optional<GateWord> word) {
    LevelMatrix lm;
    lm.base = base;
    lm.indices = {j, l};
    lm.word = std::move(word);
    return lm;
}

LevelMatrix make_level3(const Matrix<LocalOmega>& base, std::size_t j1, std::size_t j2,
                        std::size_t j3, std::optional<GateWord> word) {
    LevelMatrix lm;
    lm.base = base;
    lm.indices = {j1, j2, j3};
    lm.word = std::move(word);
    return lm;
}

void validate_level(const LevelMatrix& lm, std::size_t m) {
    if (!lm.base.square() || lm.base.rows() < 1 || lm.base.rows() > 3)
        throw DimensionError("level matrix base must be 1x1, 2x2 or 3x3");
    if (lm.indices.size() != lm.base.rows())
        throw DimensionError("level matrix index count does not match base size");
    for (std::size_t i = 0; i < lm.indices.size(); ++i) {
        if (lm.indices[i] >= m) throw IndexError("level matrix index out of range");
        for (std::size_t j = i + 1; j < lm.indices.size(); ++j)
            if (lm.indices[i] == lm.indices[j])
                throw IndexError("level matrix index duplicated");
    }
}

Matrix<LocalOmega> embed_level(const LevelMatrix& lm, std::size_t m) {
    validate_level(lm, m);
    Matrix<LocalOmega> r = Matrix<LocalOmega>::identity(m);
    const std::size_t lvl = lm.indices.size();
    for (std::size_t i = 0; i < lvl; ++i) {
        r.at(lm.indices[i], lm.indices[i]) = lm.base.at(i, i);
        for (std::size_t j = 0; j < lvl; ++j)
            if (i != j) r.at(lm.indices[i], lm.indices[j]) = lm.base.at(i, j);
    }
    return r;
}

void apply_level_left(const LevelMatrix& lm, Matrix<LocalOmega>& w) {
    validate_level(lm, w.rows());
    const std::size_t lvl = lm.indices.size();
    std::vector<LocalOmega> old(lvl);
    for (std::size_t c = 0; c < w.cols(); ++c) {
        for (std::size_t i = 0; i < lvl; ++i) old[i] = w.at(lm.indices[i], c);
        for (std::size_t i = 0; i < lvl; ++i) {
            LocalOmega acc = LocalOmega::zero();
            for (std::size_t s = 0; s < lvl; ++s) {
                if (lm.base.at(i, s).is_zero() || old[s].is_zero()) continue;
                acc = acc + lm.base.at(i, s) * old[s];
            }
            w.at(lm.indices[i], c) = acc;
        }
    }
}

void apply_level_left(const LevelMatrix& lm, Vector<LocalOmega>& u) {
    validate_level(lm, u.dim());
    const std::size_t lvl = lm.indices.size();
    std::vector<LocalOmega> old(lvl);
    for (std::size_t i = 0; i < lvl; ++i) old[i] = u.at(lm.indices[i]);
    for (std::size_t i = 0; i < lvl; ++i) {
        LocalOmega acc = LocalOmega::zero();
        for (std::size_t s = 0; s < lvl; ++s) {
            if (lm.base.at(i, s).is_zero() || old[s].is_zero()) continue;
            acc = acc + lm.base.at(i, s) * old[s];
        }
        u.at(lm.indices[i]) = acc;
    }
}

LevelMatrix level_inverse(const LevelMatrix& lm) {
    LevelMatrix r;
    r.base = lm.base.dagger();
    r.indices = lm.indices;
    if (lm.word) r.word = lm.word->inverse();
    return r;
}

LevelMatrix shift_indices(LevelMatrix lm, std::size_t offset) {
    for (auto& i : lm.indices) i += offset;
    return lm;
}

}  // namespace trisynth

#include "trisynth/circuit.hpp"

#include <algorithm>
#include <sstream>

namespace trisynth {

std::size_t pow3(int n) {
    std::size_t r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

std::vector<int> trits_of(std::size_t index, int n_wires) {
    std::vector<int> t(static_cast<std::size_t>(n_wires));
    for (int w = n_wires - 1; w >= 0; --w) {
        t[static_cast<std::size_t>(w)] = static_cast<int>(index % 3);
        index /= 3;
    }
    return t;
}

std::size_t index_of(const std::vector<int>& trits) {
    std::size_t i = 0;
    for (int t : trits) i = i * 3 + static_cast<std::size_t>(t);
    return i;
}

void validate_gate(const ControlledGate& g, int n_wires) {
    if (g.target < 0 || g.target >= n_wires)
        throw WireError("gate target wire out of range");
    if (!(g.base.rows() == 3 && g.base.cols() == 3))
        throw DimensionError("controlled gate base must be 3x3");
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
        const auto& [w, v] = g.controls[i];
        if (w < 0 || w >= n_wires) throw WireError("control wire out of range");
        if (w == g.target) throw WireError("control wire collides with target");
        if (v < 0 || v > 2) throw WireError("control value must be a trit");
        for (std::size_t j = i + 1; j < g.controls.size(); ++j)
            if (g.controls[j].first == w) throw WireError("duplicate control wire");
    }
}

namespace {

// Stride of the target wire in the basis index.
std::size_t target_stride(int target, int n_wires) {
    return pow3(n_wires - 1 - target);
}

bool controls_match(const ControlledGate& g, const std::vector<int>& trits) {
    for (const auto& [w, v] : g.controls)
        if (trits[static_cast<std::size_t>(w)] != v) return false;
    return true;
}

}  // namespace

Matrix<LocalOmega> controlled_matrix(const ControlledGate& g, int n_wires) {
    validate_gate(g, n_wires);
    const std::size_t dim = pow3(n_wires);
    const std::size_t stride = target_stride(g.target, n_wires);
    Matrix<LocalOmega> m(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::vector<int> t = trits_of(c, n_wires);
        if (!controls_match(g, t)) {
            m.at(c, c) = LocalOmega::one();
            continue;
        }
        const int y = t[static_cast<std::size_t>(g.target)];
        const std::size_t base_index = c - static_cast<std::size_t>(y) * stride;
        for (std::size_t yy = 0; yy < 3; ++yy)
            m.at(base_index + yy * stride, c) =
                g.base.at(yy, static_cast<std::size_t>(y));
    }
    return m;
}

void apply_controlled_left(const ControlledGate& g, int n_wires, Matrix<LocalOmega>& m) {
    validate_gate(g, n_wires);
    const std::size_t dim = pow3(n_wires);
    if (m.rows() != dim) throw DimensionError("apply_controlled_left: shape mismatch");
    const std::size_t stride = target_stride(g.target, n_wires);
    std::array<std::vector<LocalOmega>, 3> old;
    for (std::size_t r = 0; r < dim; ++r) {
        std::vector<int> t = trits_of(r, n_wires);
        if (t[static_cast<std::size_t>(g.target)] != 0) continue;
        if (!controls_match(g, t)) continue;
        for (std::size_t y = 0; y < 3; ++y) {
            old[y].assign(m.cols(), LocalOmega::zero());
            for (std::size_t c = 0; c < m.cols(); ++c) old[y][c] = m.at(r + y * stride, c);
        }
        for (std::size_t y = 0; y < 3; ++y)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                LocalOmega acc = LocalOmega::zero();
                for (std::size_t s = 0; s < 3; ++s) {
                    if (g.base.at(y, s).is_zero() || old[s][c].is_zero()) continue;
                    acc = acc + g.base.at(y, s) * old[s][c];
                }
                m.at(r + y * stride, c) = acc;
            }
    }
}

std::vector<ControlledGate> normalize_controls(const ControlledGate& g) {
    std::vector<ControlledGate> out;
    std::vector<std::pair<int, int>> fixups;  // (wire, original value != 2)
    for (const auto& [w, v] : g.controls)
        if (v != 2) fixups.emplace_back(w, v);
    std::sort(fixups.begin(), fixups.end());

    if (fixups.empty()) {
        out.push_back(g);
        return out;
    }

    GateAtom x_atom;
    x_atom.kind = Atom::X;

    for (const auto& [w, v] : fixups) {
        // X^{2-v} carries |v⟩ to |2⟩ on the control wire.
        x_atom.exp = (2 - v + 3) % 3;
        out.push_back(ControlledGate::plain(w, atom_matrix_omega(x_atom),
                                            GateWord::single(Atom::X, x_atom.exp)));
    }

    ControlledGate core = g;
    for (auto& [w, v] : core.controls) v = 2;
    out.push_back(std::move(core));

    for (auto it = fixups.rbegin(); it != fixups.rend(); ++it) {
        x_atom.exp = (it->second + 1) % 3;  // inverse of X^{2-v}
        out.push_back(ControlledGate::plain(it->first, atom_matrix_omega(x_atom),
                                            GateWord::single(Atom::X, x_atom.exp)));
    }
    return out;
}

Matrix<LocalOmega> circuit_matrix(const Circuit& c) {
    Matrix<LocalOmega> m = Matrix<LocalOmega>::identity(pow3(c.n_wires));
    for (const auto& g : c.gates) apply_controlled_left(g, c.n_wires, m);
    return m;
}

std::string circuit_text(const Circuit& c) {
    std::ostringstream os;
    os << "wires " << c.n_wires << " ancillas " << c.ancillas << "\n";
    for (const auto& g : c.gates) {
        if (!g.controls.empty()) {
            os << "[";
            for (std::size_t i = 0; i < g.controls.size(); ++i) {
                if (i) os << " ";
                os << "w" << g.controls[i].first << "@" << g.controls[i].second;
            }
            os << "] ";
        }
        os << "w" << g.target << ": " << (g.word ? g.word->str() : "<matrix>") << "\n";
    }
    return os.str();
}

}  // namespace trisynth

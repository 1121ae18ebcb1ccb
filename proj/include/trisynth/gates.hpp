#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trisynth/matrix.hpp"

namespace trisynth {

// Single-qutrit gate alphabet.  P01/P02/P12 are the transposition
// permutation gates (X itself is the 3-cycle); W is the global phase ω·I;
// D carries three ζ-exponents.
enum class Atom { H, S, T, R, X, P01, P02, P12, W, D };

struct GateAtom {
    Atom kind = Atom::H;
    int exp = 1;                   // normalized to [1, order) on construction
    std::array<int, 3> phases{};   // ζ-exponents, D only, each in [0, 9)
};

/**
 * GateWord: an ordered word over the single-qutrit alphabet, read as a
 * matrix product left to right ("H.S^2" is the matrix H·S²).  Kept alongside
 * exact matrices as symbolic provenance; verification never trusts the word,
 * it always goes through the matrix.
 */
class GateWord {
public:
    GateWord() = default;

    static GateWord single(Atom kind, int exp = 1) {
        GateWord w;
        w.append(kind, exp);
        return w;
    }
    static GateWord diag_zeta(const std::array<int, 3>& phases) {
        GateWord w;
        GateAtom a;
        a.kind = Atom::D;
        a.phases = {((phases[0] % 9) + 9) % 9, ((phases[1] % 9) + 9) % 9,
                    ((phases[2] % 9) + 9) % 9};
        if (a.phases != std::array<int, 3>{0, 0, 0}) w._atoms.push_back(a);
        return w;
    }

    GateWord& append(Atom kind, int exp = 1);
    GateWord& append(const GateWord& other);

    const std::vector<GateAtom>& atoms() const { return _atoms; }
    bool empty() const { return _atoms.empty(); }

    // True when the word leaves Z[1/3, ω]: any T, or any D with an exponent
    // not divisible by 3.
    bool requires_zeta() const;

    GateWord inverse() const;

    std::string str() const;
    static GateWord parse(const std::string& text);

    bool operator==(const GateWord& o) const;

private:
    std::vector<GateAtom> _atoms;
};

// Exact 3×3 matrix of a single atom / word over the requested ring.
// Requesting the ω-ring for a ζ-only word throws RingError.
Matrix<LocalOmega> atom_matrix_omega(const GateAtom& a);
Matrix<LocalZeta> atom_matrix_zeta(const GateAtom& a);

template <typename R>
Matrix<R> gate_matrix(const GateWord& w);

template <>
Matrix<LocalOmega> gate_matrix<LocalOmega>(const GateWord& w);
template <>
Matrix<LocalZeta> gate_matrix<LocalZeta>(const GateWord& w);

}  // namespace trisynth

#include "trisynth/gates.hpp"

#include <sstream>

namespace trisynth {

namespace {

int atom_order(Atom kind) {
    switch (kind) {
        case Atom::H: return 4;
        case Atom::S: return 3;
        case Atom::T: return 9;
        case Atom::R: return 2;
        case Atom::X: return 3;
        case Atom::P01:
        case Atom::P02:
        case Atom::P12: return 2;
        case Atom::W: return 3;
        case Atom::D: return 1;  // unused; D is normalized componentwise
    }
    return 1;
}

const char* atom_name(Atom kind) {
    switch (kind) {
        case Atom::H: return "H";
        case Atom::S: return "S";
        case Atom::T: return "T";
        case Atom::R: return "R";
        case Atom::X: return "X";
        case Atom::P01: return "P01";
        case Atom::P02: return "P02";
        case Atom::P12: return "P12";
        case Atom::W: return "W";
        case Atom::D: return "D";
    }
    return "?";
}

Matrix<LocalOmega> diag_omega(const LocalOmega& d0, const LocalOmega& d1,
                              const LocalOmega& d2) {
    Matrix<LocalOmega> m(3, 3);
    m.at(0, 0) = d0;
    m.at(1, 1) = d1;
    m.at(2, 2) = d2;
    return m;
}

Matrix<LocalOmega> permutation3(int img0, int img1, int img2) {
    Matrix<LocalOmega> m(3, 3);
    m.at(static_cast<std::size_t>(img0), 0) = LocalOmega::one();
    m.at(static_cast<std::size_t>(img1), 1) = LocalOmega::one();
    m.at(static_cast<std::size_t>(img2), 2) = LocalOmega::one();
    return m;
}

template <typename R>
Matrix<R> matrix_power(Matrix<R> base, int exp) {
    Matrix<R> r = Matrix<R>::identity(3);
    for (int i = 0; i < exp; ++i) r = r * base;
    return r;
}

}  // namespace

Matrix<LocalOmega> atom_matrix_omega(const GateAtom& a) {
    Matrix<LocalOmega> base(3, 3);
    switch (a.kind) {
        case Atom::H: {
            // H = (ω²/χ) · Vandermonde(1, ω, ω²); ω²/χ is 1/√−3.
            static const int e[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    base.at(i, j) = LocalOmega(ZOmega::omega_pow(2 + e[i][j]), 1);
            break;
        }
        case Atom::S:
            base = diag_omega(LocalOmega::one(), LocalOmega::one(),
                              LocalOmega::from(ZOmega::omega()));
            break;
        case Atom::R:
            base = diag_omega(LocalOmega::one(), LocalOmega::one(), LocalOmega(-1));
            break;
        case Atom::X:
            base = permutation3(1, 2, 0);  // |y⟩ ↦ |y+1 mod 3⟩
            break;
        case Atom::P01:
            base = permutation3(1, 0, 2);
            break;
        case Atom::P02:
            base = permutation3(2, 1, 0);
            break;
        case Atom::P12:
            base = permutation3(0, 2, 1);
            break;
        case Atom::W: {
            LocalOmega w = LocalOmega::from(ZOmega::omega());
            base = diag_omega(w, w, w);
            break;
        }
        case Atom::T:
            throw RingError("T gate has no matrix over Z[1/3, ω]");
        case Atom::D: {
            std::array<LocalOmega, 3> d;
            for (int i = 0; i < 3; ++i) {
                if (a.phases[static_cast<std::size_t>(i)] % 3 != 0)
                    throw RingError("D gate with ζ-exponent not divisible by 3 "
                                    "has no matrix over Z[1/3, ω]");
                d[static_cast<std::size_t>(i)] = LocalOmega::from(
                    ZOmega::omega_pow(a.phases[static_cast<std::size_t>(i)] / 3));
            }
            return diag_omega(d[0], d[1], d[2]);
        }
    }
    return matrix_power(base, a.exp);
}

Matrix<LocalZeta> atom_matrix_zeta(const GateAtom& a) {
    switch (a.kind) {
        case Atom::T: {
            Matrix<LocalZeta> m(3, 3);
            m.at(0, 0) = LocalZeta::one();
            m.at(1, 1) = LocalZeta::zeta_pow(1);
            m.at(2, 2) = LocalZeta::zeta_pow(-1);
            return matrix_power(m, a.exp);
        }
        case Atom::D: {
            Matrix<LocalZeta> m(3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                m.at(i, i) = LocalZeta::zeta_pow(a.phases[i]);
            return m;
        }
        default:
            return to_zeta_ring(atom_matrix_omega(a));
    }
}

GateWord& GateWord::append(Atom kind, int exp) {
    if (kind == Atom::D) throw ParseError("use diag_zeta to build D atoms");
    int order = atom_order(kind);
    exp = ((exp % order) + order) % order;
    if (exp == 0) return *this;
    GateAtom a;
    a.kind = kind;
    a.exp = exp;
    _atoms.push_back(a);
    return *this;
}

GateWord& GateWord::append(const GateWord& other) {
    _atoms.insert(_atoms.end(), other._atoms.begin(), other._atoms.end());
    return *this;
}

bool GateWord::requires_zeta() const {
    for (const auto& a : _atoms) {
        if (a.kind == Atom::T) return true;
        if (a.kind == Atom::D)
            for (int p : a.phases)
                if (p % 3 != 0) return true;
    }
    return false;
}

GateWord GateWord::inverse() const {
    GateWord w;
    for (auto it = _atoms.rbegin(); it != _atoms.rend(); ++it) {
        if (it->kind == Atom::D) {
            GateAtom a = *it;
            for (auto& p : a.phases) p = (9 - p) % 9;
            if (a.phases != std::array<int, 3>{0, 0, 0}) w._atoms.push_back(a);
        } else {
            w.append(it->kind, atom_order(it->kind) - it->exp);
        }
    }
    return w;
}

std::string GateWord::str() const {
    if (_atoms.empty()) return "I";
    std::ostringstream os;
    bool first = true;
    for (const auto& a : _atoms) {
        if (!first) os << ".";
        first = false;
        os << atom_name(a.kind);
        if (a.kind == Atom::D)
            os << "[" << a.phases[0] << "," << a.phases[1] << "," << a.phases[2] << "]";
        else if (a.exp != 1)
            os << "^" << a.exp;
    }
    return os.str();
}

bool GateWord::operator==(const GateWord& o) const {
    if (_atoms.size() != o._atoms.size()) return false;
    for (std::size_t i = 0; i < _atoms.size(); ++i) {
        if (_atoms[i].kind != o._atoms[i].kind || _atoms[i].exp != o._atoms[i].exp ||
            _atoms[i].phases != o._atoms[i].phases)
            return false;
    }
    return true;
}

GateWord GateWord::parse(const std::string& text) {
    GateWord w;
    if (text.empty() || text == "I") return w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t dot = text.find('.', pos);
        std::string tok = text.substr(pos, dot == std::string::npos ? std::string::npos
                                                                    : dot - pos);
        pos = dot == std::string::npos ? text.size() : dot + 1;
        if (tok.empty()) throw ParseError("empty atom in gate word");

        // split off ^exp
        int exp = 1;
        std::size_t caret = tok.find('^');
        if (caret != std::string::npos) {
            try {
                exp = std::stoi(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw ParseError("bad exponent in gate word: '" + tok + "'");
            }
            tok = tok.substr(0, caret);
        }

        if (tok.size() > 1 && tok[0] == 'D') {
            if (tok.size() < 3 || tok[1] != '[' || tok.back() != ']')
                throw ParseError("bad D atom: '" + tok + "'");
            std::array<int, 3> ph{};
            std::istringstream is(tok.substr(2, tok.size() - 3));
            std::string part;
            for (int i = 0; i < 3; ++i) {
                if (!std::getline(is, part, ','))
                    throw ParseError("D atom needs three exponents: '" + tok + "'");
                try {
                    ph[static_cast<std::size_t>(i)] = std::stoi(part);
                } catch (const std::exception&) {
                    throw ParseError("bad D exponent: '" + part + "'");
                }
            }
            for (auto& p : ph) p = ((p * exp) % 9 + 9) % 9;
            w.append(GateWord::diag_zeta(ph));
        } else if (tok == "H") {
            w.append(Atom::H, exp);
        } else if (tok == "S") {
            w.append(Atom::S, exp);
        } else if (tok == "T") {
            w.append(Atom::T, exp);
        } else if (tok == "R") {
            w.append(Atom::R, exp);
        } else if (tok == "X") {
            w.append(Atom::X, exp);
        } else if (tok == "P01") {
            w.append(Atom::P01, exp);
        } else if (tok == "P02") {
            w.append(Atom::P02, exp);
        } else if (tok == "P12") {
            w.append(Atom::P12, exp);
        } else if (tok == "W") {
            w.append(Atom::W, exp);
        } else {
            throw ParseError("unknown gate atom: '" + tok + "'");
        }
    }
    return w;
}

template <>
Matrix<LocalOmega> gate_matrix<LocalOmega>(const GateWord& w) {
    Matrix<LocalOmega> m = Matrix<LocalOmega>::identity(3);
    for (const auto& a : w.atoms()) m = m * atom_matrix_omega(a);
    return m;
}

template <>
Matrix<LocalZeta> gate_matrix<LocalZeta>(const GateWord& w) {
    Matrix<LocalZeta> m = Matrix<LocalZeta>::identity(3);
    for (const auto& a : w.atoms()) m = m * atom_matrix_zeta(a);
    return m;
}

}  // namespace trisynth

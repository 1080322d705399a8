#pragma once

#include <vector>

namespace eliminant {

// Exponent vector with cached total degree. Length is fixed by the ring.
struct Monomial {
    std::vector<int> e;
    int deg = 0;

    static Monomial one(int nvars) {
        Monomial m;
        m.e.assign(nvars, 0);
        return m;
    }
    static Monomial var(int idx, int nvars, int power = 1) {
        Monomial m = one(nvars);
        m.e[idx] = power;
        m.deg = power;
        return m;
    }
    static Monomial of(std::vector<int> exps) {
        Monomial m;
        m.deg = 0;
        for (int x : exps) m.deg += x;
        m.e = std::move(exps);
        return m;
    }

    int nvars() const { return static_cast<int>(e.size()); }
    bool is_one() const { return deg == 0; }

    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial mul(const Monomial& b) const {
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += b.e[i];
        r.deg += b.deg;
        return r;
    }
    // caller guarantees divisibility
    Monomial div(const Monomial& b) const {
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= b.e[i];
        r.deg -= b.deg;
        return r;
    }
    Monomial lcm(const Monomial& b) const {
        Monomial r = *this;
        r.deg = 0;
        for (size_t i = 0; i < e.size(); ++i) {
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
            r.deg += r.e[i];
        }
        return r;
    }
    bool coprime(const Monomial& b) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }
    bool operator==(const Monomial& b) const { return e == b.e; }
};

struct MonomialOrder {
    enum class Kind { Lex, Grevlex, Block, Weighted };
    Kind kind = Kind::Grevlex;
    // Block: variables [0, block_split) form the dominant (eliminated) block,
    // grevlex within each block.
    int block_split = 0;
    // Weighted: weighted total degree first, grevlex tiebreak.
    std::vector<long> weights;

    static MonomialOrder lex() { return {Kind::Lex, 0, {}}; }
    static MonomialOrder grevlex() { return {Kind::Grevlex, 0, {}}; }
    static MonomialOrder block(int split) { return {Kind::Block, split, {}}; }
    static MonomialOrder weighted(std::vector<long> w) {
        return {Kind::Weighted, 0, std::move(w)};
    }

    // >0 if a > b, 0 if equal, <0 if a < b
    int cmp(const Monomial& a, const Monomial& b) const;
};

}  // namespace eliminant

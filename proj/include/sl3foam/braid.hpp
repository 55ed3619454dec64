// Braid words, closures, classical invariants and transverse Markov moves.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl3foam {

struct BraidWord {
    int strands = 1;                 // b >= 1
    std::vector<int> letters;        // letter k encodes sigma_{|k|}^{sign k}, 1 <= |k| <= b-1

    bool valid() const {
        if (strands < 1) return false;
        for (int l : letters)
            if (l == 0 || std::abs(l) > strands - 1) return false;
        return true;
    }
    int writhe() const {
        int w = 0;
        for (int l : letters) w += (l > 0 ? 1 : -1);
        return w;
    }
    int self_linking() const { return writhe() - strands; }
    BraidWord mirror() const {
        BraidWord m = *this;
        for (int& l : m.letters) l = -l;
        return m;
    }
    // number of link components of the closure
    int components() const {
        std::vector<int> perm(strands);
        std::iota(perm.begin(), perm.end(), 0);
        for (int l : letters) std::swap(perm[std::abs(l) - 1], perm[std::abs(l)]);
        std::vector<bool> seen(strands, false);
        int c = 0;
        for (int i = 0; i < strands; ++i) {
            if (seen[i]) continue;
            ++c;
            for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
        }
        return c;
    }
};

// Closure diagram summary: per-crossing data of the annular closure.
struct LinkDiagram {
    int strands = 1;
    std::vector<int> letters;
    int n_pos = 0, n_neg = 0;

    static LinkDiagram closure(const BraidWord& b) {
        LinkDiagram d;
        d.strands = b.strands;
        d.letters = b.letters;
        for (int l : b.letters) (l > 0 ? d.n_pos : d.n_neg)++;
        return d;
    }
    int crossings() const { return static_cast<int>(letters.size()); }
    int writhe() const { return n_pos - n_neg; }
};

// ------------------------------------------------------------- Markov moves
struct MarkovMove {
    enum Kind {
        Conjugate,        // w -> sigma_i^{-s} w sigma_i^{s}; data: i (generator), s (+1/-1)
        BraidRelation,    // [i, j, i] -> [j, i, j] at position p (|i-j| = 1, equal signs)
        Commute,          // [i, j] -> [j, i] at position p (||i|-|j|| >= 2)
        CancelPair,       // delete [i, -i] at position p
        InsertPair,       // insert [i, -i] at position p
        StabilizePos,     // B in B_b -> B sigma_b in B_{b+1}
        DestabilizePos    // inverse, last letter must be +sigma_{b-1}, occurring once
    } kind;
    int pos = 0;      // letter position for positional moves
    int gen = 0;      // generator index for Conjugate / InsertPair
    int sign = 1;     // for Conjugate
};

struct InapplicableMove : std::runtime_error {
    InapplicableMove() : std::runtime_error("markov move not applicable at this position") {}
};

inline BraidWord apply_move(const BraidWord& b, const MarkovMove& m) {
    BraidWord r = b;
    auto& w = r.letters;
    switch (m.kind) {
        case MarkovMove::Conjugate: {
            if (m.gen < 1 || m.gen > b.strands - 1) throw InapplicableMove{};
            int g = m.gen * m.sign;
            w.insert(w.begin(), -g);
            w.push_back(g);
            break;
        }
        case MarkovMove::BraidRelation: {
            if (m.pos < 0 || m.pos + 3 > static_cast<int>(w.size())) throw InapplicableMove{};
            int x = w[m.pos], y = w[m.pos + 1], z = w[m.pos + 2];
            if (x != z || std::abs(std::abs(x) - std::abs(y)) != 1 ||
                (x > 0) != (y > 0))
                throw InapplicableMove{};
            w[m.pos] = y;
            w[m.pos + 1] = x;
            w[m.pos + 2] = y;
            break;
        }
        case MarkovMove::Commute: {
            if (m.pos < 0 || m.pos + 2 > static_cast<int>(w.size())) throw InapplicableMove{};
            if (std::abs(std::abs(w[m.pos]) - std::abs(w[m.pos + 1])) < 2)
                throw InapplicableMove{};
            std::swap(w[m.pos], w[m.pos + 1]);
            break;
        }
        case MarkovMove::CancelPair: {
            if (m.pos < 0 || m.pos + 2 > static_cast<int>(w.size())) throw InapplicableMove{};
            if (w[m.pos] != -w[m.pos + 1]) throw InapplicableMove{};
            w.erase(w.begin() + m.pos, w.begin() + m.pos + 2);
            break;
        }
        case MarkovMove::InsertPair: {
            if (m.pos < 0 || m.pos > static_cast<int>(w.size())) throw InapplicableMove{};
            if (m.gen < 1 || m.gen > b.strands - 1) throw InapplicableMove{};
            w.insert(w.begin() + m.pos, {m.gen * m.sign, -m.gen * m.sign});
            break;
        }
        case MarkovMove::StabilizePos: {
            r.strands = b.strands + 1;
            w.push_back(b.strands);
            break;
        }
        case MarkovMove::DestabilizePos: {
            if (b.strands < 2 || w.empty() || w.back() != b.strands - 1)
                throw InapplicableMove{};
            int occurrences = 0;
            for (int l : w)
                if (std::abs(l) == b.strands - 1) ++occurrences;
            if (occurrences != 1) throw InapplicableMove{};
            w.pop_back();
            r.strands = b.strands - 1;
            break;
        }
    }
    if (!r.valid()) throw InapplicableMove{};
    return r;
}

// Deterministic random transverse move sequences (rejection sampling).
inline std::vector<MarkovMove> random_transverse_sequence(BraidWord b, int n,
                                                          std::uint64_t seed,
                                                          int max_strands = 5,
                                                          int max_len = 12) {
    std::mt19937_64 rng(seed);
    std::vector<MarkovMove> out;
    while (static_cast<int>(out.size()) < n) {
        MarkovMove m;
        int k = static_cast<int>(rng() % 7);
        m.kind = static_cast<MarkovMove::Kind>(k);
        m.pos = b.letters.empty() ? 0 : static_cast<int>(rng() % (b.letters.size() + 1));
        m.gen = b.strands > 1 ? 1 + static_cast<int>(rng() % (b.strands - 1)) : 0;
        m.sign = (rng() & 1) ? 1 : -1;
        if (m.kind == MarkovMove::StabilizePos &&
            (b.strands >= max_strands || static_cast<int>(b.letters.size()) >= max_len))
            continue;
        if ((m.kind == MarkovMove::Conjugate || m.kind == MarkovMove::InsertPair) &&
            static_cast<int>(b.letters.size()) + 2 > max_len)
            continue;
        try {
            BraidWord nb = apply_move(b, m);
            b = nb;
            out.push_back(m);
        } catch (const InapplicableMove&) {
            continue;
        }
    }
    return out;
}

// ----------------------------------------------------------------- parsing
// Braid text format: "b=2; 1,1,1" (strand count, then signed letters).
inline BraidWord parse_braid(const std::string& s) {
    BraidWord b;
    auto semi = s.find(';');
    auto eq = s.find('=');
    if (eq == std::string::npos || semi == std::string::npos || eq > semi)
        throw std::invalid_argument("braid format: b=<strands>; l1,l2,...");
    b.strands = std::stoi(s.substr(eq + 1, semi - eq - 1));
    std::string rest = s.substr(semi + 1);
    size_t i = 0;
    while (i < rest.size()) {
        while (i < rest.size() && (rest[i] == ' ' || rest[i] == ',')) ++i;
        if (i >= rest.size()) break;
        size_t j = i;
        while (j < rest.size() && rest[j] != ',' && rest[j] != ' ') ++j;
        b.letters.push_back(std::stoi(rest.substr(i, j - i)));
        i = j;
    }
    if (!b.valid()) throw std::invalid_argument("invalid braid word");
    return b;
}

inline std::string braid_to_string(const BraidWord& b) {
    std::string s = "b=" + std::to_string(b.strands) + ";";
    for (size_t i = 0; i < b.letters.size(); ++i)
        s += (i ? "," : " ") + std::to_string(b.letters[i]);
    return s;
}

}  // namespace sl3foam

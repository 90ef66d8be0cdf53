#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hopforge/graph.hpp"
#include "hopforge/rng.hpp"

namespace hopforge {

// Unsigned big integer, little-endian 64-bit limbs. Just enough arithmetic
// for shortest-path sums: add, compare, set-bit, shift-in of small values.
class big_uint {
public:
    big_uint() = default;
    explicit big_uint(std::uint64_t v) {
        if (v) limbs_.push_back(v);
    }

    static big_uint with_bit(std::size_t bit) {
        big_uint b;
        b.limbs_.assign(bit / 64 + 1, 0);
        b.limbs_[bit / 64] = 1ULL << (bit % 64);
        return b;
    }

    // value * 2^shift_bits + this  (this must currently be < 2^shift_bits)
    void add_high(std::uint64_t value, std::size_t shift_bits) {
        std::size_t limb = shift_bits / 64;
        int off = static_cast<int>(shift_bits % 64);
        if (limbs_.size() < limb + 2) limbs_.resize(limb + 2, 0);
        add_at(limb, value << off);
        if (off) add_at(limb + 1, value >> (64 - off));
        trim();
    }

    big_uint& operator+=(const big_uint& o) {
        if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        unsigned char carry = 0;
        std::size_t i = 0;
        for (; i < o.limbs_.size(); ++i)
            carry = add_carry(limbs_[i], o.limbs_[i], carry);
        for (; carry && i < limbs_.size(); ++i)
            carry = add_carry(limbs_[i], 0, carry);
        if (carry) limbs_.push_back(1);
        return *this;
    }

    friend big_uint operator+(big_uint a, const big_uint& b) {
        a += b;
        return a;
    }

    friend bool operator<(const big_uint& a, const big_uint& b) {
        if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
        return false;
    }

    friend bool operator==(const big_uint& a, const big_uint& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const big_uint& a, const big_uint& b) { return !(a == b); }

private:
    std::vector<std::uint64_t> limbs_; // empty = zero, top limb nonzero

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    void add_at(std::size_t i, std::uint64_t v) {
        if (!v) return;
        for (; i < limbs_.size(); ++i) {
            limbs_[i] += v;
            if (limbs_[i] >= v) return; // no overflow
            v = 1;
        }
        limbs_.push_back(v);
    }
    static unsigned char add_carry(std::uint64_t& a, std::uint64_t b, unsigned char carry_in) {
        std::uint64_t s = a + b;
        unsigned char c = s < a ? 1 : 0;
        s += carry_in;
        if (carry_in && s == 0) c = 1;
        a = s;
        return c;
    }
};

// ---------------------------------------------------------------------------
// Perturbation: returns a graph over E ∪ H whose shortest paths are unique
// and are minimum-hop shortest paths of G ∪ H. Weights are encoded in three
// place-value digits (original weight, hop count, tie-break) so the induced
// order is exactly lexicographic (Σw, hops, Σδ):
//
//   W(e) = w(e) << (hop_bits + tie_bits)  +  1 << tie_bits  +  δ_e.
//
// Deterministic variant: δ_e = 2^(edge index). Distinct paths use distinct
// edge sets, so their δ sums differ and every shortest path is unique.
// ---------------------------------------------------------------------------

inline digraph<big_uint> perturb_unique(const graph& g, const shortcut_set& h) {
    graph aug = augment(g, h);
    const std::size_t m = aug.edge_count();
    std::size_t hop_bits = 1;
    while ((1ULL << hop_bits) <= static_cast<std::size_t>(aug.n)) ++hop_bits;
    const std::size_t tie_bits = m + 1;

    digraph<big_uint> p(aug.n, true);
    std::size_t idx = 0;
    for (vertex u = 0; u < aug.n; ++u)
        for (const auto& a : aug.out[u]) {
            big_uint w = big_uint::with_bit(idx); // δ_e
            w.add_high(1, tie_bits);              // hop digit
            w.add_high(static_cast<std::uint64_t>(a.w), tie_bits + hop_bits);
            p.out[u].push_back({a.to, w});
            p.in[a.to].push_back({u, w});
            ++idx;
        }
    return p;
}

// Randomized variant (the analysis's independent uniform δ), in plain int64.
// Ties broken with probability ~1; the deterministic variant is exact.
inline graph perturb_unique_random(const graph& g, const shortcut_set& h, std::uint64_t seed) {
    graph aug = augment(g, h);
    std::int64_t wmax = 1;
    for (vertex u = 0; u < aug.n; ++u)
        for (const auto& a : aug.out[u]) wmax = std::max(wmax, a.w);
    // bit budget: weight digit * hops digit * delta digit must fit int64
    int wbits = 1;
    while ((1LL << wbits) <= wmax) ++wbits;
    int nbits = 1;
    while ((1LL << nbits) <= aug.n) ++nbits;
    int delta_bits = 62 - wbits - 3 * nbits;
    if (delta_bits < 4) throw std::invalid_argument("perturb_unique_random: graph too large for int64 encoding");
    if (delta_bits > 40) delta_bits = 40;
    const std::int64_t delta_unit = 1;
    const std::int64_t hop_unit = (1LL << delta_bits) * static_cast<std::int64_t>(aug.n);
    const std::int64_t weight_unit = hop_unit * (static_cast<std::int64_t>(aug.n) + 1);

    rng r(seed);
    graph p(aug.n, true);
    for (vertex u = 0; u < aug.n; ++u)
        for (const auto& a : aug.out[u]) {
            std::int64_t delta = static_cast<std::int64_t>(r.next_below(1ULL << delta_bits)) * delta_unit;
            std::int64_t w = a.w * weight_unit + hop_unit + delta;
            p.add_edge(u, a.to, w);
        }
    return p;
}

} // namespace hopforge

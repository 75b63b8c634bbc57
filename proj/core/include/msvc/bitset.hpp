#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace msvc {

// Dynamic bitset over a vertex universe [0, n). Covers handled by the solvers
// are tiny (size <= k+1) while n can be large, so the hot operations are the
// word-wise ones: popcount and bounded symmetric difference.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : nbits_(n), w_((n + 63) / 64, 0) {}

    std::size_t universe() const { return nbits_; }

    void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }

    bool operator==(const Bitset& o) const { return w_ == o.w_; }

    std::vector<std::uint32_t> to_vertices() const {
        std::vector<std::uint32_t> out;
        for (std::size_t bi = 0; bi < w_.size(); ++bi) {
            std::uint64_t x = w_[bi];
            while (x) {
                out.push_back(static_cast<std::uint32_t>((bi << 6) + std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    static Bitset from_vertices(std::size_t n, const std::vector<std::uint32_t>& vs) {
        Bitset b(n);
        for (auto v : vs) b.set(v);
        return b;
    }

    friend std::size_t sym_diff_count(const Bitset& a, const Bitset& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.w_[i] ^ b.w_[i]));
        return c;
    }

    friend bool sym_diff_at_most(const Bitset& a, const Bitset& b, std::uint64_t limit) {
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            c += static_cast<std::uint64_t>(std::popcount(a.w_[i] ^ b.w_[i]));
            if (c > limit) return false;
        }
        return true;
    }

    // Order by the sorted element lists (a strict prefix sorts first), not by
    // word values. Let e be the smallest element of the symmetric difference;
    // the set holding e comes first unless the other set is a prefix of it.
    friend bool set_lex_less(const Bitset& a, const Bitset& b) {
        const std::size_t nw = a.w_.size();
        std::size_t i = 0;
        while (i < nw && a.w_[i] == b.w_[i]) ++i;
        if (i == nw) return false; // equal sets
        const std::uint64_t d = a.w_[i] ^ b.w_[i];
        const int t = std::countr_zero(d);
        const bool e_in_a = (a.w_[i] >> t) & 1;
        const Bitset& other = e_in_a ? b : a;
        const std::uint64_t above =
            (t == 63) ? 0 : (other.w_[i] & ~((std::uint64_t{1} << (t + 1)) - 1));
        bool other_continues = above != 0;
        for (std::size_t j = i + 1; !other_continues && j < nw; ++j)
            other_continues = other.w_[j] != 0;
        return e_in_a ? other_continues : !other_continues;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace msvc

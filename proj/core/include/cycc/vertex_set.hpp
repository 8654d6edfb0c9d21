#ifndef CYCC_VERTEX_SET_HPP
#define CYCC_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cycc {

// Subset of {0, ..., n-1} backed by 64-bit words.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (std::size_t w = 0; w < s.bits_.size(); ++w) s.bits_[w] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    int universe_size() const { return n_; }

    bool contains(int v) const {
        check(v);
        return (bits_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(int v) {
        check(v);
        bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check(v);
        bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : bits_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const = default;

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & ~o.bits_[w]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w] & o.bits_[w]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= o.bits_[w];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= o.bits_[w];
        return *this;
    }

    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= ~o.bits_[w];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet minus(int v) const {
        VertexSet s = *this;
        s.erase(v);
        return s;
    }

    VertexSet plus(int v) const {
        VertexSet s = *this;
        s.insert(v);
        return s;
    }

    // Lowest member, or -1 when empty.
    int first() const {
        for (std::size_t w = 0; w < bits_.size(); ++w)
            if (bits_[w]) return static_cast<int>(w * 64 + std::countr_zero(bits_[w]));
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t word = bits_[w];
            while (word) {
                int v = static_cast<int>(w * 64 + std::countr_zero(word));
                f(v);
                word &= word - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    int intersection_count(const VertexSet& o) const {
        int c = 0;
        for (std::size_t w = 0; w < bits_.size(); ++w)
            c += std::popcount(bits_[w] & o.bits_[w]);
        return c;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex id out of range");
    }

    void trim() {
        if (n_ % 64 && !bits_.empty())
            bits_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace cycc

#endif

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace drg {

// Subset of {0, ..., n-1} stored as a packed bitset.  All set operations
// require both operands to share the same universe size.
class VertexSet {
  public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet of(int n, std::initializer_list<int> items) {
        VertexSet s(n);
        for (int v : items) s.insert(v);
        return s;
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1ULL;
    }

    void insert(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63);
    }

    void erase(int v) {
        check(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(1ULL << (v & 63));
    }

    int size() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    // Members in increasing order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(wi * 64) + b);
                w &= w - 1;
            }
        }
        return out;
    }

    // Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(words_[wi]);
        return -1;
    }

    // Smallest member strictly greater than v, or -1 when none.
    int next(int v) const {
        if (v + 1 >= n_) return -1;
        std::size_t wi = static_cast<std::size_t>(v + 1) >> 6;
        std::uint64_t w = words_[wi] & (~0ULL << ((v + 1) & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64) + std::countr_zero(w);
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(wi * 64) + b);
                w &= w - 1;
            }
        }
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet out(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
        out.trim();
        return out;
    }

    int intersection_size(const VertexSet& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const = default;

  private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
    }
    void trim() {
        if (n_ % 64 != 0 && !words_.empty())
            words_.back() &= (1ULL << (n_ % 64)) - 1;
    }

    int n_;
    std::vector<std::uint64_t> words_;
};

}  // namespace drg

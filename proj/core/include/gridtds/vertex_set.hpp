#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gridtds {

/// Membership mask over the cells of a grid, indexed by cell index
/// (column-major: index = (i-1)*m + (j-1)). Iteration order is therefore
/// the (i, j) lexicographic vertex order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return universe_; }

    bool contains(std::size_t cell) const
    {
        return cell < universe_ && ((words_[cell >> 6] >> (cell & 63)) & 1u) != 0;
    }
    void insert(std::size_t cell) { words_[cell >> 6] |= std::uint64_t{1} << (cell & 63); }
    void erase(std::size_t cell) { words_[cell >> 6] &= ~(std::uint64_t{1} << (cell & 63)); }

    std::size_t size() const
    {
        std::size_t total = 0;
        for (auto w : words_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }
    bool empty() const
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    bool is_subset_of(const VertexSet & other) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto o = k < other.words_.size() ? other.words_[k] : 0;
            if ((words_[k] & ~o) != 0)
                return false;
        }
        return true;
    }

    VertexSet & operator|=(const VertexSet & other)
    {
        for (std::size_t k = 0; k < words_.size() && k < other.words_.size(); ++k)
            words_[k] |= other.words_[k];
        return *this;
    }
    VertexSet & operator&=(const VertexSet & other)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= k < other.words_.size() ? other.words_[k] : 0;
        return *this;
    }

    /// Cell indices in increasing order.
    std::vector<std::size_t> cells() const
    {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto w = words_[k];
            while (w != 0) {
                out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

    /// Lexicographic order on the increasing cell sequences.
    friend bool lex_less(const VertexSet & a, const VertexSet & b)
    {
        auto x = a.cells();
        auto y = b.cells();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace gridtds

#pragma once

#include <string>
#include <vector>

#include "sdlab/errors.hpp"

namespace sdlab {

// Ordered partition (n_1, ..., n_k) of {0, ..., n-1} into contiguous index
// blocks. Encodes the block-diagonal subalgebra and the block upper-triangular
// algebra sitting above it.
class BlockStructure {
  public:
    explicit BlockStructure(std::vector<int> sizes);

    // Parses comma-separated sizes, e.g. "2,3,1".
    static BlockStructure parse(const std::string& csv);

    static BlockStructure all_ones(int n) { return BlockStructure(std::vector<int>(static_cast<std::size_t>(n), 1)); }
    static BlockStructure single(int n) { return BlockStructure(std::vector<int>{n}); }

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(sizes_.size()); }
    const std::vector<int>& sizes() const { return sizes_; }

    // start offsets of each block plus the final n, so block b spans
    // [boundary(b), boundary(b+1)).
    int boundary(int b) const { return boundaries_[static_cast<std::size_t>(b)]; }

    int block_of(int index) const { return block_of_[static_cast<std::size_t>(index)]; }

    bool same_block(int i, int j) const { return block_of(i) == block_of(j); }

    // True when entry (i, j) lies in the block upper-triangular region.
    bool upper_of_or_in_block(int i, int j) const { return block_of(i) <= block_of(j); }

    std::string to_csv() const;

    bool operator==(const BlockStructure& o) const { return sizes_ == o.sizes_; }

  private:
    int n_ = 0;
    std::vector<int> sizes_;
    std::vector<int> boundaries_;
    std::vector<int> block_of_;
};

} // namespace sdlab

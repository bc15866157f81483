#include "sdlab/block_structure.hpp"

#include <cstdlib>

namespace sdlab {

BlockStructure::BlockStructure(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw DimensionMismatchError("block structure needs at least one block");
    boundaries_.push_back(0);
    for (int s : sizes_) {
        if (s <= 0) throw DimensionMismatchError("block sizes must be positive");
        n_ += s;
        boundaries_.push_back(n_);
    }
    block_of_.resize(static_cast<std::size_t>(n_));
    for (int b = 0; b < block_count(); ++b)
        for (int i = boundary(b); i < boundary(b + 1); ++i) block_of_[static_cast<std::size_t>(i)] = b;
}

BlockStructure BlockStructure::parse(const std::string& csv) {
    std::vector<int> sizes;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        const std::string tok = csv.substr(pos, comma - pos);
        if (tok.empty()) throw ParseError("empty block size", pos);
        char* end = nullptr;
        const long v = std::strtol(tok.c_str(), &end, 10);
        if (end == tok.c_str() || *end != '\0')
            throw ParseError("block size is not an integer: '" + tok + "'", pos);
        if (v <= 0) throw ParseError("block size must be positive", pos);
        sizes.push_back(static_cast<int>(v));
        pos = comma + 1;
        if (comma == csv.size()) break;
    }
    return BlockStructure(std::move(sizes));
}

std::string BlockStructure::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(sizes_[i]);
    }
    return out;
}

} // namespace sdlab

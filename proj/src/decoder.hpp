// Gaussian-elimination decoder over GF(2^8).
//
// Rows are (coefficient vector of length K, payload). Insertion keeps the
// state in row-echelon form with normalized pivots; linearly dependent rows
// reduce to zero and are discarded. solve() back-substitutes once rank == K.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace risbec::codec {

class RowDecoder {
public:
    RowDecoder(std::size_t dimension, std::size_t payload_len);

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return rank_; }
    bool complete() const { return rank_ == dim_; }

    // Returns the rank after insertion (grows by one iff the row is
    // independent of the stored rows).
    std::size_t insert(std::span<const std::uint8_t> coeffs,
                       std::span<const std::uint8_t> payload);

    // Shorthand for inserting the systematic row e_index with the payload.
    std::size_t insert_systematic(std::size_t index,
                                  std::span<const std::uint8_t> payload);

    // Requires rank == K; throws std::logic_error otherwise. Returns the K
    // source payloads.
    std::vector<std::vector<std::uint8_t>> solve() const;

private:
    std::size_t dim_;
    std::size_t payload_len_;
    std::size_t rank_ = 0;
    std::vector<std::uint8_t> has_pivot_;       // per column
    std::vector<std::vector<std::uint8_t>> rows_;     // pivot row per column
    std::vector<std::vector<std::uint8_t>> payloads_; // payload per column
};

} // namespace risbec::codec

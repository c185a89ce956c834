#include "decoder.hpp"

#include <stdexcept>

#include "gf256.hpp"

namespace risbec::codec {

RowDecoder::RowDecoder(std::size_t dimension, std::size_t payload_len)
    : dim_(dimension), payload_len_(payload_len), has_pivot_(dimension, 0),
      rows_(dimension), payloads_(dimension) {
    if (dimension == 0)
        throw std::invalid_argument("RowDecoder: dimension must be >= 1");
}

std::size_t RowDecoder::insert(std::span<const std::uint8_t> coeffs,
                               std::span<const std::uint8_t> payload) {
    if (coeffs.size() != dim_)
        throw std::invalid_argument("RowDecoder: coefficient length mismatch");
    if (payload.size() != payload_len_)
        throw std::invalid_argument("RowDecoder: payload length mismatch");
    if (complete()) return rank_;

    std::vector<std::uint8_t> row(coeffs.begin(), coeffs.end());
    std::vector<std::uint8_t> pay(payload.begin(), payload.end());

    for (std::size_t c = 0; c < dim_; ++c) {
        const std::uint8_t v = row[c];
        if (v == 0) continue;
        if (has_pivot_[c]) {
            // Pivot rows are normalized (leading 1, zeros before c).
            row[c] = 0;
            gf::addmul(row.data() + c + 1, rows_[c].data() + c + 1,
                       dim_ - c - 1, v);
            gf::addmul(pay.data(), payloads_[c].data(), payload_len_, v);
        } else {
            const std::uint8_t f = gf::inv(v);
            row[c] = 1;
            gf::scale(row.data() + c + 1, dim_ - c - 1, f);
            gf::scale(pay.data(), payload_len_, f);
            rows_[c] = std::move(row);
            payloads_[c] = std::move(pay);
            has_pivot_[c] = 1;
            ++rank_;
            return rank_;
        }
    }
    return rank_; // reduced to zero: dependent, discarded
}

std::size_t RowDecoder::insert_systematic(std::size_t index,
                                          std::span<const std::uint8_t> payload) {
    if (index >= dim_)
        throw std::invalid_argument("RowDecoder: systematic index out of range");
    if (!has_pivot_[index]) {
        std::vector<std::uint8_t> row(dim_, 0);
        row[index] = 1;
        rows_[index] = std::move(row);
        payloads_[index].assign(payload.begin(), payload.end());
        has_pivot_[index] = 1;
        ++rank_;
    }
    return rank_;
}

std::vector<std::vector<std::uint8_t>> RowDecoder::solve() const {
    if (!complete())
        throw std::logic_error("RowDecoder: solve requires full rank");
    auto payloads = payloads_;
    auto rows = rows_;
    for (std::size_t c = dim_; c-- > 0;) {
        for (std::size_t r = 0; r < c; ++r) {
            const std::uint8_t v = rows[r][c];
            if (v == 0) continue;
            rows[r][c] = 0;
            gf::addmul(payloads[r].data(), payloads[c].data(), payload_len_, v);
        }
    }
    return payloads;
}

} // namespace risbec::codec

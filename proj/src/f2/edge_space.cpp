#include <algorithm>
#include <stdexcept>

#include "tuza/f2.hpp"
#include "tuza/simd.hpp"

namespace tuza {

std::size_t EdgeVector::popcount() const { return simd::popcount(words_); }

bool EdgeVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t EdgeVector::lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
    return length_;
}

std::vector<std::size_t> EdgeVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

EdgeVector& EdgeVector::operator^=(const EdgeVector& other) {
    if (other.length_ != length_) throw std::invalid_argument("edge vector length mismatch");
    simd::xor_into(words_, other.words_);
    return *this;
}

EdgeVector& EdgeVector::operator&=(const EdgeVector& other) {
    if (other.length_ != length_) throw std::invalid_argument("edge vector length mismatch");
    simd::and_into(words_, words_, other.words_);
    return *this;
}

bool EdgeVector::dot(const EdgeVector& other) const {
    if (other.length_ != length_) throw std::invalid_argument("edge vector length mismatch");
    return simd::and_popcount(words_, other.words_) & 1u;
}

bool EdgeVector::subset_of(const EdgeVector& other) const {
    if (other.length_ != length_) throw std::invalid_argument("edge vector length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

std::string EdgeVector::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out((length_ + 3) / 4, '0');
    for (std::size_t k = 0; k < out.size(); ++k) {
        unsigned nibble = 0;
        for (std::size_t j = 0; j < 4 && 4 * k + j < length_; ++j) nibble |= static_cast<unsigned>(get(4 * k + j)) << j;
        out[k] = digits[nibble];
    }
    return out;
}

EdgeVector EdgeVector::from_hex(std::string_view hex, std::size_t length) {
    if (hex.size() != (length + 3) / 4) throw std::invalid_argument("hex string length does not match edge count");
    EdgeVector v(length);
    for (std::size_t k = 0; k < hex.size(); ++k) {
        const char ch = hex[k];
        unsigned nibble;
        if (ch >= '0' && ch <= '9')
            nibble = static_cast<unsigned>(ch - '0');
        else if (ch >= 'a' && ch <= 'f')
            nibble = static_cast<unsigned>(ch - 'a' + 10);
        else if (ch >= 'A' && ch <= 'F')
            nibble = static_cast<unsigned>(ch - 'A' + 10);
        else
            throw std::invalid_argument("bad hex digit in edge vector");
        for (std::size_t j = 0; j < 4; ++j) {
            if (!((nibble >> j) & 1u)) continue;
            if (4 * k + j >= length) throw std::invalid_argument("hex edge vector sets bits past its length");
            v.set(4 * k + j);
        }
    }
    return v;
}

EdgeVector operator^(EdgeVector a, const EdgeVector& b) {
    a ^= b;
    return a;
}

EdgeVector indicator(const EdgeIndex& idx, const std::vector<Edge>& edges) {
    EdgeVector v(idx.size());
    for (const auto& [a, b] : edges) v.set(idx.id(a, b));
    return v;
}

EdgeVector cycle_indicator(const EdgeIndex& idx, const std::vector<Vertex>& cycle) {
    EdgeVector v(idx.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) v.flip(idx.id(cycle[i], cycle[(i + 1) % cycle.size()]));
    return v;
}

EdgeVector cut_indicator(const EdgeIndex& idx, const std::vector<bool>& in_a) {
    EdgeVector v(idx.size());
    for (std::size_t e = 0; e < idx.size(); ++e)
        if (in_a[idx[static_cast<EdgeId>(e)].first] != in_a[idx[static_cast<EdgeId>(e)].second]) v.set(e);
    return v;
}

bool F2Basis::insert(const EdgeVector& v) {
    if (v.length() != length_) throw std::invalid_argument("edge vector length mismatch");
    EdgeVector r = reduce(v);
    if (r.is_zero()) return false;
    const std::size_t p = r.lowest();
    for (auto& row : rows_)
        if (row.get(p)) row ^= r;
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

EdgeVector F2Basis::reduce(EdgeVector v) const {
    if (v.length() != length_) throw std::invalid_argument("edge vector length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v ^= rows_[i];
    return v;
}

bool F2Basis::same_span(const F2Basis& other) const { return length_ == other.length_ && rows_ == other.rows_; }

bool is_orthogonal(const EdgeVector& v, const F2Basis& basis) {
    if (v.length() != basis.length()) throw std::invalid_argument("edge vector length mismatch");
    return std::none_of(basis.rows().begin(), basis.rows().end(), [&](const EdgeVector& row) { return v.dot(row); });
}

}  // namespace tuza

// Copyright 2026 The typerun Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "typerun/baseline_codecs.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

#include "typerun/errors.hpp"

namespace typerun {

namespace {

struct MergeNode {
    std::uint64_t weight;
    std::uint32_t min_symbol;
    std::size_t id;
};

struct HeavierFirst {
    bool operator()(const MergeNode& a, const MergeNode& b) const {
        return std::tie(a.weight, a.min_symbol) > std::tie(b.weight, b.min_symbol);
    }
};

// Symbols with a codeword in canonical order.
std::vector<std::uint32_t> canonical_order(const std::vector<std::uint32_t>& lengths) {
    std::vector<std::uint32_t> order;
    for (std::uint32_t s = 0; s < lengths.size(); ++s)
        if (lengths[s] > 0) order.push_back(s);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return lengths[a] < lengths[b]; });
    return order;
}

SymbolSequence checked_symbols(std::vector<std::uint32_t> symbols, std::uint32_t alphabet_size) {
    SymbolSequence x{std::move(symbols), alphabet_size};
    for (const std::uint32_t s : x.symbols)
        if (s >= alphabet_size) throw CorruptDataError("decoded symbol outside the alphabet");
    return x;
}

}  // namespace

HuffmanCodebook HuffmanCodebook::from_lengths(std::vector<std::uint32_t> lengths) {
    HuffmanCodebook book;
    book.codes.assign(lengths.size(), 0);
    const auto order = canonical_order(lengths);
    std::uint64_t code = 0;
    std::uint32_t prev_len = order.empty() ? 0 : lengths[order.front()];
    for (const std::uint32_t s : order) {
        if (lengths[s] > 64) throw RangeError("Huffman code length exceeds 64 bits");
        code <<= (lengths[s] - prev_len);
        book.codes[s] = code++;
        prev_len = lengths[s];
    }
    book.lengths = std::move(lengths);
    return book;
}

HuffmanCodebook huffman_build(const TypeVector& t) {
    const std::size_t L = t.alphabet_size();
    std::priority_queue<MergeNode, std::vector<MergeNode>, HeavierFirst> queue;
    std::vector<std::size_t> parent;
    for (std::uint32_t s = 0; s < L; ++s) {
        if (t.counts[s] == 0) continue;
        queue.push({t.counts[s], s, parent.size()});
        parent.push_back(0);
    }
    if (queue.empty()) throw EmptyInputError("Huffman codebook needs at least one nonzero count");

    std::vector<std::uint32_t> lengths(L, 0);
    if (queue.size() == 1) {
        lengths[queue.top().min_symbol] = 1;
        return HuffmanCodebook::from_lengths(std::move(lengths));
    }

    // Leaves occupy ids [0, leaves); internal nodes follow in creation order.
    const std::size_t leaves = parent.size();
    std::vector<std::uint32_t> leaf_symbol;
    leaf_symbol.reserve(leaves);
    for (std::uint32_t s = 0; s < L; ++s)
        if (t.counts[s] > 0) leaf_symbol.push_back(s);

    while (queue.size() > 1) {
        const MergeNode a = queue.top();
        queue.pop();
        const MergeNode b = queue.top();
        queue.pop();
        const std::size_t id = parent.size();
        parent.push_back(id);  // root points to itself until merged
        parent[a.id] = id;
        parent[b.id] = id;
        queue.push({a.weight + b.weight, std::min(a.min_symbol, b.min_symbol), id});
    }

    // Parents are always created after children, so depths fill back to front.
    std::vector<std::uint32_t> depth(parent.size(), 0);
    for (std::size_t id = parent.size() - 1; id-- > 0;) depth[id] = depth[parent[id]] + 1;
    for (std::size_t leaf = 0; leaf < leaves; ++leaf) lengths[leaf_symbol[leaf]] = depth[leaf];
    return HuffmanCodebook::from_lengths(std::move(lengths));
}

SequenceCodecResult huffman_encode(const SymbolSequence& x, const HuffmanCodebook& book) {
    SequenceCodecResult result;
    for (const std::uint32_t len : book.lengths) encode_elias_omega(result.bits, len + 1);
    result.side_info_bits = result.bits.bit_length();
    for (const std::uint32_t s : x.symbols) {
        if (s >= book.lengths.size() || book.lengths[s] == 0)
            throw CoverageError("symbol " + std::to_string(s) + " has no Huffman codeword");
        result.bits.write_uint(book.codes[s], book.lengths[s]);
    }
    result.total_bits = result.bits.bit_length();
    return result;
}

SymbolSequence huffman_decode(const BitBuffer& bits, const HuffmanCodebook& book, std::size_t n) {
    BitCursor cur(bits);
    for (const std::uint32_t len : book.lengths)
        if (decode_elias_omega(cur) != std::uint64_t{len} + 1)
            throw FormatError("Huffman header does not match the codebook");

    const auto order = canonical_order(book.lengths);
    const std::uint32_t max_len = order.empty() ? 0 : book.lengths[order.back()];
    // first_code[l], first_index[l], count[l] describe the canonical block of length l
    std::vector<std::uint64_t> first_code(max_len + 1, 0), count(max_len + 1, 0);
    std::vector<std::size_t> first_index(max_len + 1, 0);
    for (std::size_t i = order.size(); i-- > 0;) {
        const std::uint32_t len = book.lengths[order[i]];
        first_code[len] = book.codes[order[i]];
        first_index[len] = i;
        ++count[len];
    }

    std::vector<std::uint32_t> symbols;
    symbols.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t code = 0;
        std::uint32_t len = 0;
        for (;;) {
            if (len == max_len) throw CorruptDataError("bit pattern is not a Huffman codeword");
            code = (code << 1) | cur.read_bit();
            ++len;
            if (count[len] > 0 && code >= first_code[len] && code - first_code[len] < count[len]) {
                symbols.push_back(order[first_index[len] + (code - first_code[len])]);
                break;
            }
        }
    }
    return checked_symbols(std::move(symbols), static_cast<std::uint32_t>(book.lengths.size()));
}

SequenceCodecResult symbolwise_golomb_encode(const SymbolSequence& x, GolombParam m) {
    SequenceCodecResult result;
    for (const std::uint32_t s : x.symbols) encode_golomb(result.bits, s, m);
    result.total_bits = result.bits.bit_length();
    return result;
}

SymbolSequence symbolwise_golomb_decode(const BitBuffer& bits, GolombParam m, std::size_t n,
                                        std::uint32_t alphabet_size) {
    BitCursor cur(bits);
    std::vector<std::uint32_t> symbols(n);
    for (auto& s : symbols) {
        const std::uint64_t v = decode_golomb(cur, m);
        if (v >= alphabet_size) throw CorruptDataError("decoded symbol outside the alphabet");
        s = static_cast<std::uint32_t>(v);
    }
    return SymbolSequence{std::move(symbols), alphabet_size};
}

SequenceCodecResult symbolwise_elias_encode(const SymbolSequence& x) {
    SequenceCodecResult result;
    for (const std::uint32_t s : x.symbols) encode_elias_omega(result.bits, std::uint64_t{s} + 1);
    result.total_bits = result.bits.bit_length();
    return result;
}

SymbolSequence symbolwise_elias_decode(const BitBuffer& bits, std::size_t n,
                                       std::uint32_t alphabet_size) {
    BitCursor cur(bits);
    std::vector<std::uint32_t> symbols(n);
    for (auto& s : symbols) {
        const std::uint64_t v = decode_elias_omega(cur) - 1;
        if (v >= alphabet_size) throw CorruptDataError("decoded symbol outside the alphabet");
        s = static_cast<std::uint32_t>(v);
    }
    return SymbolSequence{std::move(symbols), alphabet_size};
}

namespace {

class TypeRunCodec final : public SequenceCodec {
public:
    std::string name() const override { return "proposed"; }

    SequenceCodecResult encode(const SymbolSequence& x) override {
        EncodeResult encoded = encode_with_layout(x);
        SequenceCodecResult result;
        result.total_bits = encoded.bits.bit_length();
        result.side_info_bits = encoded.layout.header_bits;
        result.bits = std::move(encoded.bits);
        return result;
    }

    SymbolSequence decode(const BitBuffer& bits, std::size_t, std::uint32_t) override {
        return typerun::decode(bits);
    }
};

class HuffmanCodec final : public SequenceCodec {
public:
    std::string name() const override { return "huffman"; }

    SequenceCodecResult encode(const SymbolSequence& x) override {
        book_ = x.symbols.empty() ? HuffmanCodebook::from_lengths(
                                        std::vector<std::uint32_t>(x.alphabet_size, 0))
                                  : huffman_build(compute_type(x));
        return huffman_encode(x, book_);
    }

    SymbolSequence decode(const BitBuffer& bits, std::size_t n, std::uint32_t alphabet_size) override {
        SymbolSequence x = huffman_decode(bits, book_, n);
        x.alphabet_size = alphabet_size;
        return x;
    }

private:
    HuffmanCodebook book_;
};

class SymbolwiseGolombCodec final : public SequenceCodec {
public:
    explicit SymbolwiseGolombCodec(GolombParam m) : m_(m) {}

    std::string name() const override { return "golomb_m" + std::to_string(m_.value()); }

    SequenceCodecResult encode(const SymbolSequence& x) override {
        return symbolwise_golomb_encode(x, m_);
    }

    SymbolSequence decode(const BitBuffer& bits, std::size_t n, std::uint32_t alphabet_size) override {
        return symbolwise_golomb_decode(bits, m_, n, alphabet_size);
    }

private:
    GolombParam m_;
};

class SymbolwiseEliasCodec final : public SequenceCodec {
public:
    std::string name() const override { return "elias"; }

    SequenceCodecResult encode(const SymbolSequence& x) override {
        return symbolwise_elias_encode(x);
    }

    SymbolSequence decode(const BitBuffer& bits, std::size_t n, std::uint32_t alphabet_size) override {
        return symbolwise_elias_decode(bits, n, alphabet_size);
    }
};

}  // namespace

std::unique_ptr<SequenceCodec> make_typerun_codec() { return std::make_unique<TypeRunCodec>(); }
std::unique_ptr<SequenceCodec> make_huffman_codec() { return std::make_unique<HuffmanCodec>(); }
std::unique_ptr<SequenceCodec> make_symbolwise_golomb_codec(GolombParam m) {
    return std::make_unique<SymbolwiseGolombCodec>(m);
}
std::unique_ptr<SequenceCodec> make_symbolwise_elias_codec() {
    return std::make_unique<SymbolwiseEliasCodec>();
}

}  // namespace typerun

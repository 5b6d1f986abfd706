// Copyright 2026 The fermap Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "fermap/error.hpp"
#include "fermap/framework.hpp"
#include "fermap/text.hpp"

namespace fermap {

/// Layer sizes (v_1, ..., v_L) of a multilayer segmented parity mapping; every entry is >= 2.
class MspVector {
  public:
    MspVector() = default;

    MspVector(std::initializer_list<std::uint32_t> v) : MspVector(std::vector<std::uint32_t>(v)) {}

    explicit MspVector(std::vector<std::uint32_t> v) : entries_(std::move(v)) {
        for (auto e : entries_)
            if (e < 2) throw ValidationError("MSP vector entries must be >= 2, got " + std::to_string(e));
    }

    const std::vector<std::uint32_t> &entries() const noexcept { return entries_; }
    std::size_t layers() const noexcept { return entries_.size(); }
    std::uint32_t operator[](std::size_t l) const { return entries_.at(l); }

    /// Product of the entries, saturated at UINT64_MAX.
    std::uint64_t product() const {
        std::uint64_t p = 1;
        for (auto e : entries_) {
            if (p > std::numeric_limits<std::uint64_t>::max() / e) return std::numeric_limits<std::uint64_t>::max();
            p *= e;
        }
        return p;
    }

    /// Σ (v_l - 1): the bound on |U(j) ∪ P(j)|.
    std::uint32_t weight_bound() const {
        std::uint32_t s = 0;
        for (auto e : entries_) s += e - 1;
        return s;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += '-';
            out += std::to_string(entries_[i]);
        }
        return out;
    }

    friend bool operator==(const MspVector &, const MspVector &) = default;

  private:
    std::vector<std::uint32_t> entries_;
};

/// Parses "2-3-2".
inline MspVector parse_msp_vector(std::string_view s) {
    std::vector<std::uint32_t> v;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto dash = s.find('-', pos);
        auto part = s.substr(pos, dash == std::string_view::npos ? std::string_view::npos : dash - pos);
        auto e = text::parse_index(part);
        if (!e) throw ParseError(0, "bad MSP vector '" + std::string(s) + "'");
        v.push_back(*e);
        if (dash == std::string_view::npos) break;
        pos = dash + 1;
    }
    return MspVector(std::move(v));
}

/// Jordan-Wigner: every S(j) empty.
inline SummationFamily jw(std::uint32_t n_modes) { return SummationFamily::empty(n_modes); }

/// Parity: S(j) = {0, ..., j-1}.
inline SummationFamily parity(std::uint32_t n_modes) {
    if (n_modes == 0) throw ValidationError("parity mapping needs at least one mode");
    std::vector<ModeSet> sets(n_modes);
    for (std::uint32_t j = 0; j < n_modes; ++j)
        for (std::uint32_t k = 0; k < j; ++k) sets[j].push_back(k);
    return SummationFamily(std::move(sets));
}

/**
 * Bravyi-Kitaev tree built from the Fenwick recursion: each range [L, R] hangs its midpoint
 * floor((L+R)/2) under R, then recurses on [L, mid] and [mid+1, R]. Identical to the classic
 * Bravyi-Kitaev sets when M is a power of two.
 */
inline SummationFamily fenwick(std::uint32_t n_modes) {
    if (n_modes == 0) throw ValidationError("Fenwick mapping needs at least one mode");
    std::vector<std::optional<std::uint32_t>> parent(n_modes);
    std::function<void(std::uint32_t, std::uint32_t)> split = [&](std::uint32_t lo, std::uint32_t hi) {
        if (lo >= hi) return;
        std::uint32_t mid = lo + (hi - lo) / 2;
        parent[mid] = hi;
        split(lo, mid);
        split(mid + 1, hi);
    };
    split(0, n_modes - 1);
    return tree_to_family(MappingTree(std::move(parent)));
}

namespace detail {

inline void require_cover(std::uint32_t n_modes, const MspVector &v) {
    if (n_modes == 0) throw ValidationError("MSP mapping needs at least one mode");
    if (v.product() < n_modes)
        throw ValidationError("MSP vector " + v.str() + " has product " + std::to_string(v.product()) +
                              " < " + std::to_string(n_modes) + " modes");
}

/// Recursive segmentation. When `whole_parity` is false the top-level range does not claim the
/// last site, so S(M-1) ends up covering only the last layer-1 segment.
inline std::vector<ModeSet> segment_sets(std::uint32_t n_modes, const MspVector &v, bool whole_parity) {
    require_cover(n_modes, v);
    std::vector<ModeSet> sets(n_modes);
    std::function<void(std::uint32_t, std::uint32_t, std::size_t, bool)> segment =
        [&](std::uint32_t lo, std::uint32_t hi, std::size_t layer, bool claim) {
            if (lo >= hi) return;
            if (layer >= v.layers())
                throw std::logic_error("MSP segmentation ran out of layers"); // unreachable with a covering vector
            if (claim && sets[hi].empty())
                for (std::uint32_t j = lo; j < hi; ++j) sets[hi].push_back(j);
            const std::uint32_t width = hi - lo + 1;
            const std::uint32_t parts = v[layer];
            std::uint32_t rem = width % parts;
            const std::uint32_t base = width / parts;
            std::uint32_t left = lo;
            for (std::uint32_t i = 0; i < parts; ++i) {
                std::uint32_t len = base + (rem > 0 ? 1 : 0);
                if (rem > 0) --rem;
                if (len == 0) break;
                segment(left, left + len - 1, layer + 1, true);
                left += len;
            }
        };
    segment(0, n_modes - 1, 0, whole_parity);
    return sets;
}

} // namespace detail

/**
 * Multilayer segmented parity mapping for any M with Π v_l >= M.
 *
 * The range [0, M) is split into v_1 near-equal segments (the first r segments one site longer
 * when M = u·v_1 + r), each segment into v_2 subsegments, and so on. The last site of every
 * segment stores the parity of the whole segment; a site that is already a parity site keeps its
 * first (largest) segment.
 */
inline SummationFamily msp(std::uint32_t n_modes, const MspVector &v) {
    return SummationFamily(detail::segment_sets(n_modes, v, true));
}

/// Variant 1: the last qubit stores the parity of the last layer-1 segment instead of the whole.
inline SummationFamily msp_v1(std::uint32_t n_modes, const MspVector &v) {
    return SummationFamily(detail::segment_sets(n_modes, v, false));
}

/// Variant 2: the last qubit stores the occupation of the last mode.
inline SummationFamily msp_v2(std::uint32_t n_modes, const MspVector &v) {
    auto sets = detail::segment_sets(n_modes, v, true);
    sets.back().clear();
    return SummationFamily(std::move(sets));
}

/// Mixed-radix digits of j, most significant (layer 1) first.
inline std::vector<std::uint32_t> msp_coordinates(std::uint32_t j, const MspVector &v) {
    std::vector<std::uint32_t> c(v.layers());
    for (std::size_t l = v.layers(); l-- > 0;) {
        c[l] = j % v[l];
        j /= v[l];
    }
    return c;
}

/**
 * All four sets straight from segment coordinates, for M = Π v_l exactly. With c = C(j),
 * d = C(k) and some layer l0:
 *   S(j): k < j, d_l = c_l for l < l0, c_l = v_l - 1 for l >= l0
 *   U(j): k > j, d_l = c_l for l < l0, d_l = v_l - 1 for l >= l0
 *   P(j): k < j, d_l = c_l for l < l0, d_l = v_l - 1 for l > l0
 *   F(j): k < j, d_l = c_l for l < l0, c_l0 = v_l0 - 1, d_l = c_l = v_l - 1 for l > l0
 */
inline MappingSets msp_closed_form(std::uint32_t n_modes, const MspVector &v) {
    if (v.product() != n_modes)
        throw UnsupportedSize("closed-form MSP sets need M = product of the vector (" + v.str() + " vs M=" +
                              std::to_string(n_modes) + "); use msp()");
    const std::size_t layers = v.layers();
    std::vector<std::vector<std::uint32_t>> coord(n_modes);
    for (std::uint32_t j = 0; j < n_modes; ++j) coord[j] = msp_coordinates(j, v);

    auto prefix_equal = [&](std::uint32_t j, std::uint32_t k, std::size_t l0) {
        for (std::size_t l = 0; l < l0; ++l)
            if (coord[j][l] != coord[k][l]) return false;
        return true;
    };
    auto tail_max = [&](std::uint32_t j, std::size_t from) {
        for (std::size_t l = from; l < layers; ++l)
            if (coord[j][l] != v[l] - 1) return false;
        return true;
    };

    MappingSets out{n_modes, std::vector<ModeSet>(n_modes), std::vector<ModeSet>(n_modes),
                    std::vector<ModeSet>(n_modes), std::vector<ModeSet>(n_modes)};
    for (std::uint32_t j = 0; j < n_modes; ++j)
        for (std::uint32_t k = 0; k < n_modes; ++k) {
            bool in_s = false, in_u = false, in_p = false, in_f = false;
            for (std::size_t l0 = 0; l0 < layers; ++l0) {
                if (!prefix_equal(j, k, l0)) continue;
                if (k < j && tail_max(j, l0)) in_s = true;
                if (k > j && tail_max(k, l0)) in_u = true;
                if (k < j && tail_max(k, l0 + 1)) in_p = true;
                if (k < j && coord[j][l0] == v[l0] - 1 && tail_max(k, l0 + 1) && tail_max(j, l0 + 1)) in_f = true;
            }
            if (in_s) out.summation[j].push_back(k);
            if (in_u) out.update[j].push_back(k);
            if (in_p) out.parity[j].push_back(k);
            if (in_f) out.flip[j].push_back(k);
        }
    return out;
}

/// Appends 2s to `v` until its product covers `n_modes`.
inline MspVector pad_with_twos(std::uint32_t n_modes, MspVector v) {
    auto e = v.entries();
    std::uint64_t p = v.product();
    while (p < n_modes) {
        e.push_back(2);
        p *= 2;
    }
    return MspVector(std::move(e));
}

/// Two-layer segmented parity: MSP-V1 with V = (w, ceil(M/w)). When w >= M the second layer
/// would have a single part and is dropped.
inline SummationFamily two_sp(std::uint32_t n_modes, std::uint32_t w) {
    if (w < 2) throw ValidationError("2SP segment count must be >= 2");
    if (n_modes == 0) throw ValidationError("2SP mapping needs at least one mode");
    std::uint32_t per = (n_modes + w - 1) / w;
    return per >= 2 ? msp_v1(n_modes, MspVector{w, per}) : msp_v1(n_modes, MspVector{w});
}

/// Segmented Bravyi-Kitaev: MSP-V1 with V = (h, 2, 2, ...), as many 2s as needed to cover M.
inline SummationFamily sbk(std::uint32_t n_modes, std::uint32_t h) {
    if (h < 2) throw ValidationError("SBK row count must be >= 2");
    return msp_v1(n_modes, pad_with_twos(n_modes, MspVector{h}));
}

/// Single-layer MSP with v_1 = M: raw occupations except the last qubit, which holds the total parity.
inline SummationFamily jw_variant(std::uint32_t n_modes) {
    if (n_modes < 2) throw ValidationError("JW variant needs at least two modes");
    return msp(n_modes, MspVector{n_modes});
}

/// All-2s vector long enough for M modes (ceil(log2 M) entries).
inline MspVector binary_msp_vector(std::uint32_t n_modes) { return pad_with_twos(n_modes, MspVector{}); }

// Descriptors: jw, parity, bk, bk-tree, msp:2-3-2, msp-v1:2-3-2, msp-v2:2-3-2, 2sp:w=4, sbk:h=4, jw-variant.

struct MappingDescriptor {
    enum class Kind { Jw, Parity, Fenwick, Msp, MspV1, MspV2, TwoSp, Sbk, JwVariant };

    Kind kind = Kind::Jw;
    MspVector vector;        // Msp, MspV1, MspV2
    std::uint32_t param = 0; // TwoSp (w), Sbk (h)
    std::string text;

    SummationFamily family(std::uint32_t n_modes) const {
        switch (kind) {
        case Kind::Jw: return jw(n_modes);
        case Kind::Parity: return parity(n_modes);
        case Kind::Fenwick: return fenwick(n_modes);
        case Kind::Msp: return msp(n_modes, vector);
        case Kind::MspV1: return msp_v1(n_modes, vector);
        case Kind::MspV2: return msp_v2(n_modes, vector);
        case Kind::TwoSp: return two_sp(n_modes, param);
        case Kind::Sbk: return sbk(n_modes, param);
        case Kind::JwVariant: return jw_variant(n_modes);
        }
        throw std::logic_error("unknown mapping kind");
    }
};

inline MappingDescriptor parse_descriptor(std::string_view s) {
    using Kind = MappingDescriptor::Kind;
    MappingDescriptor d;
    d.text = std::string(s);
    auto colon = s.find(':');
    auto head = s.substr(0, colon);
    auto arg = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
    auto need_no_arg = [&] {
        if (colon != std::string_view::npos) throw ParseError(0, "mapping '" + d.text + "' takes no argument");
    };
    auto named_param = [&](std::string_view key) {
        if (arg.starts_with(key) && arg.size() > key.size() && arg[key.size()] == '=') arg.remove_prefix(key.size() + 1);
        auto v = text::parse_index(arg);
        if (!v) throw ParseError(0, "mapping '" + d.text + "' needs " + std::string(key) + "=<int>");
        return *v;
    };

    if (head == "jw") {
        need_no_arg();
        d.kind = Kind::Jw;
    } else if (head == "parity") {
        need_no_arg();
        d.kind = Kind::Parity;
    } else if (head == "bk" || head == "bk-tree") {
        need_no_arg();
        d.kind = Kind::Fenwick;
    } else if (head == "jw-variant") {
        need_no_arg();
        d.kind = Kind::JwVariant;
    } else if (head == "msp" || head == "msp-v1" || head == "msp-v2") {
        if (arg.empty()) throw ParseError(0, "mapping '" + d.text + "' needs a vector, e.g. msp:2-3-2");
        d.kind = head == "msp" ? Kind::Msp : head == "msp-v1" ? Kind::MspV1 : Kind::MspV2;
        d.vector = parse_msp_vector(arg);
    } else if (head == "2sp") {
        d.kind = Kind::TwoSp;
        d.param = named_param("w");
    } else if (head == "sbk") {
        d.kind = Kind::Sbk;
        d.param = named_param("h");
    } else {
        throw ParseError(0, "unknown mapping '" + d.text + "'");
    }
    return d;
}

} // namespace fermap

#pragma once

// Partitions, compositions, permutations and the refinement statistics that
// the quasisymmetric power sums are built from.

#include "qimm/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qimm {

/// Ordered tuple of positive integers.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }
    Composition(std::initializer_list<int> parts) : parts_(parts) { validate(); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int order() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int back() const { return parts_.back(); }

    auto operator<=>(const Composition&) const = default;

private:
    void validate() const {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be positive");
    }

    std::vector<int> parts_;
};

/// Weakly decreasing tuple of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }
    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int order() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int operator[](std::size_t i) const { return parts_[i]; }

    Composition as_composition() const { return Composition(parts_); }

    auto operator<=>(const Partition&) const = default;

private:
    void validate() const {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    std::vector<int> parts_;
};

/// Bijection of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) { validate(); }
    Permutation(std::initializer_list<int> images) : images_(images) { validate(); }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    const std::vector<int>& images() const noexcept { return images_; }
    int size() const noexcept { return static_cast<int>(images_.size()); }
    /// Image of i, 1-based.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    auto operator<=>(const Permutation&) const = default;

private:
    void validate() const {
        std::vector<bool> seen(images_.size() + 1, false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("not a permutation of 1..n");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    std::vector<int> images_;
};

// ---------------------------------------------------------------------------
// Refinement machinery

inline Partition sort_composition(const Composition& alpha) {
    std::vector<int> v = alpha.parts();
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
}

/// Partial sums α₁, α₁+α₂, ..., excluding the full sum.
inline std::set<int> descent_set(const Composition& alpha) {
    std::set<int> out;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
        acc += alpha[i];
        out.insert(acc);
    }
    return out;
}

namespace detail {

inline void require_same_order(const Composition& a, const Composition& b, const char* what) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(what) + ": compositions of different order");
}

}  // namespace detail

/// β ⪯ α: α is obtained from β by summing consecutive parts.
inline bool refines(const Composition& beta, const Composition& alpha) {
    detail::require_same_order(beta, alpha, "refines");
    auto fine = descent_set(beta);
    for (int d : descent_set(alpha))
        if (!fine.contains(d)) return false;
    return true;
}

/// Blocks β^(1),...,β^(ℓ(α)) of consecutive parts of β summing to the parts of α.
inline std::vector<Composition> split_blocks(const Composition& beta, const Composition& alpha) {
    if (!refines(beta, alpha)) throw std::invalid_argument("split_blocks: beta does not refine alpha");
    std::vector<Composition> blocks;
    blocks.reserve(alpha.length());
    std::size_t k = 0;
    for (int target : alpha.parts()) {
        std::vector<int> block;
        int sum = 0;
        while (sum < target) {
            sum += beta[k];
            block.push_back(beta[k]);
            ++k;
        }
        blocks.emplace_back(std::move(block));
    }
    return blocks;
}

/// ℓ(β, α): product of the block lengths.
inline Integer ell_stat(const Composition& beta, const Composition& alpha) {
    Integer out = 1;
    for (const auto& b : split_blocks(beta, alpha)) out *= static_cast<unsigned long>(b.length());
    return out;
}

/// lp(β, α): product of the last part of each block.
inline Integer lp_stat(const Composition& beta, const Composition& alpha) {
    Integer out = 1;
    for (const auto& b : split_blocks(beta, alpha)) out *= b.back();
    return out;
}

/// Centralizer order 1^{m₁}m₁! 2^{m₂}m₂! ⋯
inline Integer z_of(const Partition& lambda) {
    Integer out = 1;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        const auto mult = static_cast<unsigned long>(j - i);
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p[i]), mult);
        out *= pw * factorial(static_cast<int>(mult));
        i = j;
    }
    return out;
}

inline Integer z_of(const Composition& alpha) { return z_of(sort_composition(alpha)); }
inline Integer z_of_composition(const Composition& alpha) { return z_of(alpha); }

/// n!/z_λ, the size of the conjugacy class of cycle type λ.
inline Integer count_perms_with_ctype(const Partition& lambda) {
    return factorial(lambda.order()) / z_of(lambda);
}

// ---------------------------------------------------------------------------
// Cycles

/// Disjoint cycles, each written from its minimal element and following σ,
/// listed in lexicographic order (which for min-first cycles is order of
/// their minima).
inline std::vector<std::vector<int>> cycles(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::vector<int>> out;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cyc;
        for (int i = start; !seen[static_cast<std::size_t>(i)]; i = sigma(i)) {
            seen[static_cast<std::size_t>(i)] = true;
            cyc.push_back(i);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

inline Composition cycle_composition(const Permutation& sigma) {
    std::vector<int> lengths;
    for (const auto& c : cycles(sigma)) lengths.push_back(static_cast<int>(c.size()));
    return Composition(std::move(lengths));
}

inline Partition cycle_type(const Permutation& sigma) {
    return sort_composition(cycle_composition(sigma));
}

// ---------------------------------------------------------------------------
// Orders and enumeration

/// The ▶ order: compare sorted parts lexicographically, break ties by
/// comparing the compositions themselves lexicographically.
inline std::strong_ordering dominance_order(const Composition& alpha, const Composition& beta) {
    detail::require_same_order(alpha, beta, "dominance_order");
    if (auto c = sort_composition(alpha) <=> sort_composition(beta); c != 0) return c;
    return alpha <=> beta;
}

/// Descent-set bitmask: bit (d-1) set for each d ∈ Set(α). Compositions of n
/// correspond bijectively to codes in [0, 2^{n-1}).
inline std::uint32_t composition_code(const Composition& alpha) {
    std::uint32_t code = 0;
    for (int d : descent_set(alpha)) code |= std::uint32_t{1} << (d - 1);
    return code;
}

inline Composition composition_from_code(int n, std::uint32_t code) {
    if (n == 0) return {};
    std::vector<int> parts;
    int last = 0;
    for (int d = 1; d < n; ++d) {
        if (code & (std::uint32_t{1} << (d - 1))) {
            parts.push_back(d - last);
            last = d;
        }
    }
    parts.push_back(n - last);
    return Composition(std::move(parts));
}

inline std::size_t composition_count(int n) { return n == 0 ? 1 : std::size_t{1} << (n - 1); }

/// All compositions of n, ▶-descending.
inline std::vector<Composition> enumerate_compositions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_compositions: negative n");
    if (n > 31) throw std::invalid_argument("enumerate_compositions: n too large");
    std::vector<Composition> out;
    out.reserve(composition_count(n));
    for (std::uint32_t code = 0; code < composition_count(n); ++code)
        out.push_back(composition_from_code(n, code));
    std::sort(out.begin(), out.end(),
              [](const Composition& a, const Composition& b) { return dominance_order(a, b) > 0; });
    return out;
}

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// All partitions of n, lexicographically descending.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

/// All permutations of 1..n in lexicographic one-line order.
inline std::vector<Permutation> enumerate_permutations(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_permutations: negative n");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Rearrangements of λ, i.e. all α with sort(α) = λ, ▶-descending.
inline std::vector<Composition> rearrangements(const Partition& lambda) {
    std::vector<int> v = lambda.parts();
    std::sort(v.begin(), v.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    std::reverse(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Text syntax: "2,1,1", "" for the empty tuple, "2,1^3" for 2,1,1,1.

inline std::vector<int> parse_parts(std::string_view text) {
    std::vector<int> out;
    std::string_view s = detail::trim(text);
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        std::string_view tok = detail::trim(s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos));
        auto caret = tok.find('^');
        std::string_view base = detail::trim(tok.substr(0, caret));
        std::string_view rep = caret == std::string_view::npos ? std::string_view{"1"} : detail::trim(tok.substr(caret + 1));
        if (!detail::is_digit_run(base) || !detail::is_digit_run(rep) || base.size() > 6 || rep.size() > 6)
            throw std::invalid_argument("malformed index: '" + std::string(text) + "'");
        int value = std::stoi(std::string(base));
        int count = std::stoi(std::string(rep));
        if (value < 1) throw std::invalid_argument("index parts must be positive: '" + std::string(text) + "'");
        out.insert(out.end(), static_cast<std::size_t>(count), value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline Composition parse_composition(std::string_view text) { return Composition(parse_parts(text)); }
inline Partition parse_partition(std::string_view text) { return Partition(parse_parts(text)); }

inline std::string join_parts(const std::vector<int>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

inline std::string to_string(const Composition& a) { return join_parts(a.parts()); }
inline std::string to_string(const Partition& l) { return join_parts(l.parts()); }
inline std::string to_string(const Permutation& s) { return "[" + join_parts(s.images()) + "]"; }

}  // namespace qimm

#pragma once

// Irreducible characters of S_n and the permutation statistics used by the
// second immanant.

#include "qimm/combinatorics.hpp"
#include "qimm/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qimm {

/// A class function on S_n, stored as its value on each cycle type.
struct ClassFunction {
    int degree = 0;
    std::map<Partition, Rational> values;

    const Rational& operator()(const Partition& mu) const {
        auto it = values.find(mu);
        if (it == values.end()) throw std::invalid_argument("class function: cycle type of wrong degree");
        return it->second;
    }

    bool operator==(const ClassFunction&) const = default;
};

namespace detail {

// Memo for χ^λ(μ) keyed on (λ, μ). Get-or-compute; concurrent misses may
// duplicate work but always store the same value.
class CharacterMemo {
public:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    bool find(const Key& k, Integer& out) const {
        std::lock_guard lock(mutex_);
        auto it = table_.find(k);
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }

    void store(Key k, const Integer& v) {
        std::lock_guard lock(mutex_);
        table_.emplace(std::move(k), v);
    }

private:
    mutable std::mutex mutex_;
    std::map<Key, Integer> table_;
};

inline CharacterMemo& character_memo() {
    static CharacterMemo memo;
    return memo;
}

// Border-strip recursion on β-numbers: removing a rim hook of size r moves a
// bead from position b to b-r; its sign is (-1)^(beads strictly between).
inline Integer murnaghan_nakayama(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (mu.empty()) return lambda.empty() ? Integer(1) : Integer(0);

    CharacterMemo::Key key{lambda, mu};
    Integer cached;
    if (character_memo().find(key, cached)) return cached;

    const int r = mu.front();
    const std::vector<int> rest(mu.begin() + 1, mu.end());
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beads(lambda.size());
    for (int i = 0; i < len; ++i) beads[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

    Integer total = 0;
    for (std::size_t i = 0; i < beads.size(); ++i) {
        const int target = beads[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (int b : beads) {
            if (b == target) occupied = true;
            if (b > target && b < beads[i]) ++between;
        }
        if (occupied) continue;

        std::vector<int> moved = beads;
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> smaller;
        for (int j = 0; j < len; ++j) {
            int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (part > 0) smaller.push_back(part);
        }
        Integer sub = murnaghan_nakayama(smaller, rest);
        if (between % 2) total -= sub;
        else total += sub;
    }

    character_memo().store(std::move(key), total);
    return total;
}

}  // namespace detail

/// χ^λ evaluated on the class of cycle type μ.
inline Integer irreducible_character(const Partition& lambda, const Partition& mu) {
    if (lambda.order() != mu.order())
        throw std::invalid_argument("irreducible_character: partitions of different order");
    return detail::murnaghan_nakayama(lambda.parts(), mu.parts());
}

inline ClassFunction character_table_row(const Partition& lambda) {
    ClassFunction out{lambda.order(), {}};
    for (const auto& mu : enumerate_partitions(lambda.order()))
        out.values.emplace(mu, Rational(irreducible_character(lambda, mu)));
    return out;
}

inline int sign(const Permutation& sigma) {
    return (sigma.size() - static_cast<int>(cycles(sigma).size())) % 2 ? -1 : 1;
}

inline int fixed_points(const Permutation& sigma) {
    int f = 0;
    for (int i = 1; i <= sigma.size(); ++i)
        if (sigma(i) == i) ++f;
    return f;
}

/// Character of the hook (2,1^{n-2}): sign(σ)·(fixed points − 1).
inline int chi2(const Permutation& sigma) {
    if (sigma.size() < 2) throw std::invalid_argument("chi2 requires n >= 2");
    return sign(sigma) * (fixed_points(sigma) - 1);
}

}  // namespace qimm

#pragma once

// Quasisymmetric functions with exact rational coefficients.
//
// Elements are finite linear combinations of basis functions indexed by
// compositions, in one of three coordinate systems: the monomial basis M,
// or the type 1 (Psi) / type 2 (Phi) quasisymmetric power sums. The power
// sums are defined implicitly by the triangular relations
//
//   M_β = Σ_{α ⪰ β} (-1)^{ℓ(β)-ℓ(α)} lp(β,α)/z_α              Ψ_α
//   M_β = Σ_{α ⪰ β} (-1)^{ℓ(β)-ℓ(α)} (∏α_i)/(z_α ℓ(β,α))       Φ_α
//
// and M-coordinates of Ψ_α / Φ_α come from inverting those systems exactly.

#include "qimm/characters.hpp"
#include "qimm/combinatorics.hpp"
#include "qimm/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qimm {

enum class Basis { M, Psi, Phi };

inline std::string to_string(Basis b) {
    switch (b) {
        case Basis::M: return "M";
        case Basis::Psi: return "Psi";
        case Basis::Phi: return "Phi";
    }
    return "?";
}

inline Basis parse_basis(std::string_view s) {
    if (s == "M" || s == "m") return Basis::M;
    if (s == "Psi" || s == "psi" || s == "PSI") return Basis::Psi;
    if (s == "Phi" || s == "phi" || s == "PHI") return Basis::Phi;
    throw std::invalid_argument("unknown basis: '" + std::string(s) + "'");
}

/// Finite linear combination Σ c_α X_α in a fixed coordinate basis X.
/// Zero coefficients are never stored.
class QSymElement {
public:
    using Terms = std::map<Composition, Rational>;

    explicit QSymElement(Basis basis = Basis::M) : basis_(basis) {}

    static QSymElement basis_element(Basis basis, const Composition& alpha, const Rational& c = 1) {
        QSymElement q(basis);
        q.add_term(alpha, c);
        return q;
    }

    static QSymElement unit(Basis basis = Basis::M) { return basis_element(basis, Composition{}); }

    Basis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Composition& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Composition& alpha, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::set<int> degrees() const {
        std::set<int> out;
        for (const auto& [alpha, c] : terms_) out.insert(alpha.order());
        return out;
    }

    /// Degree of a nonzero homogeneous element; nullopt for zero or mixed.
    std::optional<int> homogeneous_degree() const {
        auto d = degrees();
        if (d.size() != 1) return std::nullopt;
        return *d.begin();
    }

    /// Restriction to the terms of a single degree.
    QSymElement component(int degree) const {
        QSymElement out(basis_);
        for (const auto& [alpha, c] : terms_)
            if (alpha.order() == degree) out.terms_.emplace(alpha, c);
        return out;
    }

    QSymElement& operator+=(const QSymElement& other) {
        require_same_basis(other);
        for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
        return *this;
    }

    QSymElement& operator-=(const QSymElement& other) {
        require_same_basis(other);
        for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
        return *this;
    }

    QSymElement& operator*=(const Rational& s) {
        if (s == 0) terms_.clear();
        for (auto& [alpha, c] : terms_) c *= s;
        return *this;
    }

    friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
    friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
    friend QSymElement operator*(QSymElement a, const Rational& s) { return a *= s; }
    friend QSymElement operator*(const Rational& s, QSymElement a) { return a *= s; }

    bool operator==(const QSymElement& other) const {
        return basis_ == other.basis_ && terms_ == other.terms_;
    }

private:
    void require_same_basis(const QSymElement& other) const {
        if (basis_ != other.basis_) throw std::invalid_argument("QSym elements in different bases");
    }

    Basis basis_;
    Terms terms_;
};

/// Terms ordered by degree (highest first), then ▶-descending.
inline std::vector<std::pair<Composition, Rational>> ordered_terms(const QSymElement& q) {
    std::vector<std::pair<Composition, Rational>> out(q.terms().begin(), q.terms().end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.order() != b.first.order()) return a.first.order() > b.first.order();
        return dominance_order(a.first, b.first) > 0;
    });
    return out;
}

/// Human-readable form, e.g. "M[2,1] + M[1,1,1]" or "1/2*Psi[1,1] - 1/2*Psi[2]".
inline std::string to_string(const QSymElement& q) {
    if (q.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, c] : ordered_terms(q)) {
        Rational mag = abs(c);
        if (first) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        if (mag != 1) out += to_string(mag) + "*";
        out += to_string(q.basis()) + "[" + to_string(alpha) + "]";
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Product in the monomial basis

namespace detail {

// Quasi-shuffle of a[i..] and b[j..]: interleave, optionally merging one part
// of each into their sum.
inline void quasi_shuffle_rec(const std::vector<int>& a, std::size_t i, const std::vector<int>& b, std::size_t j,
                              std::vector<int>& prefix, std::map<Composition, Integer>& out) {
    if (i == a.size() && j == b.size()) {
        out[Composition(prefix)] += 1;
        return;
    }
    if (i < a.size()) {
        prefix.push_back(a[i]);
        quasi_shuffle_rec(a, i + 1, b, j, prefix, out);
        prefix.pop_back();
    }
    if (j < b.size()) {
        prefix.push_back(b[j]);
        quasi_shuffle_rec(a, i, b, j + 1, prefix, out);
        prefix.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        prefix.push_back(a[i] + b[j]);
        quasi_shuffle_rec(a, i + 1, b, j + 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

inline std::map<Composition, Integer> quasi_shuffle(const Composition& a, const Composition& b) {
    std::map<Composition, Integer> out;
    std::vector<int> prefix;
    detail::quasi_shuffle_rec(a.parts(), 0, b.parts(), 0, prefix, out);
    return out;
}

inline QSymElement m_product(const QSymElement& a, const QSymElement& b) {
    if (a.basis() != Basis::M || b.basis() != Basis::M)
        throw std::invalid_argument("m_product: both factors must be in M coordinates");
    QSymElement out(Basis::M);
    for (const auto& [alpha, ca] : a.terms())
        for (const auto& [beta, cb] : b.terms()) {
            const Rational c = ca * cb;
            for (const auto& [gamma, mult] : quasi_shuffle(alpha, beta)) out.add_term(gamma, c * Rational(mult));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Symmetric functions embedded in QSym (all in M coordinates)

inline QSymElement monomial_sym(const Partition& lambda) {
    QSymElement out(Basis::M);
    for (const auto& alpha : rearrangements(lambda)) out.add_term(alpha, 1);
    return out;
}

namespace detail {

template <class Factor>
QSymElement product_over_parts(const Partition& lambda, Factor&& factor) {
    QSymElement out = QSymElement::unit(Basis::M);
    for (int part : lambda.parts()) out = m_product(out, factor(part));
    return out;
}

}  // namespace detail

/// p_λ = ∏ M_(λ_i).
inline QSymElement power_sym(const Partition& lambda) {
    return detail::product_over_parts(lambda, [](int k) { return QSymElement::basis_element(Basis::M, Composition{k}); });
}

/// e_λ = ∏ M_(1^{λ_i}).
inline QSymElement elementary_sym(const Partition& lambda) {
    return detail::product_over_parts(lambda, [](int k) {
        return QSymElement::basis_element(Basis::M, Composition(std::vector<int>(static_cast<std::size_t>(k), 1)));
    });
}

/// h_λ = ∏ Σ_{α ⊨ λ_i} M_α.
inline QSymElement homogeneous_sym(const Partition& lambda) {
    return detail::product_over_parts(lambda, [](int k) {
        QSymElement h(Basis::M);
        for (const auto& alpha : enumerate_compositions(k)) h.add_term(alpha, 1);
        return h;
    });
}

/// s_λ = Σ_μ χ^λ(μ)/z_μ · p_μ.
inline QSymElement schur_sym(const Partition& lambda) {
    QSymElement out(Basis::M);
    for (const auto& mu : enumerate_partitions(lambda.order())) {
        Integer chi = irreducible_character(lambda, mu);
        if (chi == 0) continue;
        out += power_sym(mu) * ratio(chi, z_of(mu));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quasi-Schur functions

namespace detail {

// Filling of a composition diagram, row by row, left to right. Values are
// 1..ℓ(content); value v must be used exactly content[v-1] times.
class TableauCounter {
public:
    TableauCounter(const Composition& shape, const Composition& content)
        : shape_(shape.parts()), remaining_(content.parts()) {
        rows_.resize(shape_.size());
    }

    Integer count() {
        total_ = 0;
        place(0, 0);
        return total_;
    }

private:
    // Zero-padded entry of a completed row (or the current row's prefix).
    int padded(std::size_t row, int col) const {
        const auto& r = rows_[row];
        return col < static_cast<int>(r.size()) ? r[static_cast<std::size_t>(col)] : 0;
    }

    bool admissible(std::size_t row, int col, int v) const {
        if (col > 0 && v > rows_[row][static_cast<std::size_t>(col - 1)]) return false;
        if (col == 0 && row > 0 && v <= rows_[row - 1][0]) return false;
        if (col > 0) {
            for (std::size_t i = 0; i < row; ++i)
                if (v >= padded(i, col) && v <= padded(i, col - 1)) return false;
        }
        return true;
    }

    void place(std::size_t row, int col) {
        if (row == shape_.size()) {
            ++total_;
            return;
        }
        if (col == shape_[row]) {
            place(row + 1, 0);
            return;
        }
        int upper = col > 0 ? rows_[row][static_cast<std::size_t>(col - 1)] : static_cast<int>(remaining_.size());
        for (int v = 1; v <= upper; ++v) {
            auto& left = remaining_[static_cast<std::size_t>(v - 1)];
            if (left == 0 || !admissible(row, col, v)) continue;
            --left;
            rows_[row].push_back(v);
            place(row, col + 1);
            rows_[row].pop_back();
            ++left;
        }
    }

    std::vector<int> shape_;
    std::vector<int> remaining_;
    std::vector<std::vector<int>> rows_;
    Integer total_;
};

}  // namespace detail

/// K_{α,β}: composition tableaux of shape α whose content has value i
/// appearing β_i times. Rows weakly decrease, the first column strictly
/// increases downward, and on the zero-padded rectangle, for i < j and k ≥ 2,
/// T(j,k) ≠ 0 and T(j,k) ≥ T(i,k) imply T(j,k) > T(i,k-1).
inline Integer count_composition_tableaux(const Composition& shape, const Composition& content) {
    if (shape.order() != content.order())
        throw std::invalid_argument("count_composition_tableaux: shape and content of different order");
    return detail::TableauCounter(shape, content).count();
}

/// 𝒮_α = Σ_β K_{α,β} M_β.
inline QSymElement quasischur(const Composition& alpha) {
    QSymElement out(Basis::M);
    for (const auto& beta : enumerate_compositions(alpha.order()))
        out.add_term(beta, Rational(count_composition_tableaux(alpha, beta)));
    return out;
}

// ---------------------------------------------------------------------------
// Transition matrices between M and the quasisymmetric power sums

enum class PowerSumKind { Psi, Phi };

inline Basis basis_of(PowerSumKind k) { return k == PowerSumKind::Psi ? Basis::Psi : Basis::Phi; }

/// Coefficient of X_α in M_β for X = Ψ or Φ (zero unless β ⪯ α).
inline Rational power_sum_relation_coefficient(PowerSumKind kind, const Composition& beta, const Composition& alpha) {
    if (!refines(beta, alpha)) return 0;
    const bool negative = (beta.length() - alpha.length()) % 2 == 1;
    Rational c;
    if (kind == PowerSumKind::Psi) {
        c = ratio(lp_stat(beta, alpha), z_of(alpha));
    } else {
        Integer prod = 1;
        for (int p : alpha.parts()) prod *= p;
        c = ratio(prod, z_of(alpha) * ell_stat(beta, alpha));
    }
    return negative ? Rational(-c) : c;
}

/// Degree-n change of coordinates between M and Ψ (or Φ). Rows and columns
/// are indexed by compositions of n in ▶-descending order, in which the
/// relation matrix is lower triangular.
struct TransitionMatrix {
    int degree = 0;
    PowerSumKind kind = PowerSumKind::Psi;
    std::vector<Composition> index;
    /// position[code] is the row/column of the composition with that descent code.
    std::vector<std::size_t> position;
    /// entries[β][α]: coefficient of X_α in M_β.
    std::vector<std::vector<Rational>> entries;
    /// inverse[α][β]: coefficient of M_β in X_α.
    std::vector<std::vector<Rational>> inverse;

    std::size_t size() const noexcept { return index.size(); }
    std::size_t position_of(const Composition& alpha) const { return position.at(composition_code(alpha)); }
};

inline TransitionMatrix build_transition(int n, PowerSumKind kind) {
    if (n < 0) throw std::invalid_argument("build_transition: negative degree");
    TransitionMatrix t;
    t.degree = n;
    t.kind = kind;
    t.index = enumerate_compositions(n);
    const std::size_t size = t.index.size();
    t.position.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i) t.position[composition_code(t.index[i])] = i;

    t.entries.assign(size, std::vector<Rational>(size));
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c <= r; ++c)
            t.entries[r][c] = power_sum_relation_coefficient(kind, t.index[r], t.index[c]);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = r + 1; c < size; ++c)
            if (refines(t.index[r], t.index[c]))
                throw std::logic_error("transition matrix is not lower triangular in the ▶ order");

    // Forward substitution for the lower-triangular inverse.
    t.inverse.assign(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i) {
        const Rational& diag = t.entries[i][i];
        if (diag == 0) throw std::logic_error("singular transition matrix");
        t.inverse[i][i] = 1 / diag;
        for (std::size_t j = 0; j < i; ++j) {
            Rational acc = 0;
            for (std::size_t k = j; k < i; ++k)
                if (t.entries[i][k] != 0 && t.inverse[k][j] != 0) acc += t.entries[i][k] * t.inverse[k][j];
            if (acc != 0) t.inverse[i][j] = -acc / diag;
        }
    }
    return t;
}

namespace detail {

class TransitionCache {
public:
    std::shared_ptr<const TransitionMatrix> get(int n, PowerSumKind kind) {
        const auto key = std::make_pair(n, kind);
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        auto built = std::make_shared<const TransitionMatrix>(build_transition(n, kind));
        std::lock_guard lock(mutex_);
        return cache_.try_emplace(key, std::move(built)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, PowerSumKind>, std::shared_ptr<const TransitionMatrix>> cache_;
};

inline TransitionCache& transition_cache() {
    static TransitionCache cache;
    return cache;
}

}  // namespace detail

/// Cached transition matrix for degree n.
inline std::shared_ptr<const TransitionMatrix> transition(int n, PowerSumKind kind) {
    return detail::transition_cache().get(n, kind);
}

namespace detail {

inline QSymElement power_sum_to_m(const QSymElement& q) {
    const PowerSumKind kind = q.basis() == Basis::Psi ? PowerSumKind::Psi : PowerSumKind::Phi;
    QSymElement out(Basis::M);
    for (int n : q.degrees()) {
        auto t = transition(n, kind);
        const QSymElement part = q.component(n);
        for (const auto& [alpha, c] : part.terms()) {
            const auto& row = t->inverse[t->position_of(alpha)];
            for (std::size_t b = 0; b < t->size(); ++b)
                if (row[b] != 0) out.add_term(t->index[b], c * row[b]);
        }
    }
    return out;
}

inline QSymElement m_to_power_sum(const QSymElement& q, PowerSumKind kind) {
    QSymElement out(basis_of(kind));
    for (int n : q.degrees()) {
        auto t = transition(n, kind);
        const QSymElement part = q.component(n);
        for (const auto& [beta, c] : part.terms()) {
            const auto& row = t->entries[t->position_of(beta)];
            for (std::size_t a = 0; a < t->size(); ++a)
                if (row[a] != 0) out.add_term(t->index[a], c * row[a]);
        }
    }
    return out;
}

}  // namespace detail

/// Re-express q in the target basis, degree by degree.
inline QSymElement to_coords(const QSymElement& q, Basis target) {
    if (q.basis() == target) return q;
    QSymElement in_m = q.basis() == Basis::M ? q : detail::power_sum_to_m(q);
    if (target == Basis::M) return in_m;
    return detail::m_to_power_sum(in_m, target == Basis::Psi ? PowerSumKind::Psi : PowerSumKind::Phi);
}

/// True iff q is symmetric, i.e. its M-coefficients are constant on each
/// rearrangement class.
inline bool is_symmetric(const QSymElement& q) {
    const QSymElement m = to_coords(q, Basis::M);
    std::set<Partition> checked;
    for (const auto& [alpha, c] : m.terms()) {
        Partition lambda = sort_composition(alpha);
        if (!checked.insert(lambda).second) continue;
        for (const auto& other : rearrangements(lambda))
            if (m.coefficient(other) != c) return false;
    }
    return true;
}

/// Coefficient of p_λ in a symmetric q, read off as the Ψ-coordinate of any
/// rearrangement of λ.
inline Rational p_coefficient(const QSymElement& q, const Partition& lambda) {
    if (!is_symmetric(q)) throw std::domain_error("p_coefficient: element is not symmetric");
    return to_coords(q.component(lambda.order()), Basis::Psi).coefficient(lambda.as_composition());
}

}  // namespace qimm

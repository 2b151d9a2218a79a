#pragma once

// Exact evaluation of permutation-sum matrix functions
//
//   Σ_{σ ∈ S_n} c(σ) ∏_i a_{i,σ(i)}
//
// where c depends on σ only through its cycle type or its cycle composition.
// Coefficients are materialized once per composition of n; the sum itself
// is a depth-first search over rows that only descends into nonzero entries
// and accumulates products per cycle class.

#include "qimm/characters.hpp"
#include "qimm/combinatorics.hpp"
#include "qimm/frobenius.hpp"
#include "qimm/qsym.hpp"
#include "qimm/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qimm {

/// Dense n×n matrix of exact rationals, n ≥ 1.
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n) {
        if (n == 0) throw std::invalid_argument("matrix dimension must be at least 1");
    }

    explicit SquareMatrix(const std::vector<std::vector<Rational>>& rows) : SquareMatrix(rows.size()) {
        for (std::size_t i = 0; i < n_; ++i) {
            if (rows[i].size() != n_) throw std::invalid_argument("matrix is not square");
            for (std::size_t j = 0; j < n_; ++j) (*this)(i, j) = rows[i][j];
        }
    }

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Permutation matrix with a_{i,σ(i)} = 1.
    static SquareMatrix of_permutation(const Permutation& sigma) {
        SquareMatrix m(static_cast<std::size_t>(sigma.size()));
        for (int i = 1; i <= sigma.size(); ++i)
            m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(sigma(i) - 1)) = 1;
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    bool operator==(const SquareMatrix&) const = default;

private:
    std::size_t n_;
    std::vector<Rational> entries_;
};

/// Which statistic of σ selects its coefficient.
enum class CycleKey { CycleType, CycleComposition };

/// Coefficients c_α for every composition α ⊨ n, stored by descent code.
struct CoefficientTable {
    int degree = 0;
    std::vector<Rational> by_code;
    std::string provenance;

    const Rational& operator[](const Composition& alpha) const {
        if (alpha.order() != degree) throw std::invalid_argument("coefficient table: composition of wrong order");
        return by_code[composition_code(alpha)];
    }

    template <class F>
    static CoefficientTable tabulate(int n, F&& coefficient_of, std::string provenance) {
        CoefficientTable t{n, std::vector<Rational>(composition_count(n)), std::move(provenance)};
        for (std::uint32_t code = 0; code < t.by_code.size(); ++code)
            t.by_code[code] = Rational(coefficient_of(composition_from_code(n, code)));
        return t;
    }

    /// Table constant on rearrangement classes: c_α = θ(sort α).
    static CoefficientTable of_class_function(const ClassFunction& theta, std::string provenance) {
        return tabulate(theta.degree, [&](const Composition& a) -> Rational { return theta(sort_composition(a)); },
                        std::move(provenance));
    }
};

/// Permutation whose cycles are consecutive blocks of sizes α₁, α₂, ...;
/// its cycle composition is α.
inline Permutation representative(const Composition& alpha) {
    std::vector<int> images;
    int start = 1;
    for (int len : alpha.parts()) {
        for (int k = 0; k < len; ++k) images.push_back(start + (k + 1) % len);
        start += len;
    }
    return Permutation(std::move(images));
}

namespace detail {

// Descent code of ccomp(σ) or ctype(σ) for σ given 0-based.
inline std::uint32_t cycle_key_code(const std::vector<int>& sigma, CycleKey key, std::vector<char>& seen,
                                    std::vector<int>& lengths) {
    const std::size_t n = sigma.size();
    std::fill(seen.begin(), seen.end(), 0);
    lengths.clear();
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t i = s; !seen[i]; i = static_cast<std::size_t>(sigma[i])) {
            seen[i] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    if (key == CycleKey::CycleType) std::sort(lengths.begin(), lengths.end(), std::greater<>());
    std::uint32_t code = 0;
    int acc = 0;
    for (std::size_t k = 0; k + 1 < lengths.size(); ++k) {
        acc += lengths[k];
        code |= std::uint32_t{1} << (acc - 1);
    }
    return code;
}

class PermutationSum {
public:
    PermutationSum(const SquareMatrix& a, CycleKey key)
        : a_(a), key_(key), n_(a.size()), sigma_(n_), used_(n_, 0), seen_(n_, 0), partial_(n_ + 1),
          class_sums_(composition_count(static_cast<int>(n_))), nonzero_(n_) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (a(i, j) != 0) nonzero_[i].push_back(j);
    }

    /// Σ of ∏ a_{i,σ(i)} over all σ in each cycle class, indexed by descent code.
    const std::vector<Rational>& run() {
        partial_[0] = 1;
        descend(0);
        return class_sums_;
    }

private:
    void descend(std::size_t row) {
        if (row == n_) {
            class_sums_[cycle_key_code(sigma_, key_, seen_, lengths_)] += partial_[n_];
            return;
        }
        for (std::size_t col : nonzero_[row]) {
            if (used_[col]) continue;
            used_[col] = 1;
            sigma_[row] = static_cast<int>(col);
            partial_[row + 1] = partial_[row] * a_(row, col);
            descend(row + 1);
            used_[col] = 0;
        }
    }

    const SquareMatrix& a_;
    CycleKey key_;
    std::size_t n_;
    std::vector<int> sigma_;
    std::vector<char> used_;
    std::vector<char> seen_;
    std::vector<int> lengths_;
    std::vector<Rational> partial_;
    std::vector<Rational> class_sums_;
    std::vector<std::vector<std::size_t>> nonzero_;
};

}  // namespace detail

/// Σ_σ coeff[key(σ)] ∏ a_{i,σ(i)}, skipping every σ through a zero entry.
inline Rational weighted_perm_sum(const SquareMatrix& a, const CoefficientTable& coeff, CycleKey key) {
    if (static_cast<std::size_t>(coeff.degree) != a.size())
        throw std::invalid_argument("weighted_perm_sum: coefficient table degree does not match matrix dimension");
    detail::PermutationSum summation(a, key);
    const auto& sums = summation.run();
    Rational total = 0;
    for (std::size_t code = 0; code < sums.size(); ++code)
        if (sums[code] != 0 && coeff.by_code[code] != 0) total += coeff.by_code[code] * sums[code];
    return total;
}

// ---------------------------------------------------------------------------
// Classical matrix functions

inline int dimension(const SquareMatrix& a) { return static_cast<int>(a.size()); }

namespace detail {

inline void require_order(const SquareMatrix& a, const Partition& lambda, const char* what) {
    if (lambda.order() != dimension(a))
        throw std::invalid_argument(std::string(what) + ": partition order does not match matrix dimension");
}

}  // namespace detail

inline Rational permanent(const SquareMatrix& a) {
    auto ones = CoefficientTable::tabulate(dimension(a), [](const Composition&) -> Rational { return Rational(1); }, "permanent");
    return weighted_perm_sum(a, ones, CycleKey::CycleType);
}

/// Determinant as the sign-weighted permutation sum.
inline Rational determinant(const SquareMatrix& a) {
    return weighted_perm_sum(a, CoefficientTable::of_class_function(sign_character(dimension(a)), "sign"),
                             CycleKey::CycleType);
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
inline Rational determinant_elimination(const SquareMatrix& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    Rational prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sgn * m[n - 1][n - 1];
}

/// Imm^λ(A) = Σ_σ χ^λ(ctype σ) ∏ a_{i,σ(i)}.
inline Rational immanant(const SquareMatrix& a, const Partition& lambda) {
    detail::require_order(a, lambda, "immanant");
    return weighted_perm_sum(a, CoefficientTable::of_class_function(character_table_row(lambda), "chi^" + to_string(lambda)),
                             CycleKey::CycleType);
}

inline CoefficientTable second_immanant_table(int n) {
    if (n < 2) throw std::invalid_argument("second immanant requires n >= 2");
    return CoefficientTable::tabulate(n, [](const Composition& a) -> Rational { return Rational(chi2(representative(a))); }, "chi2");
}

/// d₂(A), the immanant of the hook (2,1^{n-2}).
inline Rational second_immanant(const SquareMatrix& a) {
    return weighted_perm_sum(a, second_immanant_table(dimension(a)), CycleKey::CycleType);
}

inline Rational elementary_immanant(const SquareMatrix& a, const Partition& lambda) {
    detail::require_order(a, lambda, "elementary_immanant");
    return weighted_perm_sum(
        a, CoefficientTable::of_class_function(epsilon_class_function(lambda), "epsilon^" + to_string(lambda)),
        CycleKey::CycleType);
}

inline Rational monomial_immanant(const SquareMatrix& a, const Partition& lambda) {
    detail::require_order(a, lambda, "monomial_immanant");
    return weighted_perm_sum(a, CoefficientTable::of_class_function(phi_class_function(lambda), "phi^" + to_string(lambda)),
                             CycleKey::CycleType);
}

// ---------------------------------------------------------------------------
// Quasi-immanants

enum class QImmBranch {
    /// Symmetric elements go through p_ctype(σ), all others through the power-sum coordinates at ccomp(σ).
    Auto,
    /// Always use the power-sum coordinates at ccomp(σ), even for symmetric elements.
    ForceComposition,
};

struct QImmPlan {
    CoefficientTable table;
    CycleKey key;
};

/// Coefficient table of QImm^Q over S_n.
///
/// Symmetric Q: write n!·Q = Σ_σ θ(σ) p_ctype(σ) as a sum over permutations;
/// σ gets θ(σ) = z_μ·[p_μ]Q, the Frobenius preimage of Q (so s_λ gives χ^λ).
/// Otherwise σ gets n!·[X_ccomp(σ)]Q for X = Ψ or Φ, read per composition.
inline QImmPlan qimm_plan(const QSymElement& q, int n, PowerSumKind variant, QImmBranch branch = QImmBranch::Auto) {
    if (n < 1) throw std::invalid_argument("qimm: dimension must be at least 1");
    const auto degrees = q.degrees();
    if (degrees.size() > 1) throw std::invalid_argument("qimm: element is not homogeneous");
    if (degrees.size() == 1 && *degrees.begin() != n)
        throw std::invalid_argument("qimm: element degree does not match matrix dimension");

    const Rational nfact(factorial(n));
    const std::string tag = variant == PowerSumKind::Psi ? "Psi" : "Phi";
    if (branch == QImmBranch::Auto && is_symmetric(q)) {
        return {CoefficientTable::of_class_function(class_function_of(q, n), "qimm/" + tag + "/sym"), CycleKey::CycleType};
    }
    const QSymElement coords = to_coords(q, basis_of(variant));
    return {CoefficientTable::tabulate(n, [&](const Composition& a) -> Rational { return nfact * coords.coefficient(a); },
                                       "qimm/" + tag),
            CycleKey::CycleComposition};
}

inline Rational qimm(const SquareMatrix& a, const QSymElement& q, PowerSumKind variant,
                     QImmBranch branch = QImmBranch::Auto) {
    const auto plan = qimm_plan(q, dimension(a), variant, branch);
    return weighted_perm_sum(a, plan.table, plan.key);
}

/// Closed-form coefficient of QImm_Ψ^{𝒮_(2,1^{n-2})} at cycle composition α:
/// (-1)^{n-ℓ(α)}·n!/z_α if α₁ = 1, (-1)^{n-1-ℓ(α)}·n!/z_α if α₁ = 2, else 0.
inline Integer hook_quasischur_coefficient(const Composition& alpha) {
    const int n = alpha.order();
    if (n < 3) throw std::invalid_argument("hook quasi-Schur coefficient requires n >= 3");
    const int len = static_cast<int>(alpha.length());
    const Integer count = count_perms_with_ctype(sort_composition(alpha));
    if (alpha[0] == 1) return (n - len) % 2 ? Integer(-count) : count;
    if (alpha[0] == 2) return (n - 1 - len) % 2 ? Integer(-count) : count;
    return 0;
}

inline CoefficientTable hook_quasischur_table(int n) {
    if (n < 3) throw std::invalid_argument("qimm_hook_fast requires n >= 3");
    return CoefficientTable::tabulate(
        n, [](const Composition& a) -> Rational { return Rational(hook_quasischur_coefficient(a)); }, "hook-rule");
}

/// QImm_Ψ^{𝒮_(2,1^{n-2})}(A) via the closed-form coefficient rule.
inline Rational qimm_hook_fast(const SquareMatrix& a) {
    return weighted_perm_sum(a, hook_quasischur_table(dimension(a)), CycleKey::CycleComposition);
}

}  // namespace qimm

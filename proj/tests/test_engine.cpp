#include "oracles.hpp"
#include "qimm/engine.hpp"
#include "qimm/verification.hpp"

#include <gtest/gtest.h>

#include <chrono>

using namespace qimm;

namespace {

SquareMatrix from_ints(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return SquareMatrix(r);
}

SquareMatrix ones(int n) {
    SquareMatrix m(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) m(i, j) = 1;
    return m;
}

Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

}  // namespace

TEST(SquareMatrix, Validation) {
    EXPECT_THROW(SquareMatrix(0), std::invalid_argument);
    EXPECT_THROW(from_ints({{1, 2}, {3}}), std::invalid_argument);
    EXPECT_EQ(SquareMatrix::of_permutation(Permutation::identity(3)), SquareMatrix::identity(3));
}

TEST(ClassicalFunctions, SmallExamples) {
    const auto a = from_ints({{1, 2}, {3, 4}});
    EXPECT_EQ(determinant(a), -2);
    EXPECT_EQ(determinant_elimination(a), -2);
    EXPECT_EQ(permanent(a), 10);
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(determinant(SquareMatrix::identity(static_cast<std::size_t>(n))), 1);
        EXPECT_EQ(permanent(SquareMatrix::identity(static_cast<std::size_t>(n))), 1);
    }
    EXPECT_EQ(determinant(ones(3)), 0);
    EXPECT_EQ(determinant_elimination(ones(3)), 0);
    EXPECT_EQ(permanent(ones(3)), 6);
    // Zero leading entry forces a row swap.
    EXPECT_EQ(determinant_elimination(from_ints({{0, 1}, {1, 0}})), -1);
}

TEST(WeightedPermSum, SingleEntry) {
    const auto table = CoefficientTable::tabulate(1, [](const Composition&) -> Rational { return Rational(3); }, "t");
    EXPECT_EQ(weighted_perm_sum(from_ints({{5}}), table, CycleKey::CycleType), 15);
    EXPECT_THROW(weighted_perm_sum(from_ints({{1, 0}, {0, 1}}), table, CycleKey::CycleType), std::invalid_argument);
}

TEST(Immanant, ReducesToDeterminantAndPermanent) {
    std::mt19937 rng(11);
    for (int n = 1; n <= 6; ++n) {
        const auto a = oracle::random_integer_matrix(n, rng);
        EXPECT_EQ(immanant(a, column(n)), determinant_elimination(a));
        EXPECT_EQ(immanant(a, Partition{n}), permanent(a));
        EXPECT_EQ(determinant(a), determinant_elimination(a));
    }
    EXPECT_THROW(immanant(ones(3), Partition{2}), std::invalid_argument);
}

TEST(Immanant, SecondImmanantCoefficientsOnS3) {
    const auto coeffs = permutation_coefficients([](const SquareMatrix& a) { return immanant(a, Partition{2, 1}); }, 3);
    const std::map<Permutation, Rational> expected = {
        {Permutation{1, 2, 3}, 2}, {Permutation{2, 3, 1}, -1}, {Permutation{3, 1, 2}, -1},
        {Permutation{1, 3, 2}, 0}, {Permutation{2, 1, 3}, 0},  {Permutation{3, 2, 1}, 0},
    };
    EXPECT_EQ(coeffs, expected);
}

TEST(SecondImmanant, Examples) {
    EXPECT_EQ(second_immanant(ones(3)), 0);
    for (int n = 2; n <= 6; ++n) EXPECT_EQ(second_immanant(SquareMatrix::identity(static_cast<std::size_t>(n))), n - 1);
    EXPECT_EQ(second_immanant(toeplitz_tridiagonal(4)), -1);
    EXPECT_THROW(second_immanant(from_ints({{1}})), std::invalid_argument);
    std::mt19937 rng(5);
    for (int n = 2; n <= 5; ++n) {
        const auto a = oracle::random_integer_matrix(n, rng);
        std::vector<int> hook(static_cast<std::size_t>(n - 1), 1);
        hook[0] = 2;
        EXPECT_EQ(second_immanant(a), immanant(a, Partition(hook)));
    }
}

TEST(ElementaryAndMonomialImmanants, TwoByTwo) {
    const auto a = from_ints({{2, 3}, {5, 7}});
    EXPECT_EQ(elementary_immanant(a, Partition{1, 1}), 2 * 2 * 7);
    EXPECT_EQ(monomial_immanant(a, Partition{1, 1}), determinant(a));
    EXPECT_EQ(elementary_immanant(from_ints({{9}}), Partition{1}), 9);
    EXPECT_THROW(elementary_immanant(a, Partition{3}), std::invalid_argument);
    EXPECT_THROW(monomial_immanant(a, Partition{1}), std::invalid_argument);
}

TEST(QImm, ExampleCoefficientsOnS3) {
    const auto s21 = quasischur(Composition{2, 1});
    const auto coeffs = permutation_coefficients([&](const SquareMatrix& a) { return qimm::qimm(a, s21, PowerSumKind::Psi); }, 3);
    const std::map<Permutation, Rational> expected = {
        {Permutation{1, 2, 3}, 1}, {Permutation{1, 3, 2}, -3}, {Permutation{2, 1, 3}, 3},
        {Permutation{3, 2, 1}, 3}, {Permutation{2, 3, 1}, 0},  {Permutation{3, 1, 2}, 0},
    };
    EXPECT_EQ(coeffs, expected);
    EXPECT_EQ(qimm::qimm(ones(3), s21, PowerSumKind::Psi), 4);
}

TEST(QImm, SymmetricBasesGiveClassicalImmanants) {
    std::mt19937 rng(20240717);
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            for (int trial = 0; trial < 3; ++trial) {
                const auto a = oracle::random_integer_matrix(n, rng);
                const Rational imm = immanant(a, lambda);
                const Rational elem = elementary_immanant(a, lambda);
                const Rational mono = monomial_immanant(a, lambda);
                for (auto kind : {PowerSumKind::Psi, PowerSumKind::Phi}) {
                    EXPECT_EQ(qimm::qimm(a, schur_sym(lambda), kind), imm) << to_string(lambda);
                    EXPECT_EQ(qimm::qimm(a, elementary_sym(lambda), kind), elem) << to_string(lambda);
                    EXPECT_EQ(qimm::qimm(a, monomial_sym(lambda), kind), mono) << to_string(lambda);
                }
            }
}

TEST(QImm, ColumnQuasiSchurIsDeterminant) {
    std::mt19937 rng(99);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 3; ++trial) {
            const auto a = oracle::random_integer_matrix(n, rng);
            EXPECT_EQ(qimm::qimm(a, quasischur(column(n).as_composition()), PowerSumKind::Psi), determinant_elimination(a));
            EXPECT_EQ(qimm::qimm(a, schur_sym(column(n)), PowerSumKind::Phi), determinant_elimination(a));
        }
}

TEST(QImm, HookRuleMatchesGenericEvaluation) {
    std::mt19937 rng(3);
    for (int n = 3; n <= 6; ++n) {
        const auto a = oracle::random_integer_matrix(n, rng);
        EXPECT_EQ(qimm_hook_fast(a), qimm::qimm(a, quasischur(hook_shape(n)), PowerSumKind::Psi)) << n;
        for (const auto& alpha : enumerate_compositions(n))
            if (alpha[0] > 2) { EXPECT_EQ(hook_quasischur_coefficient(alpha), 0); }
    }
    EXPECT_EQ(hook_quasischur_coefficient(Composition{1, 2}), -3);
    EXPECT_EQ(qimm_hook_fast(toeplitz_tridiagonal(4)), -3);
    EXPECT_THROW(qimm_hook_fast(ones(2)), std::invalid_argument);
}

// For symmetric Q the composition branch reads n!·[Ψ_α]Q per composition,
// which is the per-permutation weight θ scaled by the class size n!/z_μ.
TEST(QImm, CompositionBranchOnSymmetricQScalesByClassSize) {
    std::mt19937 rng(8);
    for (int n = 1; n <= 5; ++n) {
        const auto a = oracle::random_integer_matrix(n, rng);
        for (const auto& lambda : enumerate_partitions(n))
            for (const auto& q : {schur_sym(lambda), power_sym(lambda), homogeneous_sym(lambda), elementary_sym(lambda),
                                  monomial_sym(lambda)}) {
                const Rational expected = oracle::unpruned_perm_sum(a, [&](const Composition& c) -> Rational {
                    const Partition mu = sort_composition(c);
                    return Rational(count_perms_with_ctype(mu)) * Rational(z_of(mu)) * p_coefficient(q, mu);
                });
                for (auto kind : {PowerSumKind::Psi, PowerSumKind::Phi})
                    EXPECT_EQ(qimm::qimm(a, q, kind, QImmBranch::ForceComposition), expected) << to_string(q);
            }
    }
}

TEST(QImm, SymmetricBranchIsVariantIndependent) {
    std::mt19937 rng(9);
    for (int n = 1; n <= 5; ++n) {
        const auto a = oracle::random_integer_matrix(n, rng);
        for (const auto& lambda : enumerate_partitions(n))
            for (const auto& q : {power_sym(lambda), homogeneous_sym(lambda)})
                EXPECT_EQ(qimm::qimm(a, q, PowerSumKind::Psi), qimm::qimm(a, q, PowerSumKind::Phi)) << to_string(q);
    }
}

TEST(QImm, PruningMatchesUnprunedSum) {
    std::mt19937 rng(42);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            const auto a = oracle::random_integer_matrix(n, rng, -3, 3, 0.5);
            for (const auto& alpha : enumerate_compositions(n)) {
                const auto q = quasischur(alpha);
                const auto psi = to_coords(q, Basis::Psi);
                const Rational nfact(factorial(n));
                const Rational expected =
                    oracle::unpruned_perm_sum(a, [&](const Composition& c) -> Rational { return nfact * psi.coefficient(c); });
                EXPECT_EQ(qimm::qimm(a, q, PowerSumKind::Psi, QImmBranch::ForceComposition), expected) << to_string(alpha);
            }
        }
}

TEST(QImm, LinearInQ) {
    std::mt19937 rng(17);
    for (int n = 2; n <= 5; ++n) {
        const auto a = oracle::random_integer_matrix(n, rng);
        const auto comps = enumerate_compositions(n);
        const auto& x = comps.front();
        const auto& y = comps.back();
        const auto f = quasischur(x);
        const auto g = quasischur(y);
        const Rational c(2, 3);
        for (auto kind : {PowerSumKind::Psi, PowerSumKind::Phi}) {
            auto combo = f;
            combo *= c;
            combo += g;
            EXPECT_EQ(qimm::qimm(a, combo, kind, QImmBranch::ForceComposition),
                      c * qimm::qimm(a, f, kind, QImmBranch::ForceComposition) + qimm::qimm(a, g, kind, QImmBranch::ForceComposition));
        }
    }
}

// With distinct prime entries every monomial ∏ a_{i,σ(i)} is distinct, so
// agreement on one matrix pins down agreement coefficient by coefficient.
TEST(QImm, DistinctPrimesFingerprint) {
    const auto a = from_ints({{2, 3, 5, 7}, {11, 13, 17, 19}, {23, 29, 31, 37}, {41, 43, 47, 53}});
    const auto q = quasischur(Composition{2, 1, 1});
    const auto psi = to_coords(q, Basis::Psi);
    const Rational expected = oracle::unpruned_perm_sum(a, [&](const Composition& c) -> Rational {
        return Rational(factorial(4)) * psi.coefficient(c);
    });
    EXPECT_EQ(qimm::qimm(a, q, PowerSumKind::Psi), expected);
    EXPECT_EQ(qimm_hook_fast(a), expected);
}

TEST(QImm, Errors) {
    const auto a = ones(3);
    EXPECT_THROW(qimm::qimm(a, quasischur(Composition{2, 1, 1}), PowerSumKind::Psi), std::invalid_argument);
    auto mixed = quasischur(Composition{2, 1});
    mixed += QSymElement::basis_element(Basis::M, Composition{1});
    EXPECT_THROW(qimm::qimm(a, mixed, PowerSumKind::Psi), std::invalid_argument);
    EXPECT_EQ(qimm::qimm(a, QSymElement(Basis::M), PowerSumKind::Phi), 0);
}

TEST(QImm, DenseEightByEightIsFast) {
    std::mt19937 rng(2024);
    const auto a = oracle::random_integer_matrix(8, rng);
    const auto start = std::chrono::steady_clock::now();
    const Rational v = qimm::qimm(a, quasischur(Composition{3, 2, 2, 1}), PowerSumKind::Psi);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_LT(secs, 10.0);
    EXPECT_EQ(v, qimm::qimm(a, quasischur(Composition{3, 2, 2, 1}), PowerSumKind::Psi, QImmBranch::ForceComposition));
}

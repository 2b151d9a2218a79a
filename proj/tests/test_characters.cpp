#include "oracles.hpp"
#include "qimm/characters.hpp"
#include "qimm/frobenius.hpp"

#include <gtest/gtest.h>

using namespace qimm;

TEST(IrreducibleCharacter, TrivialAndSign) {
    for (int n = 1; n <= 6; ++n) {
        const Partition row({n});
        const Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& mu : enumerate_partitions(n)) {
            EXPECT_EQ(irreducible_character(row, mu), 1);
            EXPECT_EQ(irreducible_character(column, mu), (n - static_cast<int>(mu.length())) % 2 ? -1 : 1);
        }
    }
}

TEST(IrreducibleCharacter, SmallValues) {
    EXPECT_EQ(irreducible_character({2, 1}, {1, 1, 1}), 2);
    EXPECT_EQ(irreducible_character({2, 1}, {2, 1}), 0);
    EXPECT_EQ(irreducible_character({2, 1}, {3}), -1);
    // S_4 table row for (2,2): classes 1⁴, 21², 2², 31, 4.
    EXPECT_EQ(irreducible_character({2, 2}, {1, 1, 1, 1}), 2);
    EXPECT_EQ(irreducible_character({2, 2}, {2, 1, 1}), 0);
    EXPECT_EQ(irreducible_character({2, 2}, {2, 2}), 2);
    EXPECT_EQ(irreducible_character({2, 2}, {3, 1}), -1);
    EXPECT_EQ(irreducible_character({2, 2}, {4}), 0);
    EXPECT_EQ(irreducible_character({}, {}), 1);
    EXPECT_THROW(irreducible_character({2, 1}, {2}), std::invalid_argument);
}

TEST(IrreducibleCharacter, ColumnOrthogonality) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            Integer sum = 0;
            for (const auto& lambda : enumerate_partitions(n)) {
                Integer c = irreducible_character(lambda, mu);
                sum += c * c;
            }
            EXPECT_EQ(sum, z_of(mu)) << to_string(mu);
        }
}

TEST(IrreducibleCharacter, DimensionsMatchHookLengthFormula) {
    for (int n = 1; n <= 6; ++n) {
        const Partition identity_class(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& lambda : enumerate_partitions(n))
            EXPECT_EQ(irreducible_character(lambda, identity_class), oracle::hook_length_count(lambda)) << to_string(lambda);
    }
}

TEST(PermutationStats, SignAndFixedPoints) {
    EXPECT_EQ(sign(Permutation::identity(5)), 1);
    EXPECT_EQ(fixed_points(Permutation::identity(5)), 5);
    EXPECT_EQ(sign(Permutation{1, 3, 2, 4}), -1);
    EXPECT_EQ(fixed_points(Permutation{1, 3, 2, 4}), 2);
    EXPECT_EQ(sign(Permutation{2, 1, 5, 4, 6, 7, 3}), 1);
    EXPECT_EQ(fixed_points(Permutation{2, 1, 5, 4, 6, 7, 3}), 1);
}

TEST(Chi2, Examples) {
    EXPECT_EQ(chi2(Permutation::identity(3)), 2);
    EXPECT_EQ(chi2(Permutation{1, 3, 2}), 0);
    EXPECT_EQ(chi2(Permutation{2, 3, 1}), -1);
    EXPECT_THROW(chi2(Permutation{1}), std::invalid_argument);
}

TEST(Chi2, AgreesWithHookCharacter) {
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> hook(static_cast<std::size_t>(n - 1), 1);
        hook[0] = 2;
        const Partition lambda(hook);
        for (const auto& sigma : enumerate_permutations(n))
            EXPECT_EQ(chi2(sigma), irreducible_character(lambda, cycle_type(sigma))) << to_string(sigma);
    }
}

TEST(Frobenius, CharactersMapToSchurFunctions) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            EXPECT_EQ(frobenius(character_table_row(lambda)), schur_sym(lambda)) << to_string(lambda);
            EXPECT_EQ(class_function_of(schur_sym(lambda), n), character_table_row(lambda));
        }
}

TEST(Frobenius, TrivialAndSignCharacters) {
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(frobenius(trivial_character(n)), homogeneous_sym(Partition{n}));
        EXPECT_EQ(frobenius(sign_character(n)), elementary_sym(Partition{n}));
    }
}

TEST(EpsilonCoeff, Examples) {
    EXPECT_EQ(epsilon_coeff({1, 1}, {1, 1}), 2);
    EXPECT_EQ(epsilon_coeff({1, 1}, {2}), 0);
    EXPECT_EQ(epsilon_coeff({2}, {2}), -1);
    EXPECT_EQ(epsilon_coeff({2}, {1, 1}), 1);
    EXPECT_THROW(epsilon_coeff({2}, {1}), std::invalid_argument);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(epsilon_class_function(Partition{n}), sign_character(n));
}

TEST(PhiCoeff, Examples) {
    // m_(1,1) = e₂ = (p₁² − p₂)/2
    EXPECT_EQ(phi_coeff({1, 1}, {2}), -1);
    EXPECT_EQ(phi_coeff({1, 1}, {1, 1}), 1);
    // m_(n) = p_n
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(phi_coeff(Partition{n}, Partition{n}), n);
        for (const auto& mu : enumerate_partitions(n))
            if (mu != Partition{n}) { EXPECT_EQ(phi_coeff(Partition{n}, mu), 0); }
    }
    EXPECT_THROW(phi_coeff({2}, {1}), std::invalid_argument);
}

TEST(Frobenius, EpsilonAndPhiArePreimages) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            EXPECT_EQ(frobenius(epsilon_class_function(lambda)), elementary_sym(lambda));
            EXPECT_EQ(frobenius(phi_class_function(lambda)), monomial_sym(lambda));
            for (const auto& mu : enumerate_partitions(n)) {
                EXPECT_EQ(epsilon_class_function(lambda)(mu), epsilon_coeff(lambda, mu));
                EXPECT_EQ(phi_class_function(lambda)(mu), phi_coeff(lambda, mu));
            }
        }
}

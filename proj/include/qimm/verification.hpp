#pragma once

// Independent checks of the hook quasi-Schur coefficient rule, the tridiagonal
// Toeplitz closed forms, and the worked 3×3 examples.

#include "qimm/characters.hpp"
#include "qimm/combinatorics.hpp"
#include "qimm/engine.hpp"
#include "qimm/qsym.hpp"
#include "qimm/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qimm {

struct ReportItem {
    std::string id;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct Report {
    std::vector<ReportItem> items;

    void check(std::string id, std::string expected, std::string got) {
        const bool pass = expected == got;
        items.push_back({std::move(id), std::move(expected), std::move(got), pass});
    }

    void append(const Report& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }

    bool all_pass() const {
        return std::all_of(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; });
    }

    std::size_t passed() const {
        return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const ReportItem& i) { return i.pass; }));
    }
};

/// Plain-text table: one line per item plus a summary line.
inline std::string render(const Report& report) {
    std::size_t w = 2;
    for (const auto& item : report.items) w = std::max(w, item.id.size());
    std::string out;
    for (const auto& item : report.items) {
        out += item.pass ? "PASS  " : "FAIL  ";
        out += item.id + std::string(w - item.id.size() + 2, ' ');
        out += "expected " + item.expected + "  got " + item.got + "\n";
    }
    out += std::to_string(report.passed()) + "/" + std::to_string(report.items.size()) + " checks passed\n";
    return out;
}

/// c_σ for QImm_Ψ^{𝒮_(2,1^{n-2})}, case by case on the first part of ccomp(σ).
inline Integer c_sigma(const Permutation& sigma) {
    const int n = sigma.size();
    if (n < 3) throw std::invalid_argument("c_sigma requires n >= 3");
    const Composition cc = cycle_composition(sigma);
    const Integer same_type = count_perms_with_ctype(cycle_type(sigma));
    const int len = static_cast<int>(cc.length());
    switch (cc[0]) {
        case 1: return (n - len) % 2 == 0 ? same_type : Integer(-same_type);
        case 2: return (n - 1 - len) % 2 == 0 ? same_type : Integer(-same_type);
        default: return 0;
    }
}

inline Composition hook_shape(int n) {
    if (n < 2) throw std::invalid_argument("hook (2,1^{n-2}) requires n >= 2");
    std::vector<int> parts(static_cast<std::size_t>(n - 1), 1);
    parts[0] = 2;
    return Composition(std::move(parts));
}

/// Compare c_σ against n!·[Ψ_ccomp(σ)] 𝒮_(2,1^{n-2}) for every σ ∈ S_n.
inline Report verify_hook_rule(int n) {
    if (n < 3) throw std::invalid_argument("verify_hook_rule requires n >= 3");
    const QSymElement psi = to_coords(quasischur(hook_shape(n)), Basis::Psi);
    const Rational nfact(factorial(n));
    Report report;
    for (const auto& sigma : enumerate_permutations(n)) {
        const Rational algebraic = nfact * psi.coefficient(cycle_composition(sigma));
        report.check("hook-rule/n=" + std::to_string(n) + "/" + to_string(sigma), to_string(c_sigma(sigma)),
                     to_string(algebraic));
    }
    return report;
}

/// Symmetric tridiagonal 0/1 Toeplitz matrix: a_{ij} = 1 iff |i-j| = 1.
inline SquareMatrix toeplitz_tridiagonal(int n) {
    if (n < 1) throw std::invalid_argument("toeplitz_tridiagonal requires n >= 1");
    SquareMatrix m(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        m(i, i + 1) = 1;
        m(i + 1, i) = 1;
    }
    return m;
}

/// d₂ of the tridiagonal Toeplitz matrix: (-1)^{n/2+1} for even n, else 0.
inline Rational toeplitz_d2_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("toeplitz_d2_closed_form requires n >= 2");
    if (n % 2) return 0;
    return (n / 2 + 1) % 2 ? -1 : 1;
}

/// QImm_Ψ^{𝒮_(2,1^{n-2})} of the tridiagonal Toeplitz matrix:
/// -(-1/2)^{n/2}·n!/(n/2)! for even n, else 0.
inline Rational toeplitz_qimm_closed_form(int n) {
    if (n < 3) throw std::invalid_argument("toeplitz_qimm_closed_form requires n >= 3");
    if (n % 2) return 0;
    const int h = n / 2;
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(h));
    Rational v = ratio(factorial(n), factorial(h) * pow2);
    return h % 2 ? v : Rational(-v);
}

/// Coefficient of ∏ a_{i,σ(i)} in f, for every σ ∈ S_n, read off by
/// evaluating f on permutation matrices.
inline std::map<Permutation, Rational> permutation_coefficients(const std::function<Rational(const SquareMatrix&)>& f,
                                                                int n) {
    std::map<Permutation, Rational> out;
    for (const auto& sigma : enumerate_permutations(n)) out.emplace(sigma, f(SquareMatrix::of_permutation(sigma)));
    return out;
}

inline Report verify_toeplitz(int max_n) {
    Report report;
    for (int n = 2; n <= max_n; ++n) {
        const SquareMatrix t = toeplitz_tridiagonal(n);
        report.check("toeplitz/d2/n=" + std::to_string(n), to_string(toeplitz_d2_closed_form(n)),
                     to_string(second_immanant(t)));
        if (n < 3) continue;
        const Rational expected = toeplitz_qimm_closed_form(n);
        report.check("toeplitz/qimm/n=" + std::to_string(n), to_string(expected),
                     to_string(qimm(t, quasischur(hook_shape(n)), PowerSumKind::Psi)));
        report.check("toeplitz/qimm-hook-rule/n=" + std::to_string(n), to_string(expected), to_string(qimm_hook_fast(t)));
    }
    return report;
}

/// Every worked numeric example this library covers, machine-checked.
inline Report reproduce_examples(int toeplitz_max_n = 8) {
    Report report;

    report.check("ccomp/[2,1,5,4,6,7,3]", "2,4,1", to_string(cycle_composition(Permutation{2, 1, 5, 4, 6, 7, 3})));

    const std::map<Permutation, std::string> qimm_display = {
        {Permutation{1, 2, 3}, "1"}, {Permutation{1, 3, 2}, "-3"}, {Permutation{2, 1, 3}, "3"},
        {Permutation{3, 2, 1}, "3"}, {Permutation{2, 3, 1}, "0"},  {Permutation{3, 1, 2}, "0"},
    };
    const std::map<Permutation, std::string> d2_display = {
        {Permutation{1, 2, 3}, "2"}, {Permutation{1, 3, 2}, "0"},  {Permutation{2, 1, 3}, "0"},
        {Permutation{3, 2, 1}, "0"}, {Permutation{2, 3, 1}, "-1"}, {Permutation{3, 1, 2}, "-1"},
    };
    const QSymElement s21 = quasischur(Composition{2, 1});
    const auto qimm_coeffs =
        permutation_coefficients([&](const SquareMatrix& a) { return qimm(a, s21, PowerSumKind::Psi); }, 3);
    const auto d2_coeffs = permutation_coefficients([](const SquareMatrix& a) { return second_immanant(a); }, 3);
    for (const auto& [sigma, expected] : qimm_display)
        report.check("s3/qimm/" + to_string(sigma), expected, to_string(qimm_coeffs.at(sigma)));
    for (const auto& [sigma, expected] : d2_display)
        report.check("s3/d2/" + to_string(sigma), expected, to_string(d2_coeffs.at(sigma)));
    report.check("s3/inequivalent", "true", qimm_coeffs != d2_coeffs ? "true" : "false");

    report.check("quasischur/2,1", "M[2,1] + M[1,1,1]", to_string(s21));
    report.check("power-sum-refinement/2,1", "Psi[2,1] + Psi[1,2]",
                 to_string(to_coords(power_sym(Partition{2, 1}), Basis::Psi)));
    report.check("power-sum-refinement/2,1/Phi", "Phi[2,1] + Phi[1,2]",
                 to_string(to_coords(power_sym(Partition{2, 1}), Basis::Phi)));

    report.append(verify_toeplitz(toeplitz_max_n));
    return report;
}

}  // namespace qimm

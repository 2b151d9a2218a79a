#pragma once

// Frobenius characteristic map and the class functions ε^λ, φ^λ that are the
// Frobenius preimages of e_λ and m_λ.

#include "qimm/characters.hpp"
#include "qimm/combinatorics.hpp"
#include "qimm/qsym.hpp"

#include <stdexcept>

namespace qimm {

/// θ ↦ Σ_μ θ(μ)/z_μ · p_μ  (the class-size form of (1/n!) Σ_σ θ(σ) p_ctype(σ)).
inline QSymElement frobenius(const ClassFunction& theta) {
    QSymElement out(Basis::M);
    for (const auto& mu : enumerate_partitions(theta.degree)) {
        const Rational& v = theta(mu);
        if (v == 0) continue;
        out += power_sym(mu) * (v / Rational(z_of(mu)));
    }
    return out;
}

/// Inverse of frobenius on a symmetric element of degree n: θ(μ) = z_μ·[p_μ]f.
inline ClassFunction class_function_of(const QSymElement& f, int n) {
    if (!is_symmetric(f)) throw std::domain_error("class_function_of: element is not symmetric");
    const QSymElement psi = to_coords(f.component(n), Basis::Psi);
    ClassFunction out{n, {}};
    for (const auto& mu : enumerate_partitions(n))
        out.values.emplace(mu, Rational(z_of(mu)) * psi.coefficient(mu.as_composition()));
    return out;
}

inline ClassFunction trivial_character(int n) {
    ClassFunction out{n, {}};
    for (const auto& mu : enumerate_partitions(n)) out.values.emplace(mu, Rational(1));
    return out;
}

inline ClassFunction sign_character(int n) {
    ClassFunction out{n, {}};
    for (const auto& mu : enumerate_partitions(n))
        out.values.emplace(mu, Rational((n - static_cast<int>(mu.length())) % 2 ? -1 : 1));
    return out;
}

/// ε^λ as a class function: e_λ = (1/n!) Σ_σ ε^λ(σ) p_ctype(σ).
inline ClassFunction epsilon_class_function(const Partition& lambda) {
    return class_function_of(elementary_sym(lambda), lambda.order());
}

/// φ^λ as a class function: m_λ = (1/n!) Σ_σ φ^λ(σ) p_ctype(σ).
inline ClassFunction phi_class_function(const Partition& lambda) {
    return class_function_of(monomial_sym(lambda), lambda.order());
}

inline Rational epsilon_coeff(const Partition& lambda, const Partition& mu) {
    if (lambda.order() != mu.order()) throw std::invalid_argument("epsilon_coeff: partitions of different order");
    return Rational(z_of(mu)) * p_coefficient(elementary_sym(lambda), mu);
}

inline Rational phi_coeff(const Partition& lambda, const Partition& mu) {
    if (lambda.order() != mu.order()) throw std::invalid_argument("phi_coeff: partitions of different order");
    return Rational(z_of(mu)) * p_coefficient(monomial_sym(lambda), mu);
}

}  // namespace qimm

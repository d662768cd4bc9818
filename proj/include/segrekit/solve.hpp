#pragma once

#include <cstdint>
#include <vector>

#include "segrekit/ideal.hpp"

namespace segrekit {

/// Dense univariate polynomial over Q(i); entry k is the coefficient of t^k.
using UniPoly = std::vector<GaussianRational>;

void trim(UniPoly& p);
/// Coefficients of `p`, which may only involve variable `var`.
UniPoly to_univariate(const Poly& p, std::size_t var);
int uni_degree(const UniPoly& p);
GaussianRational uni_eval(const UniPoly& p, const GaussianRational& t);
UniPoly uni_derivative(const UniPoly& p);
/// Monic gcd (zero polynomial when both inputs are zero).
UniPoly uni_gcd(UniPoly a, UniPoly b);
/// Quotient of exact division; DomainError when b does not divide a.
UniPoly uni_divide(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), monic.
UniPoly uni_squarefree(const UniPoly& p);

struct RootSet {
  std::vector<GaussianRational> roots;  // distinct
  bool complete = false;                // every root of p is listed
};

/// Distinct roots in Q(i): linear and quadratic formulas, binomials by repeated
/// square roots, otherwise numeric candidates confirmed by exact evaluation.
RootSet exact_roots(const UniPoly& p);

struct SolutionSet {
  std::vector<std::vector<GaussianRational>> points;  // aligned with the table
  bool complete = false;
};

/// All solutions of a zero-dimensional ideal by lex back-substitution, when exact.
SolutionSet solve_zero_dim(const Ideal& ideal, const EngineConfig& config = {});

/// Number of distinct solutions of a zero-dimensional ideal (adds squarefree
/// univariate eliminants, which yields the radical).
std::uint64_t radical_degree(const Ideal& ideal, const EngineConfig& config = {});

/// Univariate eliminant of I in variable `var` (generator of I intersected with k[var]).
UniPoly univariate_eliminant(const Ideal& ideal, std::size_t var, const EngineConfig& config = {});

}  // namespace segrekit

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qmpl/rational.hpp"
#include "qmpl/symbol.hpp"

namespace qmpl {

/// One seeded evaluation point: q avoids |q| in {0,1} so every q-integer is
/// invertible; the remaining coordinates are nonzero rationals.
struct EvalPoint {
    Rational q;
    std::vector<Rational> t;
    Rational x, y, a;

    /// Full assignment for substitution-based checks.
    std::map<Symbol, Rational> assignment() const;
    std::string str() const;  // "q=5/3 t=(2,-1) x=2 y=1/2 a=3"
};

/// Deterministic point stream: a fixed number of draws per point from the
/// given pools, driven by a 64-bit seed.
std::vector<EvalPoint> draw_points(int count, int depth, std::uint64_t seed,
                                   std::span<const Rational> q_pool,
                                   std::span<const Rational> t_pool);

/// Mixes a case ordinal into a suite seed, so per-case streams are stable
/// under any execution order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t ordinal);

}  // namespace qmpl

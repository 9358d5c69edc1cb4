#pragma once

#include <cmath>
#include <cstdint>

#include "edom/rational.hpp"

namespace edom {

/// At least r^2 s / (r + (s-1) lambda) blocks meet any s-point set.
/// Exact rational; equality in designs exactly on maximal arcs of order
/// 1 + (s-1) lambda / r.
inline Rat blocks_meeting_quadratic(std::uint32_t r, std::uint32_t lambda, std::uint64_t s) {
    return Rat(static_cast<std::int64_t>(r) * r * static_cast<std::int64_t>(s),
               static_cast<std::int64_t>(r) + static_cast<std::int64_t>(s - 1) * lambda);
}

/// At least r s - lambda C(s,2) blocks meet any s-point set; equality in
/// designs exactly when no block holds three points of the set.
inline Rat blocks_meeting_linear(std::uint32_t r, std::uint32_t lambda, std::uint64_t s) {
    return Rat(static_cast<std::int64_t>(r) * static_cast<std::int64_t>(s) -
               static_cast<std::int64_t>(lambda) * static_cast<std::int64_t>(s) *
                   (static_cast<std::int64_t>(s) - 1) / 2);
}

/// The linear count beats the quadratic one exactly when s < 1 + r/lambda.
inline bool linear_beats_quadratic(std::uint32_t r, std::uint32_t lambda, std::uint64_t s) {
    return Rat(static_cast<std::int64_t>(s)) < Rat(static_cast<std::int64_t>(lambda) + r, lambda);
}

/// Equinumerous incidence-free pairs in a (v,k,lambda)-design have
/// |X| <= r (k - r - 2 + sqrt((r-k)^2 + 4(r-lambda))) / (2 lambda) + 1.
inline double ifpair_upper_general(std::uint32_t k, std::uint32_t r, std::uint32_t lambda) {
    double rk = static_cast<double>(r) - k;
    double disc = std::sqrt(rk * rk + 4.0 * (static_cast<double>(r) - lambda));
    return r * (static_cast<double>(k) - r - 2.0 + disc) / (2.0 * lambda) + 1.0;
}

/// Symmetric specialization: k (sqrt(k - lambda) - 1) / lambda + 1.
inline double ifpair_upper_symmetric(std::uint32_t k, std::uint32_t lambda) {
    return k * (std::sqrt(static_cast<double>(k) - lambda) - 1.0) / lambda + 1.0;
}

/// gamma_e >= r (r + k - sqrt((r-k)^2 + 4(r-lambda))) / (2 lambda) for designs.
inline double gamma_lower_counting_general(std::uint32_t k, std::uint32_t r, std::uint32_t lambda) {
    double rk = static_cast<double>(r) - k;
    double disc = std::sqrt(rk * rk + 4.0 * (static_cast<double>(r) - lambda));
    return r * (static_cast<double>(r) + k - disc) / (2.0 * lambda);
}

/// Symmetric form k (k - sqrt(k - lambda)) / lambda.
inline double gamma_lower_counting_symmetric(std::uint32_t k, std::uint32_t lambda) {
    return k * (static_cast<double>(k) - std::sqrt(static_cast<double>(k) - lambda)) / lambda;
}

/// Restatement v - (k sqrt(k-lambda) - k)/lambda - 1 of the symmetric form.
inline double gamma_lower_symmetric_restated(std::uint32_t v, std::uint32_t k, std::uint32_t lambda) {
    return v - (k * std::sqrt(static_cast<double>(k) - lambda) - k) / lambda - 1.0;
}

/// Order of the maximal arc at the equality case of the counting bound:
/// (k - r + sqrt((r-k)^2 + 4(r-lambda))) / 2; sqrt(k-lambda) when r = k.
inline double arc_equality_order(std::uint32_t k, std::uint32_t r, std::uint32_t lambda) {
    double rk = static_cast<double>(r) - k;
    return (static_cast<double>(k) - r + std::sqrt(rk * rk + 4.0 * (static_cast<double>(r) - lambda))) / 2.0;
}

/// Kovari-Sos-Turan style edge count cap for K_{2,lambda+1}-free incidence
/// graphs: e(S,T) <= sqrt(lambda) (|S|-1) sqrt(|T|) + |T|.
inline double kst_edge_bound(std::uint32_t lambda, std::uint64_t s, std::uint64_t t) {
    return std::sqrt(static_cast<double>(lambda)) * (static_cast<double>(s) - 1.0) *
               std::sqrt(static_cast<double>(t)) +
           static_cast<double>(t);
}

/// Spectral lower bound for an SIS: gamma_e >= k v / (lambda_2 + k).
inline double gamma_lower_spectral(std::uint32_t v, std::uint32_t k, double lambda2) {
    return static_cast<double>(k) * v / (lambda2 + k);
}

/// Divisible semi-biplane closed form: gamma_e >= v - v / (sqrt(k) + 1).
inline double divisible_sbp_gamma_lower(std::uint32_t v, std::uint32_t k) {
    return v - v / (std::sqrt(static_cast<double>(k)) + 1.0);
}

/// The two closed forms discussed for PG(2,q) with q an even square. They
/// disagree by 2q - 2 sqrt(q); the arc-equality form is the one the exact
/// solver and the hyperoval construction confirm at q = 4.
inline double even_square_gamma_arc_form(std::uint64_t q) {
    double s = std::sqrt(static_cast<double>(q));
    return static_cast<double>(q) * q - q * s + 2.0 * q - s + 1.0;
}
inline double even_square_gamma_alt_form(std::uint64_t q) {
    double s = std::sqrt(static_cast<double>(q));
    return static_cast<double>(q) * q - q * s + s + 1.0;
}

/// Sampler guarantee threshold k ln k / (2 lambda) and its hypothesis
/// lambda <= k / (64 ln k).
inline double sampler_guarantee(std::uint32_t k, std::uint32_t lambda) {
    return k * std::log(static_cast<double>(k)) / (2.0 * lambda);
}
inline bool sampler_hypothesis(std::uint32_t k, std::uint32_t lambda) {
    return lambda <= static_cast<double>(k) / (64.0 * std::log(static_cast<double>(k)));
}

} // namespace edom

#include "sixstate/bell.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sixstate {

namespace {

constexpr double renorm_tolerance = 1e-9;

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

bell_diagonal::bell_diagonal(double a, double b, double c, double d) : p_{a, b, c, d} {
    double sum = 0.0;
    for (double& x : p_) {
        if (!(x >= -1e-15)) {  // also rejects NaN
            throw std::invalid_argument("bell_diagonal: entries must be non-negative, got " + std::to_string(x));
        }
        if (x < 0.0) x = 0.0;  // absorb harmless rounding dust
        sum += x;
    }
    if (!(std::fabs(sum - 1.0) <= renorm_tolerance)) {
        throw std::invalid_argument("bell_diagonal: entries sum to " + std::to_string(sum) + ", not 1");
    }
    for (double& x : p_) x /= sum;
}

bell_diagonal from_bit_error_depolarizing(double p) {
    if (!(p >= 0.0 && p <= 2.0 / 3.0)) {
        throw std::domain_error("from_bit_error_depolarizing: p must lie in [0, 2/3], got " + std::to_string(p));
    }
    return bell_diagonal(1.0 - 1.5 * p, 0.5 * p, 0.5 * p, 0.5 * p);
}

bell_diagonal hadamard_conjugate(const bell_diagonal& s) {
    return bell_diagonal(s.a(), s.c(), s.b(), s.d());
}

bell_diagonal bb84_symmetrize(const bell_diagonal& s) {
    const double m = 0.5 * (s.b() + s.c());
    return bell_diagonal(s.a(), m, m, s.d());
}

bell_diagonal t_conjugate(const bell_diagonal& s) {
    return bell_diagonal(s.a(), s.c(), s.d(), s.b());
}

bell_diagonal six_state_symmetrize(const bell_diagonal& s) {
    const double m = (s.b() + s.c() + s.d()) / 3.0;
    return bell_diagonal(s.a(), m, m, m);
}

double entropy4(const bell_diagonal& s) {
    double h = 0.0;
    for (double p : s.probs()) h += plogp(p);
    return h;
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("binary_entropy: p must lie in [0, 1], got " + std::to_string(p));
    }
    return plogp(p) + plogp(1.0 - p);
}

marginal_info marginals_and_mutual_info(const bell_diagonal& s) {
    marginal_info out{};
    out.h_bit = binary_entropy(s.b() + s.d());
    out.h_phase = binary_entropy(s.c() + s.d());
    out.mutual = out.h_bit + out.h_phase - entropy4(s);
    return out;
}

error_class sample_error_class(const bell_diagonal& s, double u) {
    // Cumulative order (none, phase, bit_flip, both): the event "bit flipped"
    // is the interval [a + c, 1), which only grows as error mass grows.
    if (u < s.a()) return error_class::none;
    if (u < s.a() + s.c()) return error_class::phase;
    if (u < s.a() + s.c() + s.b()) return error_class::bit_flip;
    return error_class::both;
}

pauli_pattern sample_pattern(const bell_diagonal& s, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample_pattern: n must be at least 1");
    random_stream rng(seed);
    pauli_pattern out{bit_vec(n), bit_vec(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const error_class k = sample_error_class(s, rng.uniform());
        if (k == error_class::bit_flip || k == error_class::both) out.bit_flips.set(i, true);
        if (k == error_class::phase || k == error_class::both) out.phase_flips.set(i, true);
    }
    return out;
}

twirl_op compose(twirl_op a, twirl_op b) {
    const bool a_h = a == twirl_op::hadamard;
    const bool b_h = b == twirl_op::hadamard;
    const bool a_t = a == twirl_op::t || a == twirl_op::t_squared;
    const bool b_t = b == twirl_op::t || b == twirl_op::t_squared;
    if ((a_h && b_t) || (a_t && b_h)) {
        throw std::invalid_argument("compose: hadamard and t generate no common group here");
    }
    if (a_h || b_h) {
        return a == b ? twirl_op::identity : twirl_op::hadamard;
    }
    // Remaining ops live in the cyclic group {identity, t, t_squared}.
    auto power = [](twirl_op op) -> int { return op == twirl_op::identity ? 0 : op == twirl_op::t ? 1 : 2; };
    const int k = (power(a) + power(b)) % 3;
    return k == 0 ? twirl_op::identity : k == 1 ? twirl_op::t : twirl_op::t_squared;
}

twirl_op inverse(twirl_op op) {
    switch (op) {
        case twirl_op::t:
            return twirl_op::t_squared;
        case twirl_op::t_squared:
            return twirl_op::t;
        default:
            return op;  // identity and hadamard are involutions
    }
}

bell_diagonal apply(twirl_op op, const bell_diagonal& s) {
    switch (op) {
        case twirl_op::identity:
            return s;
        case twirl_op::hadamard:
            return hadamard_conjugate(s);
        case twirl_op::t:
            return t_conjugate(s);
        case twirl_op::t_squared:
            return t_conjugate(t_conjugate(s));
    }
    throw std::invalid_argument("apply: unknown twirl_op");
}

error_class apply(twirl_op op, error_class k) {
    if (k == error_class::none) return k;
    // Relabelings on {bit_flip, phase, both}, matching the distribution maps:
    // hadamard swaps bit_flip and phase; t sends bit_flip -> both -> phase -> bit_flip.
    static constexpr error_class t_map[4] = {error_class::none, error_class::both, error_class::bit_flip, error_class::phase};
    switch (op) {
        case twirl_op::identity:
            return k;
        case twirl_op::hadamard:
            return k == error_class::bit_flip ? error_class::phase
                 : k == error_class::phase    ? error_class::bit_flip
                                              : k;
        case twirl_op::t:
            return t_map[static_cast<std::size_t>(k)];
        case twirl_op::t_squared:
            return t_map[static_cast<std::size_t>(t_map[static_cast<std::size_t>(k)])];
    }
    throw std::invalid_argument("apply: unknown twirl_op");
}

}  // namespace sixstate

#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "sixstate/bell.hpp"

using namespace sixstate;

namespace {

void check_close(const bell_diagonal& got, const bell_diagonal& want, double tol = 1e-12) {
    for (std::size_t i = 0; i < 4; ++i) CHECK(got.probs()[i] == doctest::Approx(want.probs()[i]).epsilon(tol));
}

}  // namespace

TEST_SUITE("bell") {

TEST_CASE("constructor validates and renormalizes") {
    const bell_diagonal s(0.7, 0.2, 0.06, 0.04);
    CHECK(s.a() == doctest::Approx(0.7));
    // off-by-<=1e-9 sums are renormalized to exactly 1
    const bell_diagonal t(0.7 + 4e-10, 0.2, 0.06, 0.04);
    CHECK(t.a() + t.b() + t.c() + t.d() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(bell_diagonal(0.7, 0.2, 0.06, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(bell_diagonal(1.2, -0.2, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bell_diagonal(0.5, 0.5, 0.5, -0.5), std::invalid_argument);
}

TEST_CASE("depolarizing channel family") {
    const bell_diagonal id = from_bit_error_depolarizing(0.0);
    CHECK(id.a() == 1.0);
    CHECK(id.b() == 0.0);

    const bell_diagonal s = from_bit_error_depolarizing(0.12);
    CHECK(s.a() == doctest::Approx(0.82).epsilon(1e-15));
    CHECK(s.b() == doctest::Approx(0.06).epsilon(1e-15));
    CHECK(s.c() == doctest::Approx(0.06).epsilon(1e-15));
    CHECK(s.d() == doctest::Approx(0.06).epsilon(1e-15));

    // marginal bit error probability is p by construction
    for (double p : {0.01, 0.1, 0.3, 0.66}) {
        const bell_diagonal x = from_bit_error_depolarizing(p);
        CHECK(x.b() + x.d() == doctest::Approx(p).epsilon(1e-14));
        CHECK(x.c() + x.d() == doctest::Approx(p).epsilon(1e-14));
    }

    // no-error probability at the six-state threshold
    CHECK(from_bit_error_depolarizing(0.126193).a() == doctest::Approx(0.8107105).epsilon(1e-9));

    CHECK_THROWS_AS(from_bit_error_depolarizing(-0.01), std::domain_error);
    CHECK_THROWS_AS(from_bit_error_depolarizing(0.67), std::domain_error);
}

TEST_CASE("hadamard conjugation swaps the two single-error slots") {
    const bell_diagonal s(0.7, 0.2, 0.06, 0.04);
    const bell_diagonal h = hadamard_conjugate(s);
    CHECK(h.a() == 0.7);
    CHECK(h.b() == 0.06);
    CHECK(h.c() == 0.2);
    CHECK(h.d() == 0.04);

    random_stream rng(100);
    for (int i = 0; i < 200; ++i) {
        const bell_diagonal r = oracle::random_state(rng);
        check_close(hadamard_conjugate(hadamard_conjugate(r)), r);
    }
}

TEST_CASE("bb84 symmetrization averages the single-error slots") {
    const bell_diagonal s(0.7, 0.2, 0.06, 0.04);
    const bell_diagonal t = bb84_symmetrize(s);
    CHECK(t.b() == doctest::Approx(0.13).epsilon(1e-15));
    CHECK(t.c() == doctest::Approx(0.13).epsilon(1e-15));
    CHECK(t.a() == 0.7);
    CHECK(t.d() == 0.04);

    const bell_diagonal e = bb84_symmetrize(bell_diagonal(0.0, 1.0, 0.0, 0.0));
    CHECK(e.b() == 0.5);
    CHECK(e.c() == 0.5);

    random_stream rng(101);
    for (int i = 0; i < 200; ++i) {
        const bell_diagonal r = oracle::random_state(rng);
        const bell_diagonal once = bb84_symmetrize(r);
        check_close(bb84_symmetrize(once), once);  // idempotent
        // average of identity and hadamard images
        const bell_diagonal h = hadamard_conjugate(r);
        check_close(once, bell_diagonal(0.5 * (r.a() + h.a()), 0.5 * (r.b() + h.b()), 0.5 * (r.c() + h.c()),
                                        0.5 * (r.d() + h.d())));
    }
}

TEST_CASE("t conjugation cycles the three error slots") {
    const bell_diagonal s(0.7, 0.2, 0.06, 0.04);
    const bell_diagonal t = t_conjugate(s);
    CHECK(t.a() == 0.7);
    CHECK(t.b() == 0.06);
    CHECK(t.c() == 0.04);
    CHECK(t.d() == 0.2);

    random_stream rng(102);
    for (int i = 0; i < 200; ++i) {
        const bell_diagonal r = oracle::random_state(rng);
        check_close(t_conjugate(t_conjugate(t_conjugate(r))), r);  // order three
    }
    // depolarizing states are fixed points
    const bell_diagonal dep = from_bit_error_depolarizing(0.3);
    check_close(t_conjugate(dep), dep);
}

TEST_CASE("six-state symmetrization equalizes the three error slots") {
    const bell_diagonal s(0.7, 0.2, 0.06, 0.04);
    const bell_diagonal t = six_state_symmetrize(s);
    CHECK(t.a() == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(t.b() == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(t.c() == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(t.d() == doctest::Approx(0.1).epsilon(1e-15));

    random_stream rng(103);
    for (int i = 0; i < 200; ++i) {
        const bell_diagonal r = oracle::random_state(rng);
        const bell_diagonal sym = six_state_symmetrize(r);
        check_close(six_state_symmetrize(sym), sym);  // idempotent
        // equals the average over the order-three cycle
        const bell_diagonal t1 = t_conjugate(r);
        const bell_diagonal t2 = t_conjugate(t1);
        check_close(sym, bell_diagonal((r.a() + t1.a() + t2.a()) / 3.0, (r.b() + t1.b() + t2.b()) / 3.0,
                                       (r.c() + t1.c() + t2.c()) / 3.0, (r.d() + t1.d() + t2.d()) / 3.0));
        // entropy can only grow under symmetrization
        CHECK(entropy4(sym) >= entropy4(r) - 1e-12);
    }
}

TEST_CASE("all operations conserve probability and non-negativity") {
    random_stream rng(104);
    for (int i = 0; i < 1000; ++i) {
        const bell_diagonal r = oracle::random_state(rng);
        for (const bell_diagonal& out : {hadamard_conjugate(r), bb84_symmetrize(r), t_conjugate(r), six_state_symmetrize(r)}) {
            double sum = 0.0;
            for (double p : out.probs()) {
                CHECK(p >= 0.0);
                sum += p;
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("entropy4 reference values") {
    CHECK(entropy4(bell_diagonal(1.0, 0.0, 0.0, 0.0)) == 0.0);
    CHECK(entropy4(bell_diagonal(0.25, 0.25, 0.25, 0.25)) == doctest::Approx(2.0).epsilon(1e-15));
    // frozen high-precision value for the depolarizing state at p = 0.12
    CHECK(entropy4(bell_diagonal(0.82, 0.06, 0.06, 0.06)) == doctest::Approx(0.96537029585808795).epsilon(1e-13));
    CHECK(entropy4(from_bit_error_depolarizing(0.12)) == doctest::Approx(0.96537029585808795).epsilon(1e-13));
}

TEST_CASE("entropy4 is invariant under slot permutations") {
    random_stream rng(105);
    for (int i = 0; i < 300; ++i) {
        const bell_diagonal r = oracle::random_state(rng);
        CHECK(entropy4(hadamard_conjugate(r)) == doctest::Approx(entropy4(r)).epsilon(1e-12));
        CHECK(entropy4(t_conjugate(r)) == doctest::Approx(entropy4(r)).epsilon(1e-12));
    }
}

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binary_entropy(0.05) == doctest::Approx(0.28639695711595613).epsilon(1e-13));
    CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
}

TEST_CASE("marginals and mutual information") {
    const marginal_info pure = marginals_and_mutual_info(bell_diagonal(1.0, 0.0, 0.0, 0.0));
    CHECK(pure.h_bit == 0.0);
    CHECK(pure.h_phase == 0.0);
    CHECK(pure.mutual == 0.0);

    // frozen values for depolarizing states
    CHECK(marginals_and_mutual_info(from_bit_error_depolarizing(0.12)).mutual ==
          doctest::Approx(0.09335143471664078).epsilon(1e-12));
    CHECK(marginals_and_mutual_info(from_bit_error_depolarizing(0.01)).mutual ==
          doctest::Approx(0.02545112418162827).epsilon(1e-12));

    // the product family has independent indicators: mutual information zero
    for (double p : {0.05, 0.1, 0.2, 0.35}) {
        const double q = 1.0 - p;
        const marginal_info info = marginals_and_mutual_info(bell_diagonal(q * q, p * q, p * q, p * p));
        CHECK(std::fabs(info.mutual) <= 1e-12);
        CHECK(info.h_bit == doctest::Approx(binary_entropy(p)).epsilon(1e-12));
    }

    // decomposition identity on random states
    random_stream rng(106);
    for (int i = 0; i < 300; ++i) {
        const bell_diagonal r = oracle::random_state(rng);
        const marginal_info info = marginals_and_mutual_info(r);
        CHECK(info.h_bit + info.h_phase - info.mutual == doctest::Approx(entropy4(r)).epsilon(1e-12));
    }
}

TEST_CASE("pattern sampling is deterministic and matches the distribution") {
    const bell_diagonal s = from_bit_error_depolarizing(0.12);
    const pauli_pattern p1 = sample_pattern(s, 4096, 42);
    const pauli_pattern p2 = sample_pattern(s, 4096, 42);
    CHECK(p1.bit_flips == p2.bit_flips);
    CHECK(p1.phase_flips == p2.phase_flips);
    CHECK(sample_pattern(s, 4096, 43).bit_flips != p1.bit_flips);

    const std::size_t n = 100000;
    const pauli_pattern big = sample_pattern(s, n, 7);
    const double bit_rate = static_cast<double>(big.bit_flips.weight()) / n;
    const double phase_rate = static_cast<double>(big.phase_flips.weight()) / n;
    CHECK(std::fabs(bit_rate - 0.12) <= oracle::binom_3sigma(0.12, n));
    CHECK(std::fabs(phase_rate - 0.12) <= oracle::binom_3sigma(0.12, n));

    const pauli_pattern none = sample_pattern(bell_diagonal(1, 0, 0, 0), 64, 1);
    CHECK(none.bit_flips.is_zero());
    CHECK(none.phase_flips.is_zero());

    const pauli_pattern all = sample_pattern(bell_diagonal(0, 0, 0, 1), 64, 1);
    CHECK(all.bit_flips.weight() == 64);
    CHECK(all.phase_flips.weight() == 64);

    CHECK_THROWS_AS(sample_pattern(s, 0, 1), std::invalid_argument);
}

TEST_CASE("twirl op algebra") {
    CHECK(compose(twirl_op::t, twirl_op::t) == twirl_op::t_squared);
    CHECK(compose(twirl_op::t, twirl_op::t_squared) == twirl_op::identity);
    CHECK(compose(twirl_op::t_squared, twirl_op::t_squared) == twirl_op::t);
    CHECK(compose(twirl_op::hadamard, twirl_op::hadamard) == twirl_op::identity);
    CHECK(compose(twirl_op::identity, twirl_op::hadamard) == twirl_op::hadamard);
    CHECK(compose(twirl_op::t, twirl_op::identity) == twirl_op::t);
    CHECK_THROWS_AS(compose(twirl_op::hadamard, twirl_op::t), std::invalid_argument);

    for (twirl_op op : {twirl_op::identity, twirl_op::hadamard, twirl_op::t, twirl_op::t_squared}) {
        CHECK(compose(op, inverse(op)) == twirl_op::identity);
    }

    // T cubed is the identity on states
    random_stream rng(107);
    const bell_diagonal r = oracle::random_state(rng);
    check_close(apply(compose(twirl_op::t, twirl_op::t_squared), r), r);
    check_close(apply(twirl_op::t_squared, r), t_conjugate(t_conjugate(r)));
}

TEST_CASE("class relabeling is consistent with the state maps") {
    // For each op, the push-forward of the class relabeling must reproduce
    // the conjugated distribution: P(apply(op, k) = j) = apply(op, s)[j].
    random_stream rng(108);
    const bell_diagonal r = oracle::random_state(rng);
    for (twirl_op op : {twirl_op::identity, twirl_op::hadamard, twirl_op::t, twirl_op::t_squared}) {
        const bell_diagonal mapped = apply(op, r);
        std::array<double, 4> pushed{};
        for (std::size_t k = 0; k < 4; ++k) {
            pushed[static_cast<std::size_t>(apply(op, static_cast<error_class>(k)))] += r.probs()[k];
        }
        for (std::size_t j = 0; j < 4; ++j) CHECK(pushed[j] == doctest::Approx(mapped.probs()[j]).epsilon(1e-12));
    }
}

TEST_CASE("error class sampling respects the cumulative layout") {
    const bell_diagonal s(0.4, 0.3, 0.2, 0.1);
    CHECK(sample_error_class(s, 0.0) == error_class::none);
    CHECK(sample_error_class(s, 0.39) == error_class::none);
    CHECK(sample_error_class(s, 0.41) == error_class::phase);   // phase occupies [0.4, 0.6)
    CHECK(sample_error_class(s, 0.61) == error_class::bit_flip);  // bit_flip occupies [0.6, 0.9)
    CHECK(sample_error_class(s, 0.91) == error_class::both);
}

}  // TEST_SUITE

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dugg/dual_scalar.hpp"
#include "dugg/graph_io.hpp"

using namespace dugg;

namespace {

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

template <BaseRing T>
bool near(const Dual<T>& a, const Dual<T>& b, double tol = 1e-12) {
    return max_abs_diff(a, b) <= tol;
}

template <BaseRing T>
Dual<T> random_dual(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    if constexpr (ring_of<T> == Ring::real) return {g(rng), g(rng)};
    else if constexpr (ring_of<T> == Ring::complex) return {{g(rng), g(rng)}, {g(rng), g(rng)}};
    else return {{g(rng), g(rng), g(rng), g(rng)}, {g(rng), g(rng), g(rng), g(rng)}};
}

}  // namespace

TEST_CASE("addition is componentwise") {
    CHECK(DualNumber{1, 2} + DualNumber{3, 4} == DualNumber{4, 6});
    const DualComplex a{{1, 2}, {3, 4}};
    CHECK(a + DualComplex{} == a);
    const DualQuaternion q{I, J};
    CHECK(q + DualQuaternion{-I, -J} == DualQuaternion{});
}

TEST_CASE("multiplication drops eps squared") {
    CHECK(DualNumber{1, 1} * DualNumber{1, -1} == DualNumber{1, 0});
    CHECK(DualQuaternion{I} * DualQuaternion{J} == DualQuaternion{K});
    CHECK(DualQuaternion{J} * DualQuaternion{I} == DualQuaternion{-K});
    const DualQuaternion q{I, J};
    CHECK(q * q == DualQuaternion{Quaternion{-1.0}});
}

TEST_CASE("conjugation") {
    CHECK(conj(DualComplex{{1, 2}, {3, -1}}) == DualComplex{{1, -2}, {3, 1}});
    CHECK(conj(DualNumber{4, -2}) == DualNumber{4, -2});
    CHECK(conj(DualQuaternion{J}) == DualQuaternion{-J});
}

TEST_CASE("magnitude") {
    // |a|^2 = a* a = 25 + 22 eps, whose square root is 5 + 2.2 eps.
    const DualComplex a{{3, 4}, {1, 2}};
    const DualNumber sq = squared_norm(a);
    CHECK(sq.s == doctest::Approx(25.0));
    CHECK(sq.d == doctest::Approx(22.0));
    const DualNumber m = magnitude(a);
    CHECK(m.s == doctest::Approx(5.0));
    CHECK(m.d == doctest::Approx(sq.d / (2.0 * std::sqrt(sq.s))));
    CHECK(m.d == doctest::Approx(2.2));

    CHECK(magnitude(DualComplex{{0, 0}, {0, 3}}) == DualNumber{0, 3});

    Rng rng(3);
    for (int k = 0; k < 20; ++k) {
        CHECK(near(magnitude(random_unit<Quaternion>(rng)), DualNumber{1.0}));
        CHECK(near(magnitude(random_unit<Complex>(rng)), DualNumber{1.0}));
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(DualNumber{2.0}) == DualNumber{0.5});
    const DualComplex a{{0, 1}, {0.5, 0}};
    const DualComplex inv = inverse(a);
    CHECK(near(inv, DualComplex{{0, -1}, {0.5, 0}}));
    CHECK(near(a * inv, DualComplex{{1, 0}}));
    CHECK(near(inv * a, DualComplex{{1, 0}}));
    CHECK_THROWS_AS(inverse(DualNumber{0.0, 1.0}), InfinitesimalNotInvertible);
    CHECK_THROWS_AS(inverse(DualQuaternion{{}, I}), InfinitesimalNotInvertible);
}

TEST_CASE("unit test of elements") {
    CHECK(is_unit(DualComplex{{0, 1}, {0.5, 0}}));
    CHECK_FALSE(is_unit(DualNumber{1, 1}));
    CHECK(is_unit(DualNumber{-1.0}));
    CHECK(is_unit(DualQuaternion{J, K}));  // j k* + k j* = -jk - kj = 0
    CHECK_FALSE(is_unit(DualQuaternion{J, J}));
}

TEST_CASE("dual number order") {
    CHECK(compare(DualNumber{1, 5}, DualNumber{2}) == std::strong_ordering::less);
    CHECK(compare(DualNumber{1, 1}, DualNumber{1}) == std::strong_ordering::greater);
    CHECK(compare(DualNumber{1, 1}, DualNumber{1, 1}) == std::strong_ordering::equal);
    CHECK(DualNumber{1, 5} < DualNumber{2});
    CHECK(DualNumber{1, 1} > DualNumber{1});

    CHECK(geq_tol({1.0, -1.0}, {1.0 + 1e-12, 0.0}, 1e-9) == false);
    CHECK(geq_tol({1.0, 0.0}, {1.0 + 1e-12, 0.0}, 1e-9));
    CHECK(geq_tol({1.0 - 1e-10, 5.0}, {1.0, 4.0}, 1e-9));
}

TEST_CASE("real part") {
    CHECK(real_part(DualComplex{{1, 2}, {3, 4}}) == DualNumber{1, 3});
    CHECK(real_part(DualQuaternion{J}) == DualNumber{});

    Rng rng(11);
    for (int k = 0; k < 100; ++k) {
        const auto q = random_dual<Quaternion>(rng);
        CHECK(real_part(q) <= magnitude(q));
    }
}

TEST_CASE_TEMPLATE("magnitude is multiplicative and subadditive", T, double, Complex, Quaternion) {
    Rng rng(17);
    for (int k = 0; k < 200; ++k) {
        const auto a = random_dual<T>(rng);
        const auto b = random_dual<T>(rng);
        const DualNumber lhs = magnitude(a * b);
        const DualNumber rhs = magnitude(a) * magnitude(b);
        CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * std::max(1.0, std::abs(rhs.d)));
        CHECK(geq_tol(magnitude(a) + magnitude(b), magnitude(a + b), 1e-12));
    }
}

TEST_CASE_TEMPLATE("real part laws", T, double, Complex, Quaternion) {
    Rng rng(19);
    for (int k = 0; k < 200; ++k) {
        const auto a = random_dual<T>(rng);
        const auto b = random_dual<T>(rng);
        CHECK(near(real_part(a * b), real_part(b * a), 1e-12));
        CHECK(real_part(a) == real_part(conj(a)));
        CHECK(geq_tol(magnitude(a), real_part(a), 1e-12));
    }
    // Equality exactly for nonnegative dual numbers.
    const Dual<T> pos{ring_traits<T>::from_real(2.0), ring_traits<T>::from_real(-3.0)};
    CHECK(near(real_part(pos), magnitude(pos)));
    const Dual<T> neg{ring_traits<T>::from_real(-2.0)};
    CHECK(real_part(neg) < magnitude(neg));
}

TEST_CASE_TEMPLATE("units form a group and inverses invert", T, double, Complex, Quaternion) {
    Rng rng(23);
    for (int k = 0; k < 200; ++k) {
        CHECK(is_unit(random_unit<T>(rng) * random_unit<T>(rng), 1e-12));
        const auto a = random_dual<T>(rng);
        CHECK(near(inverse(inverse(a)), a, 1e-12 * std::max(1.0, 1.0 / base_norm2(a.s))));
        CHECK(near(a * inverse(a), Dual<T>{ring_traits<T>::from_real(1.0)}, 1e-12 * std::max(1.0, base_abs(a.d) / base_abs(a.s))));
    }
}

TEST_CASE("runtime-tagged scalars refuse to mix rings") {
    const DualScalar a = DualComplex{{1, 2}, {0, 1}};
    const DualScalar b = DualQuaternion{J};
    CHECK_THROWS_AS(a * b, RingMismatch);
    CHECK((a.widen(Ring::quaternion) * b).ring() == Ring::quaternion);
    CHECK_THROWS_AS(b.widen(Ring::complex), RingMismatch);
    CHECK((a + a).as<Complex>() == DualComplex{{2, 4}, {0, 2}});
    CHECK(magnitude(DualScalar(DualComplex{{3, 4}, {1, 2}})).s == doctest::Approx(5.0));
}

TEST_CASE("text round trip") {
    Rng rng(29);
    for (int k = 0; k < 50; ++k) {
        for (const DualScalar v : {DualScalar(random_dual<double>(rng)), DualScalar(random_dual<Complex>(rng)),
                                   DualScalar(random_dual<Quaternion>(rng))}) {
            CHECK(parse_dual_scalar(to_string(v)) == v);
        }
    }
    CHECK(parse_dual_scalar("1 + 2*eps") == DualScalar(DualNumber{1, 2}));
    CHECK(parse_dual_scalar("(0+1i) - (0.5+0i)*eps") == DualScalar(DualComplex{{0, 1}, {-0.5, 0}}));
    CHECK(parse_dual_scalar("-1", Ring::complex) == DualScalar(DualComplex{{-1, 0}}));
    CHECK(parse_dual_scalar("(0+0i+1j+0k)").ring() == Ring::quaternion);
    CHECK_THROWS_AS(parse_dual_scalar("(1+1j)", Ring::complex), BadParameter);
    CHECK_THROWS_AS(parse_dual_scalar("1 +"), BadParameter);
}

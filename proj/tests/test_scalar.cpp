#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kappa/scalar.hpp"
#include "kappa/selftest.hpp"

using namespace kappa;

TEST_CASE("rational arithmetic reduces and guards overflow") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
    CHECK(Rational(-5).inverse() == Rational(1, -5));
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational(INT64_MAX / 2) * Rational(4), OverflowError);
}

TEST_CASE("imaginary unit folds") {
    Scalar i = Scalar::i();
    CHECK(i * i == -Scalar::one());
    CHECK(i * i * i * i == Scalar::one());
}

TEST_CASE("scalar rendering follows the canonical factor order") {
    CHECK(Scalar::one().to_string() == "1");
    CHECK(Scalar::zero().to_string() == "0");
    CHECK((-Scalar::i_hbar()).to_string() == "-i*hbar");
    CHECK(Scalar::i_over_kappa().to_string() == "i*kappa^-1");
    CHECK(Scalar::term(Rational(1, 2), Rational(0), 2, 1).to_string() ==
          "1/2*hbar^2*kappa^-1");
    CHECK((Scalar::one() + Scalar::i()).to_string() == "1 + i");
}

TEST_CASE("scalar evaluation matches exact content") {
    Scalar s = Scalar::term(Rational(3, 2), Rational(-1), 1, 2); // (3/2 - i) hbar / kappa^2
    auto v = s.eval(2.0, 0.5);
    CHECK(v.real() == doctest::Approx(3.0 / 4.0));
    CHECK(v.imag() == doctest::Approx(-0.5));
    CHECK_THROWS_AS(Scalar::term(Rational(1), Rational(0), 0, -1).eval(1.0, 0.0), Error);
}

TEST_CASE("scalar ring property suite") {
    SelftestOptions opts;
    auto r = scalar_ring_suite(opts);
    INFO(r.messages.empty() ? "" : r.messages.front());
    CHECK(r.failures == 0);
}

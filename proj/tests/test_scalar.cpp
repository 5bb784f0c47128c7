#include "doctest.h"

#include "trisect/scalar.hpp"

#include <cmath>
#include <thread>

using namespace trisect::scalar;

TEST_SUITE("scalar") {

TEST_CASE("machine backend defaults") {
    const Backend b = make_backend(BackendKind::machine);
    CHECK(b.kind == BackendKind::machine);
    CHECK(b.precision_bits == 53);
    CHECK(b.eps == 1e-9);
    CHECK(b.name == "machine");
}

TEST_CASE("bigfloat eps follows the precision") {
    const Backend b = make_backend(BackendKind::bigfloat, 256);
    CHECK(b.eps == std::exp2(-124.0));
    CHECK(b.name == "bigfloat:256");
    CHECK(make_backend(BackendKind::bigfloat, 512).eps < b.eps);
    CHECK_THROWS_AS(make_backend(BackendKind::bigfloat, 10), std::invalid_argument);
    CHECK_THROWS_AS(make_backend(BackendKind::bigfloat, kMaxPrecisionBits + 1), std::invalid_argument);
    CHECK(make_backend(BackendKind::bigfloat, 256, 1e-30).eps == 1e-30);
    CHECK_THROWS(make_backend(BackendKind::bigfloat, 256, -1.0));
}

TEST_CASE("backend text") {
    CHECK(parse_backend("machine") == make_backend(BackendKind::machine));
    CHECK(parse_backend("bigfloat:128") == make_backend(BackendKind::bigfloat, 128));
    CHECK(parse_backend("bigfloat").precision_bits == 256);
    CHECK_THROWS(parse_backend("bigfloat:abc"));
    CHECK_THROWS(parse_backend("bigfloat:12"));
    CHECK_THROWS(parse_backend("quad"));
}

TEST_CASE("degree conversions") {
    CHECK(deg_to_rad(AngleDeg<double>{180}) == doctest::Approx(3.14159265358979323846));
    CHECK(deg_to_rad(AngleDeg<double>{0}) == 0);
    CHECK(std::fabs(rad_to_deg(deg_to_rad(AngleDeg<double>{36.5})).value - 36.5) < 1e-12);

    PrecisionScope scope(256);
    const BigFloat back = rad_to_deg(deg_to_rad(AngleDeg<BigFloat>{BigFloat("36.5")})).value;
    CHECK(abs(back - BigFloat("36.5")) < BigFloat(1e-70));
    CHECK(abs(deg_to_rad(AngleDeg<BigFloat>{BigFloat(180)}) - pi<BigFloat>()) < BigFloat(1e-70));
}

TEST_CASE("bigfloat arithmetic at 256 bits") {
    PrecisionScope scope(256);
    const BigFloat two(2);
    const BigFloat r = sqrt(two);
    CHECK(r.precision() == 256);
    CHECK(abs(r * r - two) < BigFloat(1e-74));
    CHECK(BigFloat(1) / BigFloat(3) * BigFloat(3) == BigFloat(1));
    CHECK(-BigFloat(5) < BigFloat(0));
    CHECK(abs(atan2(BigFloat(1), BigFloat(1)) * BigFloat(4) - pi<BigFloat>()) < BigFloat(1e-74));
    CHECK(abs(hypot(BigFloat(3), BigFloat(4)) - BigFloat(5)) < BigFloat(1e-74));
    CHECK(sin(pi<BigFloat>() / BigFloat(6)).to_double() == doctest::Approx(0.5));
    CHECK(from_decimal<BigFloat>("0.1") != BigFloat(0.1));
    CHECK_THROWS_AS(BigFloat("1.2.3"), std::invalid_argument);
    CHECK_THROWS(from_decimal<double>("12abc"));
}

TEST_CASE("sqrt squares back within eps") {
    for (double x : {0.0, 1e-6, 0.5, 2.0, 10.0, 12345.678, 1e6}) {
        const double r = std::sqrt(x);
        CHECK(std::fabs(r * r - x) <= 1e-9 * std::max(1.0, x));
        PrecisionScope scope(256);
        const BigFloat b = sqrt(BigFloat(x));
        CHECK(abs(b * b - BigFloat(x)).to_double() <= std::exp2(-124.0) * std::max(1.0, x));
    }
}

TEST_CASE("precision scope is per thread") {
    PrecisionScope outer(512);
    long seen = 0;
    std::thread t([&] { seen = PrecisionScope::current(); });
    t.join();
    CHECK(seen == 256);
    CHECK(PrecisionScope::current() == 512);
    {
        PrecisionScope inner(128);
        CHECK(BigFloat(1).precision() == 128);
    }
    CHECK(PrecisionScope::current() == 512);
}

TEST_CASE("with_backend picks the scalar type") {
    const auto machine = make_backend(BackendKind::machine);
    const auto big = make_backend(BackendKind::bigfloat, 300);
    CHECK(with_backend(machine, []<typename R>() { return std::is_same_v<R, double>; }));
    CHECK(with_backend(big, []<typename R>() { return std::is_same_v<R, BigFloat>; }));
    CHECK(with_backend(big, []<typename R>() { return PrecisionScope::current(); }) == 300);
}

TEST_CASE("identical operation sequences are bit identical") {
    PrecisionScope scope(256);
    auto run = [] {
        BigFloat x("0.7");
        for (int i = 0; i < 50; ++i) x = sqrt(x * x + BigFloat(1)) / BigFloat(3) + sin(x);
        return x.to_string(80);
    };
    CHECK(run() == run());
}

}

#include <doctest.h>

#include <random>
#include <vector>

#include "oqho/kernels.hpp"

using namespace oqho;

namespace {
std::vector<double> random_vec(std::mt19937_64& gen, std::size_t n) {
    std::normal_distribution<double> dist;
    std::vector<double> v(n);
    for (auto& x : v) x = dist(gen);
    return v;
}
}  // namespace

TEST_CASE("dot and axpy basics") {
    const std::vector<double> x{1.0, 2.0, 3.0};
    const std::vector<double> y{4.0, -5.0, 6.0};
    CHECK(kern::dot(x.data(), y.data(), 3) == doctest::Approx(12.0));
    std::vector<double> z = y;
    kern::axpy(2.0, x.data(), z.data(), 3);
    CHECK(z[0] == doctest::Approx(6.0));
    CHECK(z[1] == doctest::Approx(-1.0));
    CHECK(z[2] == doctest::Approx(12.0));
}

TEST_CASE("scalar and avx2 kernels agree") {
    if (!kern::avx2_available()) {
        MESSAGE("avx2 not available on this host; dispatch stays scalar");
        CHECK(kern::active_isa() == kern::Isa::scalar);
        return;
    }
    auto gen = std::mt19937_64{42};
    // sizes straddling the vector width, including ragged tails
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 64u, 257u, 1000u}) {
        const auto x = random_vec(gen, n);
        const auto y = random_vec(gen, n);

        kern::force_isa(kern::Isa::scalar);
        const double dot_s = kern::dot(x.data(), y.data(), n);
        auto z_s = y;
        kern::axpy(1.7, x.data(), z_s.data(), n);

        kern::force_isa(kern::Isa::avx2);
        const double dot_v = kern::dot(x.data(), y.data(), n);
        auto z_v = y;
        kern::axpy(1.7, x.data(), z_v.data(), n);

        kern::reset_isa();

        CHECK(dot_s == doctest::Approx(dot_v).epsilon(1e-13));
        for (std::size_t i = 0; i < n; ++i) CHECK(z_s[i] == doctest::Approx(z_v[i]).epsilon(1e-13));
    }
}

TEST_CASE("dispatch resolves to avx2 when the cpu supports it") {
    kern::reset_isa();
    if (kern::avx2_available()) {
        CHECK(kern::active_isa() == kern::Isa::avx2);
    } else {
        CHECK(kern::active_isa() == kern::Isa::scalar);
    }
}

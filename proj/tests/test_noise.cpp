#include <random>

#include "doctest.h"

#include "saltpepper/errors.hpp"
#include "saltpepper/noise.hpp"
#include "test_util.hpp"

using namespace saltpepper;

TEST_CASE("inject rejects out-of-range specs") {
    const GrayImage img(4, 4, 100);
    CHECK_THROWS_AS(inject(img, NoiseSpec{-0.1, 1}), ConfigError);
    CHECK_THROWS_AS(inject(img, NoiseSpec{1.5, 1}), ConfigError);
    CHECK_THROWS_AS(inject(img, NoiseSpec{0.5, 1, 2.0}), ConfigError);
}

TEST_CASE("density 0 leaves the image untouched") {
    std::mt19937 rng(71);
    const GrayImage img = testutil::random_image(rng, 13, 9);
    const CorruptionRecord record = inject(img, NoiseSpec{0.0, 99});
    CHECK(record.noisy == img);
    for (std::uint8_t m : record.mask) {
        CHECK(m == 0);
    }
}

TEST_CASE("density 1 corrupts every pixel, half of them to salt") {
    std::mt19937 rng(72);
    const GrayImage img = testutil::random_image(rng, 16, 16, 1, 254);
    const CorruptionRecord record = inject(img, NoiseSpec{1.0, 7});
    std::size_t salt = 0;
    for (std::size_t i = 0; i < record.noisy.pixel_count(); ++i) {
        CHECK(record.mask[i] == 1);
        const std::uint8_t v = record.noisy.pixels()[i];
        CHECK((v == 0 || v == 255));
        salt += v == 255;
    }
    CHECK(salt == 128);  // floor(0.5 * 256)
}

TEST_CASE("corrupted count is exactly floor(density * pixels)") {
    std::mt19937 rng(73);
    const GrayImage img = testutil::random_image(rng, 50, 40);  // 2000 pixels

    struct Case {
        double density;
        std::size_t expect;
    };
    for (const Case c : {Case{0.1, 200}, Case{0.25, 500}, Case{0.7, 1400},
                         Case{0.0004, 0}, Case{0.9995, 1999}}) {
        const CorruptionRecord record = inject(img, NoiseSpec{c.density, 11});
        std::size_t corrupted = 0;
        for (std::uint8_t m : record.mask) {
            corrupted += m;
        }
        CHECK(corrupted == c.expect);
    }
}

TEST_CASE("salt split follows floor(salt_fraction * count)") {
    std::mt19937 rng(74);
    const GrayImage img = testutil::random_image(rng, 30, 30, 1, 254);
    const CorruptionRecord record = inject(img, NoiseSpec{0.5, 3, 0.25});
    // 450 corrupted, floor(0.25 * 450) = 112 salt.
    std::size_t salt = 0, pepper = 0;
    for (std::size_t i = 0; i < record.noisy.pixel_count(); ++i) {
        if (!record.mask[i]) {
            continue;
        }
        (record.noisy.pixels()[i] == 255 ? salt : pepper) += 1;
    }
    CHECK(salt == 112);
    CHECK(pepper == 338);
}

TEST_CASE("injection is deterministic and leaves unmasked pixels intact") {
    std::mt19937 rng(75);
    const GrayImage img = testutil::random_image(rng, 64, 48);
    const CorruptionRecord a = inject(img, NoiseSpec{0.35, 0xFEEDFACE});
    const CorruptionRecord b = inject(img, NoiseSpec{0.35, 0xFEEDFACE});
    CHECK(a.noisy == b.noisy);
    CHECK(a.mask == b.mask);

    const CorruptionRecord other = inject(img, NoiseSpec{0.35, 0xFEEDFACF});
    CHECK(a.noisy != other.noisy);

    for (std::size_t i = 0; i < img.pixel_count(); ++i) {
        if (!a.mask[i]) {
            CHECK(a.noisy.pixels()[i] == img.pixels()[i]);
        } else {
            const std::uint8_t v = a.noisy.pixels()[i];
            CHECK((v == 0 || v == 255));
        }
    }
}

TEST_CASE("splitmix64 is a fixed function") {
    // Reference values of the published SplitMix64 algorithm.
    CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
    CHECK(splitmix64(1) == 0x910A2DEC89025CC1ULL);
    CHECK(splitmix64(0xDEADBEEF) == splitmix64(0xDEADBEEF));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "steerkit/errors.hpp"
#include "steerkit/measure.hpp"
#include "steerkit/rng.hpp"
#include "steerkit/statezoo.hpp"

using namespace steerkit;

namespace {
constexpr double kPi = std::numbers::pi;

Direction random_direction(Rng& rng) {
    return Direction::from_unit(rng.unit_vector());
}
}  // namespace

TEST_CASE("direction construction, wrapping and snapping") {
    const Direction d(0.5, 2.0 * kPi + 0.25);
    CHECK(d.phi() == doctest::Approx(0.25).epsilon(1e-12));

    CHECK_THROWS_AS(Direction(-0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Direction(kPi + 0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Direction(std::nan(""), 0.0), std::invalid_argument);

    // axis components snap to exact integers
    CHECK(Direction::x_axis().unit().x == 1.0);
    CHECK(Direction::x_axis().unit().y == 0.0);
    CHECK(Direction::x_axis().unit().z == 0.0);
    CHECK(Direction::y_axis().unit().y == 1.0);
    CHECK(Direction::z_axis().unit().z == 1.0);
    CHECK(Direction(kPi, 0.0).unit().z == -1.0);

    const Direction back = Direction::from_unit(BlochVector{0.0, 0.0, -1.0});
    CHECK(back.theta() == doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("projectors are idempotent rank-1 with unit sum") {
    Rng rng(21);
    for (int i = 0; i < 1000; ++i) {
        const Direction d = random_direction(rng);
        const ComplexMatrix up = projector(d, Outcome::Up);
        const ComplexMatrix down = projector(d, Outcome::Down);

        double idem = 0.0, comp = 0.0;
        const ComplexMatrix up2 = up * up;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                idem = std::max(idem, std::abs(up2.at(r, c) - up.at(r, c)));
                const Complex want = r == c ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                comp = std::max(comp, std::abs(up.at(r, c) + down.at(r, c) - want));
            }
        CHECK(idem <= 1e-12);
        CHECK(comp <= 1e-12);
        CHECK(std::abs(up.trace().real() - 1.0) <= 1e-12);
    }
}

TEST_CASE("joint probabilities: completeness and known correlations") {
    const DensityMatrix bell = bell_phi_plus().to_density();
    const Direction z = Direction::z_axis();
    const Direction x = Direction::x_axis();

    const MeasurementLayout zz = MeasurementLayout::two(2, 0, z, 1, z);
    CHECK(joint_prob(bell, zz, {Outcome::Up, Outcome::Up}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(joint_prob(bell, zz, {Outcome::Up, Outcome::Down}) ==
          doctest::Approx(0.0).epsilon(1e-12));
    const MeasurementLayout xx = MeasurementLayout::two(2, 0, x, 1, x);
    CHECK(joint_prob(bell, xx, {Outcome::Up, Outcome::Up}) == doctest::Approx(0.5).epsilon(1e-12));

    Rng rng(22);
    for (int rep = 0; rep < 100; ++rep) {
        const DensityMatrix rho = random_density_matrix(4, rng);
        const MeasurementLayout both =
            MeasurementLayout::two(2, 0, random_direction(rng), 1, random_direction(rng));
        double total = 0.0;
        for (Outcome a : {Outcome::Up, Outcome::Down})
            for (Outcome b : {Outcome::Up, Outcome::Down}) total += joint_prob(rho, both, {a, b});
        CHECK(std::abs(total - 1.0) <= 1e-10);
    }

    // three parties, one measured
    const DensityMatrix ghz = tripartite_family(TripartiteKind::Ghz);
    const MeasurementLayout only_b = MeasurementLayout::single(3, 1, z);
    CHECK(joint_prob(ghz, only_b, {Outcome::Up}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("no-signaling: Bob's marginal ignores Alice's axis") {
    Rng rng(23);
    for (int rep = 0; rep < 1000; ++rep) {
        const DensityMatrix rho = random_density_matrix(4, rng);
        const Direction bob = random_direction(rng);
        const Direction alice1 = random_direction(rng);
        const Direction alice2 = random_direction(rng);

        auto bob_marginal = [&](const Direction& alice) {
            const MeasurementLayout both = MeasurementLayout::two(2, 0, alice, 1, bob);
            return joint_prob(rho, both, {Outcome::Up, Outcome::Up}) +
                   joint_prob(rho, both, {Outcome::Down, Outcome::Up});
        };
        CHECK(std::abs(bob_marginal(alice1) - bob_marginal(alice2)) <= 1e-10);
    }
}

TEST_CASE("conditional probability: chain rule and degenerate conditioning") {
    Rng rng(24);
    for (int rep = 0; rep < 200; ++rep) {
        const DensityMatrix rho = random_density_matrix(4, rng);
        const Direction a = random_direction(rng);
        const Direction b = random_direction(rng);
        const double marginal =
            joint_prob(rho, MeasurementLayout::single(2, 0, a), {Outcome::Up});
        if (marginal <= 1e-6) continue;
        const double joint = joint_prob(rho, MeasurementLayout::two(2, 0, a, 1, b),
                                        {Outcome::Up, Outcome::Up});
        const double cond = conditional_prob(rho, 0, a, Outcome::Up, 1, b, Outcome::Up);
        CHECK(std::abs(cond * marginal - joint) <= 1e-10);
        CHECK(cond >= 0.0);
        CHECK(cond <= 1.0 + 1e-12);
    }

    // |0><0| x I/2: conditioning on spin-down along z has zero marginal
    ComplexMatrix m(4);
    m.at(0, 0) = 0.5;
    m.at(1, 1) = 0.5;
    const DensityMatrix rho(m);
    CHECK_THROWS_AS(
        conditional_prob(rho, 0, Direction::z_axis(), Outcome::Down, 1, Direction::x_axis(),
                         Outcome::Up),
        DegenerateConditionError);
}

TEST_CASE("layout and outcome validation") {
    const DensityMatrix bell = bell_phi_plus().to_density();
    const Direction z = Direction::z_axis();

    CHECK_THROWS_AS(MeasurementLayout(std::vector<std::optional<Direction>>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MeasurementLayout(std::vector<std::optional<Direction>>{std::nullopt,
                                                                             std::nullopt}),
                    std::invalid_argument);

    const MeasurementLayout single = MeasurementLayout::single(2, 0, z);
    CHECK_THROWS_AS(joint_prob(bell, single, {Outcome::Up, Outcome::Up}), std::invalid_argument);

    const MeasurementLayout three = MeasurementLayout::single(3, 0, z);
    CHECK_THROWS_AS(joint_prob(bell, three, {Outcome::Up}), std::invalid_argument);
}

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "vtsim/vec2.hpp"
#include "vtsim/vehicle.hpp"

using namespace vtsim;

namespace {

/// Independent oracle: forward-Euler integration of constant-lateral-accel
/// motion at a much finer step. Renormalizes speed each substep so the
/// comparison isolates the turn geometry rather than Euler's energy drift.
VehicleState euler_turn_oracle(VehicleState s, double lateral_accel, double dt, int substeps) {
    const double h = dt / substeps;
    const double speed = s.velocity.norm();
    for (int i = 0; i < substeps; ++i) {
        const Vec2 a = s.velocity.perp_ccw().normalized() * lateral_accel;
        s.position += s.velocity * h;
        s.velocity += a * h;
        s.velocity = s.velocity.normalized() * speed;  // constant-speed constraint
    }
    return s;
}

}  // namespace

TEST_CASE("step_vehicle zero command is linear motion") {
    VehicleState s{{0, 0}, {0, 500}, true};
    VehicleState out = step_vehicle(s, {0, 0}, 0.025);
    CHECK(out.position.x == doctest::Approx(0.0));
    CHECK(out.position.y == doctest::Approx(12.5));
    CHECK(out.velocity.x == doctest::Approx(0.0));
    CHECK(out.velocity.y == doctest::Approx(500.0));
}

TEST_CASE("step_vehicle drops the along-track command component") {
    VehicleState s{{0, 0}, {0, 500}, true};
    // Command parallel to velocity: projects to zero lateral accel, so the
    // result must match the zero-command case exactly.
    VehicleState with_cmd = step_vehicle(s, {0, 300}, 1.0);
    VehicleState no_cmd = step_vehicle(s, {0, 0}, 1.0);
    CHECK(with_cmd.position.x == no_cmd.position.x);
    CHECK(with_cmd.position.y == no_cmd.position.y);
    CHECK(with_cmd.velocity.norm() == doctest::Approx(500.0).epsilon(1e-12));
}

TEST_CASE("step_vehicle quarter-turn arc matches closed form and Euler oracle") {
    // Turn rate w = pi/2 rad/s at speed 100 -> lateral accel = w * speed.
    const double speed = 100.0;
    const double omega = M_PI / 2.0;
    const double a_lat = omega * speed;
    VehicleState s{{0, 0}, {speed, 0}, true};

    // Command purely lateral (perp to +x velocity is +y).
    VehicleState out = step_vehicle(s, {0, a_lat}, 1.0);

    const double r = speed / omega;  // arc radius
    CHECK(out.velocity.x == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(out.velocity.y == doctest::Approx(speed));
    CHECK(out.position.x == doctest::Approx(r));          // 63.662
    CHECK(out.position.y == doctest::Approx(r));          // 63.662
    CHECK(out.position.x == doctest::Approx(63.6619772).epsilon(1e-6));

    // Independent fine-step Euler oracle.
    VehicleState oracle = euler_turn_oracle(s, a_lat, 1.0, 2'000'000);
    CHECK(out.position.x == doctest::Approx(oracle.position.x).epsilon(1e-5));
    CHECK(out.position.y == doctest::Approx(oracle.position.y).epsilon(1e-5));
    CHECK(out.velocity.x == doctest::Approx(oracle.velocity.x).scale(speed).epsilon(1e-5));
    CHECK(out.velocity.y == doctest::Approx(oracle.velocity.y).scale(speed).epsilon(1e-5));
}

TEST_CASE("step_vehicle preserves speed exactly over many steps") {
    VehicleState s{{0, 0}, {300, 400}, true};
    const double speed0 = s.velocity.norm();
    for (int i = 0; i < 10000; ++i) {
        const double a = 200.0 * std::sin(0.01 * i);  // varying lateral demand
        s = step_vehicle(s, s.velocity.perp_ccw().normalized() * a, 0.025);
    }
    CHECK(s.velocity.norm() == doctest::Approx(speed0).epsilon(1e-12));
}

TEST_CASE("step_vehicle is rotation-equivariant") {
    // Rotating the initial state and the command rotates the outcome.
    const double th = 1.1;
    VehicleState s{{10, -3}, {120, 50}, true};
    const Vec2 cmd{40, 90};

    VehicleState plain = step_vehicle(s, cmd, 0.5);

    VehicleState rot{s.position.rotated(th), s.velocity.rotated(th), true};
    VehicleState rotated_out = step_vehicle(rot, cmd.rotated(th), 0.5);

    CHECK(rotated_out.position.x == doctest::Approx(plain.position.rotated(th).x).epsilon(1e-9));
    CHECK(rotated_out.position.y == doctest::Approx(plain.position.rotated(th).y).epsilon(1e-9));
    CHECK(rotated_out.velocity.x == doctest::Approx(plain.velocity.rotated(th).x).epsilon(1e-9));
    CHECK(rotated_out.velocity.y == doctest::Approx(plain.velocity.rotated(th).y).epsilon(1e-9));
}

TEST_CASE("step_vehicle two half steps equal one full step") {
    // Constant lateral accel: the arc composes exactly.
    VehicleState s{{0, 0}, {200, 0}, true};
    const double a_lat = 30.0;
    const TurnStep full = make_turn_step(a_lat, 200.0, 1.0);
    const TurnStep half = make_turn_step(a_lat, 200.0, 0.5);

    VehicleState one = apply_turn(s, full);
    VehicleState two = apply_turn(apply_turn(s, half), half);

    CHECK(one.position.x == doctest::Approx(two.position.x).epsilon(1e-12));
    CHECK(one.position.y == doctest::Approx(two.position.y).epsilon(1e-12));
    CHECK(one.velocity.x == doctest::Approx(two.velocity.x).epsilon(1e-12));
    CHECK(one.velocity.y == doctest::Approx(two.velocity.y).epsilon(1e-12));
}

TEST_CASE("lateral_component sign convention") {
    // +y accel on +x velocity turns counterclockwise: positive lateral.
    CHECK(lateral_component({100, 0}, {0, 30}) == doctest::Approx(30.0));
    CHECK(lateral_component({100, 0}, {0, -30}) == doctest::Approx(-30.0));
    // Parallel command has no lateral part.
    CHECK(lateral_component({100, 0}, {55, 0}) == doctest::Approx(0.0));
    // Independent of command magnitude along track.
    CHECK(lateral_component({0, 200}, {-40, 999}) == doctest::Approx(40.0));
}

TEST_CASE("step_vehicle rejects degenerate inputs") {
    VehicleState ok{{0, 0}, {100, 0}, true};
    VehicleState zero_speed{{0, 0}, {0, 0}, true};
    VehicleState inactive{{0, 0}, {100, 0}, false};

    CHECK_THROWS_AS(step_vehicle(zero_speed, {0, 0}, 0.025), std::invalid_argument);
    CHECK_THROWS_AS(step_vehicle(inactive, {0, 0}, 0.025), std::invalid_argument);
    CHECK_THROWS_AS(step_vehicle(ok, {0, 0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(step_vehicle(ok, {0, 0}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(step_vehicle(ok, {std::nan(""), 0}, 0.025), std::invalid_argument);
}

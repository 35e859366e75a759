#include <cmath>

#include "doctest.h"
#include "wavemix/core.hpp"
#include "wavemix/semiclassical.hpp"

using namespace wavemix;

namespace {

ParamMap base_map() {
  return {{"omega01", 10.0}, {"gamma", 1.0}, {"rabi_a", 0.5}, {"rabi_b", 0.5}, {"delta", 0.01}};
}

}  // namespace

TEST_CASE("validate_config accepts a consistent map") {
  auto [params, drive] = validate_config(base_map());
  CHECK(params.omega01 == 10.0);
  CHECK(params.v == 1.0);
  CHECK(drive.rabi_a == 0.5);
  CHECK_FALSE(drive.quasistationary_strained);
}

TEST_CASE("validate_config rejects bad values with the field name") {
  auto map = base_map();
  map["gamma"] = 0.0;
  CHECK_THROWS_WITH_AS(static_cast<void>(validate_config(map)), "gamma must be positive",
                       ValidationError);
  map = base_map();
  map["rabi_a"] = -0.1;
  CHECK_THROWS_AS(static_cast<void>(validate_config(map)), ValidationError);
  map = base_map();
  map["delta"] = -1.0;
  CHECK_THROWS_AS(static_cast<void>(validate_config(map)), ValidationError);
  map = base_map();
  map.erase("delta");
  CHECK_THROWS_AS(static_cast<void>(validate_config(map)), ValidationError);
  map = base_map();
  map["detuning"] = 0.2;
  CHECK_THROWS_AS(static_cast<void>(validate_config(map)), ValidationError);
}

TEST_CASE("quasi-stationary strain flag trips above delta/gamma = 0.1") {
  auto map = base_map();
  map["delta"] = 0.5;
  auto [params, drive] = validate_config(map);
  CHECK(drive.quasistationary_strained);
}

TEST_CASE("JSON config round trip is bit exact") {
  ParamMap map = {{"omega01", 10.0 / 3.0}, {"gamma", 0.1},        {"rabi_a", M_PI},
                  {"rabi_b", 0.3},         {"delta", 1.0 / 128.0}, {"v", 2.7}};
  auto [params, drive] = validate_config(map);
  const std::string text = config_to_json(params, drive);
  auto reparsed = parse_config_json(text);
  auto [params2, drive2] = validate_config(reparsed);
  CHECK(params2.omega01 == params.omega01);
  CHECK(params2.gamma == params.gamma);
  CHECK(params2.v == params.v);
  CHECK(drive2.rabi_a == drive.rabi_a);
  CHECK(drive2.rabi_b == drive.rabi_b);
  CHECK(drive2.delta == drive.delta);
}

TEST_CASE("JSON config rejects unknown keys") {
  CHECK_THROWS_AS(static_cast<void>(parse_config_json(R"({"omega01":1,"extra":2})")),
                  ValidationError);
  CHECK_THROWS_AS(static_cast<void>(parse_config_json("not json")), ValidationError);
  CHECK_THROWS_AS(static_cast<void>(parse_config_json(R"({"gamma":"x"})")), ValidationError);
}

TEST_CASE("dimensionless outputs are invariant under a common frequency rescale") {
  auto map = base_map();
  auto [params, drive] = validate_config(map);
  const double scale = 7.3;
  ParamMap scaled = map;
  for (auto& [k, v] : scaled) v /= scale;
  auto [params_s, drive_s] = validate_config(scaled);

  const MixingAngle m1 = mixing_angle(drive, params);
  const MixingAngle m2 = mixing_angle(drive_s, params_s);
  CHECK(m1.theta == doctest::Approx(m2.theta).epsilon(1e-12));
  CHECK(m1.y == doctest::Approx(m2.y).epsilon(1e-12));

  for (int p = 0; p <= 4; ++p) {
    // N = sqrt(2) Omega / Gamma is scale free, hence so is N^(2p+1)
    const double n1 = peak_photon_number(std::sqrt(2.0) * drive.rabi_a / params.gamma,
                                         std::sqrt(2.0) * drive.rabi_b / params.gamma, p, Side::Right);
    const double n2 =
        peak_photon_number(std::sqrt(2.0) * drive_s.rabi_a / params_s.gamma,
                           std::sqrt(2.0) * drive_s.rabi_b / params_s.gamma, p, Side::Right);
    CHECK(n1 == doctest::Approx(n2).epsilon(1e-12));
  }
}

TEST_CASE("peak frequencies follow the side labeling") {
  auto [params, drive] = validate_config(base_map());
  CHECK(peak_frequency(params, drive, 1, Side::Right) == doctest::Approx(10.03));
  CHECK(peak_frequency(params, drive, 1, Side::Left) == doctest::Approx(9.97));
}

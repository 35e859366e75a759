#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "doctest.h"
#include "json.hpp"
#include "wavemix/emit.hpp"
#include "wavemix/multiphoton.hpp"

using namespace wavemix;

TEST_CASE("format_double round-trips awkward values") {
  for (double x : {0.1, 1.0 / 3.0, std::numbers::pi, 1e-300, -2.5e17, 0.0}) {
    const std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("peak spectrum CSV: column order, empty case, determinism") {
  PeakSpectrum spec;
  CHECK(emit_spectrum(spec, EmitFormat::Csv) == "p,side,frequency,re_amp,im_amp,intensity\n");

  spec.records.push_back({0, Side::Left, 9.99, Complex{-0.2, 0.0}, 0.04});
  spec.records.push_back({1, Side::Right, 10.03, Complex{0.05, 0.001}, 0.0025});
  const std::string a = emit_spectrum(spec, EmitFormat::Csv);
  const std::string b = emit_spectrum(spec, EmitFormat::Csv);
  CHECK(a == b);
  CHECK(a.rfind("p,side,frequency,re_amp,im_amp,intensity\n0,left,", 0) == 0);
  CHECK(a.back() == '\n');
}

TEST_CASE("peak spectrum JSON mirrors fields bit-exactly") {
  PeakSpectrum spec;
  spec.records.push_back({2, Side::Right, 10.0 + 1.0 / 3.0, Complex{0.1, -1.0 / 7.0}, 0.01});
  const std::string text = emit_spectrum(spec, EmitFormat::Json);
  const auto j = nlohmann::json::parse(text);
  REQUIRE(j.is_array());
  CHECK(j[0]["p"] == 2);
  CHECK(j[0]["side"] == "right");
  CHECK(j[0]["frequency"].get<double>() == 10.0 + 1.0 / 3.0);
  CHECK(j[0]["re_amp"].get<double>() == 0.1);
  CHECK(j[0]["im_amp"].get<double>() == -1.0 / 7.0);
}

TEST_CASE("momentum distribution emission") {
  MomentumDistribution d;
  d.linewidth = 0.004;
  d.k_grid = {1.0, 2.0, 3.0};
  d.intensity = {0.5, 0.25, 0.125};
  const std::string csv = emit_spectrum(d, EmitFormat::Csv);
  CHECK(csv == "k,intensity\n1,0.5\n2,0.25\n3,0.125\n");
  const auto j = nlohmann::json::parse(emit_spectrum(d, EmitFormat::Json));
  CHECK(j["k"].size() == 3);
  CHECK(j["intensity"][2].get<double>() == 0.125);
}

TEST_CASE("unwritable sink raises an I/O error") {
  CHECK_THROWS_AS(write_text("/nonexistent-dir/out.csv", "x"), NumericalError);
}

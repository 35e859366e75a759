#include "wavemix/emit.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wavemix/multiphoton.hpp"

namespace wavemix {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

nlohmann::json record_json(const PeakRecord& rec) {
  nlohmann::json j;
  j["p"] = rec.p;
  j["side"] = side_name(rec.side);
  j["frequency"] = rec.frequency;
  j["re_amp"] = rec.amplitude.real();
  j["im_amp"] = rec.amplitude.imag();
  j["intensity"] = rec.intensity;
  return j;
}

}  // namespace

std::string emit_spectrum(const PeakSpectrum& spec, EmitFormat format) {
  if (format == EmitFormat::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& rec : spec.records) j.push_back(record_json(rec));
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "p,side,frequency,re_amp,im_amp,intensity\n";
  for (const auto& rec : spec.records) {
    os << rec.p << ',' << side_name(rec.side) << ',' << format_double(rec.frequency) << ','
       << format_double(rec.amplitude.real()) << ',' << format_double(rec.amplitude.imag()) << ','
       << format_double(rec.intensity) << '\n';
  }
  return os.str();
}

std::string emit_spectrum(const MomentumDistribution& dist, EmitFormat format) {
  if (format == EmitFormat::Json) {
    nlohmann::json j;
    j["linewidth"] = dist.linewidth;
    j["k"] = dist.k_grid;
    j["intensity"] = dist.intensity;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "k,intensity\n";
  for (std::size_t i = 0; i < dist.k_grid.size(); ++i)
    os << format_double(dist.k_grid[i]) << ',' << format_double(dist.intensity[i]) << '\n';
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw NumericalError("cannot open output sink '" + path + "'");
  out << text;
  if (!out) throw NumericalError("write failed for '" + path + "'");
}

}  // namespace wavemix

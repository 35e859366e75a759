#pragma once

#include <iosfwd>
#include <string>

#include "wavemix/core.hpp"

namespace wavemix {

struct MomentumDistribution;  // multiphoton.hpp

enum class EmitFormat { Csv, Json };

// 17 significant digits: round-trips double bit-exactly and keeps outputs
// byte-identical across runs.
std::string format_double(double x);

// Peak records: columns p,side,frequency,re_amp,im_amp,intensity.
std::string emit_spectrum(const PeakSpectrum& spec, EmitFormat format);
// Momentum distributions: columns k,intensity.
std::string emit_spectrum(const MomentumDistribution& dist, EmitFormat format);

void write_text(const std::string& path, const std::string& text);

}  // namespace wavemix

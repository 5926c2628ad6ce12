#include "somno/types.hpp"

#include <algorithm>
#include <cctype>

namespace somno {

char to_char(StageLabel s) {
  switch (s) {
    case StageLabel::W: return 'W';
    case StageLabel::N: return 'N';
    case StageLabel::R: return 'R';
  }
  return '?';
}

std::optional<StageLabel> stage_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'W': return StageLabel::W;
    case 'N': return StageLabel::N;
    case 'R': return StageLabel::R;
    default: return std::nullopt;
  }
}

std::optional<StageLabel> map_raw_stage(std::string_view raw) {
  std::string s(raw);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  // Strip the Sleep-EDF annotation prefix if present.
  constexpr std::string_view prefix = "SLEEP STAGE ";
  if (s.rfind(prefix, 0) == 0) s.erase(0, prefix.size());

  if (s == "W" || s == "WAKE") return StageLabel::W;
  if (s == "N" || s == "N1" || s == "N2" || s == "N3" || s == "N4" || s == "1" ||
      s == "2" || s == "3" || s == "4") {
    return StageLabel::N;
  }
  if (s == "R" || s == "REM") return StageLabel::R;
  // MOVEMENT, UNKNOWN, "?" and anything else: excluded.
  return std::nullopt;
}

std::string to_string(SleepExperience e) {
  return e == SleepExperience::Slept ? "slept" : "not_slept";
}

std::string to_string(StimulusKind k) {
  switch (k) {
    case StimulusKind::Sham: return "sham";
    case StimulusKind::RepetitiveBeep: return "repetitive_beep";
    case StimulusKind::BinauralBeat: return "binaural_beat";
    case StimulusKind::WhiteNoise: return "white_noise";
    case StimulusKind::RainSound: return "rain_sound";
  }
  return "?";
}

std::optional<StimulusKind> stimulus_from_string(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "sham") return StimulusKind::Sham;
  if (s == "repetitive_beep" || s == "beep" || s == "rb") return StimulusKind::RepetitiveBeep;
  if (s == "binaural_beat" || s == "binaural" || s == "bb") return StimulusKind::BinauralBeat;
  if (s == "white_noise" || s == "white" || s == "wn") return StimulusKind::WhiteNoise;
  if (s == "rain_sound" || s == "rain" || s == "rs") return StimulusKind::RainSound;
  return std::nullopt;
}

std::string to_string(const StageSequence& seq) {
  std::string out(seq.size(), '?');
  for (std::size_t i = 0; i < seq.size(); ++i) out[i] = to_char(seq[i]);
  return out;
}

std::optional<StageSequence> sequence_from_string(std::string_view s) {
  if (s.size() != kSequenceLength) return std::nullopt;
  StageSequence seq{};
  for (int i = 0; i < kSequenceLength; ++i) {
    const auto st = stage_from_char(s[static_cast<std::size_t>(i)]);
    if (!st) return std::nullopt;
    seq[static_cast<std::size_t>(i)] = *st;
  }
  return seq;
}

}  // namespace somno

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace somno {

// Sleep stage of one 30-s epoch. The numeric order W < N < R is the fixed
// tie-break order used everywhere a stage argmax can tie.
enum class StageLabel : int { W = 0, N = 1, R = 2 };

inline constexpr std::array<StageLabel, 3> kAllStages = {StageLabel::W, StageLabel::N,
                                                         StageLabel::R};

char to_char(StageLabel s);
std::optional<StageLabel> stage_from_char(char c);

// Collapses raw scorer labels onto {W, N, R}. NREM depths 1-4 merge into N;
// movement/unknown epochs map to nullopt and are excluded from datasets.
// Accepts both short codes ("N2", "REM") and Sleep-EDF annotation strings
// ("Sleep stage 2", "Sleep stage R").
std::optional<StageLabel> map_raw_stage(std::string_view raw);

// Self-reported outcome of one session.
enum class SleepExperience : int { Slept = 0, NotSlept = 1 };

std::string to_string(SleepExperience e);

enum class StimulusKind : int {
  Sham = 0,
  RepetitiveBeep = 1,
  BinauralBeat = 2,
  WhiteNoise = 3,
  RainSound = 4,
};

std::string to_string(StimulusKind k);
std::optional<StimulusKind> stimulus_from_string(std::string_view name);

// One 10-min session yields exactly 20 stage labels.
inline constexpr int kSequenceLength = 20;
using StageSequence = std::array<StageLabel, kSequenceLength>;

std::string to_string(const StageSequence& seq);
std::optional<StageSequence> sequence_from_string(std::string_view s);

}  // namespace somno

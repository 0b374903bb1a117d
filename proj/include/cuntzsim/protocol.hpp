#pragma once

// Alice -> Bob classical messaging through r qubits when Bob does not share
// Alice's isospin frame: encode in a state, misalign by a random g (or the
// exact twirl channel), measure a family of orthogonal projectors, decode by
// argmax.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cuntzsim/random.hpp"
#include "cuntzsim/repsu2.hpp"
#include "cuntzsim/spin.hpp"

namespace cuntzsim::protocol {

using repsu2::GroupElement;
using repsu2::SectorTable;

inline constexpr int kMaxProtocolPower = 6;
/// Outcome probabilities closer than this to the maximum count as tied.
inline constexpr double kTieTolerance = 1e-12;

enum class CodebookKind {
  /// One message per (T, copy): decoder is the copy's invariant projector,
  /// state the maximally mixed state on that copy.
  invariant,
  /// One message per (T, copy, Tz) basis vector; frame dependent.
  naive,
};

std::string_view kind_name(CodebookKind kind);
CodebookKind parse_codebook_kind(std::string_view text);

struct CodebookEntry {
  int id = 0;
  std::string label;
  Spin T;
  int copy = 0;
  std::optional<Spin> Tz;
  /// Other orthogonal choices of the copy basis would label messages differently.
  bool convention_dependent = false;
  CMatrix state;
  CMatrix decoder;
};

struct Codebook {
  int r = 0;
  CodebookKind kind = CodebookKind::invariant;
  std::vector<CodebookEntry> entries;

  std::size_t size() const { return entries.size(); }
  const CodebookEntry& entry(int id) const;
};

struct Capacity {
  int r = 0;
  int message_count = 0;
  double bits = 0.0;
  std::vector<std::pair<Spin, int>> breakdown;  // (T, m_T), descending T
};

/// Messages = sectors counted with multiplicity.
Capacity capacity(int r);

/// Messages are ordered by ascending T then copy (then descending Tz for the
/// naive kind), so for r = 2 message 0 is the singlet.
Codebook build_codebook(int r, CodebookKind kind = CodebookKind::invariant);

/// Decoders pairwise orthogonal, states positive with unit trace and, for the
/// invariant kind, decoders commuting with `checks` sampled rep_power(g, r).
/// Throws InternalConsistency on violation.
void validate_codebook(const Codebook& codebook, int checks = 20, std::uint64_t seed = 1);

struct ExactTwirl {};
using Misalignment = std::variant<GroupElement, ExactTwirl>;

struct ProtocolTranscript {
  int sent = 0;
  /// nullopt when the exact twirl channel was applied.
  std::optional<GroupElement> misalignment;
  std::vector<double> probabilities;
  int decoded = 0;
  bool success = false;
};

ProtocolTranscript transmit(const Codebook& codebook, int message, const Misalignment& misalignment);
ProtocolTranscript transmit_sampled(const Codebook& codebook, int message, Rng& rng);

enum class Mode { sampled, twirl };
std::string_view mode_name(Mode mode);
Mode parse_mode(std::string_view text);

struct SimulationSummary {
  int r = 0;
  CodebookKind codebook = CodebookKind::invariant;
  Mode mode = Mode::sampled;
  std::uint64_t trials = 0;  // per message
  std::uint64_t seed = 0;
  std::vector<std::string> labels;
  std::vector<bool> convention_dependent;
  /// confusion[sent][outcome]: outcome probability averaged over trials.
  std::vector<std::vector<double>> confusion;
  /// decoded_counts[sent][decoded]: argmax decisions.
  std::vector<std::vector<std::uint64_t>> decoded_counts;
  std::vector<double> success_rate;
};

/// Sends every message `trials` times. Trial t of message m draws its
/// misalignment from Rng::substream(seed, m * trials + t), so results do not
/// depend on execution order.
SimulationSummary simulate(const Codebook& codebook, std::uint64_t trials, Mode mode, std::uint64_t seed);

struct SuperselectionOperator {
  int r = 0;
  std::vector<std::pair<double, CMatrix>> terms;  // (weight, projector)

  CMatrix matrix() const;
};

/// sum_i w_i P_i over the invariant copy projectors in message order
/// (ascending T, then copy). Throws InvalidArgument on a weight-count mismatch.
SuperselectionOperator build_superselection_operator(std::span<const double> weights, const SectorTable& table);

/// Independent count of perfectly distinguishable messages: refines the
/// identity into minimal projections of the algebra spanned by the realized
/// permutation operators, checking invariance against 50 sampled g.
int distinguishable_message_oracle(int r);

}  // namespace cuntzsim::protocol

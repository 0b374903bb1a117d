#include "cuntzsim/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "cuntzsim/cuntz.hpp"
#include "cuntzsim/errors.hpp"
#include "cuntzsim/kernels.hpp"
#include "cuntzsim/linalg.hpp"
#include "cuntzsim/twirl.hpp"

namespace cuntzsim::protocol {
namespace {

constexpr double kProjectorTol = 1e-10;

void check_protocol_power(int r) {
  if (r < 0) throw InvalidArgument("qubit count must be >= 0");
  if (r > kMaxProtocolPower) {
    throw ResourceLimit("protocol codebooks limited to r <= " + std::to_string(kMaxProtocolPower) + ", got r=" +
                        std::to_string(r));
  }
}

// tr(P rho) for Hermitian P.
double expectation(const CMatrix& p, const CMatrix& rho) {
  return kernels::dot(p.size(), p.data(), rho.data()).real();
}

std::string path_string(const std::vector<Spin>& path) {
  std::string s;
  for (const auto& t : path) s += (s.empty() ? "" : ",") + t.to_string();
  return s;
}

}  // namespace

std::string_view kind_name(CodebookKind kind) { return kind == CodebookKind::invariant ? "invariant" : "naive"; }

CodebookKind parse_codebook_kind(std::string_view text) {
  if (text == "invariant") return CodebookKind::invariant;
  if (text == "naive") return CodebookKind::naive;
  throw InvalidArgument("unknown codebook '" + std::string(text) + "' (invariant|naive)");
}

std::string_view mode_name(Mode mode) { return mode == Mode::sampled ? "sampled" : "twirl"; }

Mode parse_mode(std::string_view text) {
  if (text == "sampled") return Mode::sampled;
  if (text == "twirl") return Mode::twirl;
  throw InvalidArgument("unknown misalignment mode '" + std::string(text) + "' (sampled|twirl)");
}

const CodebookEntry& Codebook::entry(int id) const {
  if (id < 0 || id >= static_cast<int>(entries.size())) {
    throw NotFound("message " + std::to_string(id) + " not in codebook of size " + std::to_string(entries.size()));
  }
  return entries[static_cast<std::size_t>(id)];
}

Capacity capacity(int r) {
  const auto& table = repsu2::decompose(r);
  Capacity cap;
  cap.r = r;
  for (const auto& s : table.sectors) {
    cap.breakdown.emplace_back(s.T, s.multiplicity);
    cap.message_count += s.multiplicity;
  }
  cap.bits = std::log2(static_cast<double>(cap.message_count));
  return cap;
}

Codebook build_codebook(int r, CodebookKind kind) {
  check_protocol_power(r);
  const auto& table = repsu2::decompose(r);
  Codebook book;
  book.r = r;
  book.kind = kind;
  int id = 0;
  for (auto it = table.sectors.rbegin(); it != table.sectors.rend(); ++it) {
    const auto& s = *it;
    for (int c = 0; c < s.multiplicity; ++c) {
      const std::string base = "T=" + s.T.to_string() + " copy " + std::to_string(c) + " [path " +
                               path_string(s.paths[static_cast<std::size_t>(c)]) + "]";
      if (kind == CodebookKind::invariant) {
        CodebookEntry e;
        e.id = id++;
        e.label = base;
        e.T = s.T;
        e.copy = c;
        e.convention_dependent = s.multiplicity > 1;
        e.decoder = repsu2::copy_projector(table, s.T, c).entries();
        e.state = (1.0 / s.dim) * e.decoder;
        book.entries.push_back(std::move(e));
      } else {
        for (int k = 0; k < s.dim; ++k) {
          const Spin tz = Spin::from_twice(s.T.twice() - 2 * k);
          CodebookEntry e;
          e.id = id++;
          e.label = base + " Tz=" + tz.to_string();
          e.T = s.T;
          e.copy = c;
          e.Tz = tz;
          e.convention_dependent = s.multiplicity > 1;
          const auto& v = s.copies[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
          e.decoder = outer(v, v);
          e.state = e.decoder;
          book.entries.push_back(std::move(e));
        }
      }
    }
  }
  return book;
}

void validate_codebook(const Codebook& codebook, int checks, std::uint64_t seed) {
  const auto& es = codebook.entries;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!is_projector(es[i].decoder, kProjectorTol)) {
      throw InternalConsistency("decoder " + std::to_string(i) + " is not an orthogonal projector");
    }
    if (std::abs(es[i].state.trace() - 1.0) > kProjectorTol || min_eigenvalue(es[i].state) < -kProjectorTol) {
      throw InternalConsistency("state " + std::to_string(i) + " is not a density operator");
    }
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if ((es[i].decoder * es[j].decoder).frobenius_norm() > kProjectorTol) {
        throw InternalConsistency("decoders " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
    }
  }
  if (codebook.kind != CodebookKind::invariant) return;
  Rng rng(seed);
  for (int k = 0; k < checks; ++k) {
    const auto u = repsu2::rep_power(twirl::haar_sample(rng), codebook.r).entries();
    for (const auto& e : es) {
      if (commutator(e.decoder, u).frobenius_norm() > 1e-9) {
        throw InternalConsistency("decoder " + std::to_string(e.id) + " is not invariant");
      }
    }
  }
}

ProtocolTranscript transmit(const Codebook& codebook, int message, const Misalignment& misalignment) {
  const CodebookEntry& entry = codebook.entry(message);
  ProtocolTranscript t;
  t.sent = message;
  CMatrix received;
  if (const auto* g = std::get_if<GroupElement>(&misalignment)) {
    t.misalignment = *g;
    const CMatrix u = repsu2::rep_power(*g, codebook.r).entries();
    received = u * entry.state * u.adjoint();
  } else {
    received = twirl::twirl_analytic(repsu2::TensorOperator(codebook.r, entry.state)).entries();
  }
  t.probabilities.reserve(codebook.size());
  double total = 0.0;
  for (const auto& e : codebook.entries) {
    const double p = expectation(e.decoder, received);
    if (p < -1e-12) throw InternalConsistency("negative outcome probability " + std::to_string(p));
    t.probabilities.push_back(std::max(p, 0.0));
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw InternalConsistency("outcome probabilities sum to " + std::to_string(total));
  }
  // argmax; outcomes within kTieTolerance of the maximum tie and the lowest id wins
  const double best = *std::max_element(t.probabilities.begin(), t.probabilities.end());
  t.decoded = static_cast<int>(std::find_if(t.probabilities.begin(), t.probabilities.end(),
                                            [&](double p) { return p >= best - kTieTolerance; }) -
                               t.probabilities.begin());
  t.success = t.decoded == message;
  return t;
}

ProtocolTranscript transmit_sampled(const Codebook& codebook, int message, Rng& rng) {
  return transmit(codebook, message, twirl::haar_sample(rng));
}

SimulationSummary simulate(const Codebook& codebook, std::uint64_t trials, Mode mode, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("simulate needs trials >= 1");
  const std::size_t n = codebook.size();
  SimulationSummary s;
  s.r = codebook.r;
  s.codebook = codebook.kind;
  s.mode = mode;
  s.trials = trials;
  s.seed = seed;
  s.confusion.assign(n, std::vector<double>(n, 0.0));
  s.decoded_counts.assign(n, std::vector<std::uint64_t>(n, 0));
  s.success_rate.assign(n, 0.0);
  for (const auto& e : codebook.entries) {
    s.labels.push_back(e.label);
    s.convention_dependent.push_back(e.convention_dependent);
  }
  for (std::size_t m = 0; m < n; ++m) {
    const int msg = static_cast<int>(m);
    if (mode == Mode::twirl) {
      const auto t = transmit(codebook, msg, ExactTwirl{});
      s.confusion[m] = t.probabilities;
      s.decoded_counts[m][static_cast<std::size_t>(t.decoded)] = trials;
      s.success_rate[m] = t.success ? 1.0 : 0.0;
      continue;
    }
    // Per-message running sums, reduced pairwise at the end for order independence.
    std::vector<std::vector<double>> partial;
    std::vector<double> block(n, 0.0);
    std::uint64_t successes = 0;
    for (std::uint64_t k = 0; k < trials; ++k) {
      Rng rng = Rng::substream(seed, m * trials + k);
      const auto t = transmit_sampled(codebook, msg, rng);
      for (std::size_t j = 0; j < n; ++j) block[j] += t.probabilities[j];
      ++s.decoded_counts[m][static_cast<std::size_t>(t.decoded)];
      if (t.success) ++successes;
      if ((k + 1) % 256 == 0 || k + 1 == trials) {
        partial.push_back(block);
        std::fill(block.begin(), block.end(), 0.0);
      }
    }
    while (partial.size() > 1) {
      std::vector<std::vector<double>> next;
      for (std::size_t i = 0; i + 1 < partial.size(); i += 2) {
        for (std::size_t j = 0; j < n; ++j) partial[i][j] += partial[i + 1][j];
        next.push_back(std::move(partial[i]));
      }
      if (partial.size() % 2 == 1) next.push_back(std::move(partial.back()));
      partial = std::move(next);
    }
    for (std::size_t j = 0; j < n; ++j) s.confusion[m][j] = partial.front()[j] / static_cast<double>(trials);
    s.success_rate[m] = static_cast<double>(successes) / static_cast<double>(trials);
  }
  return s;
}

CMatrix SuperselectionOperator::matrix() const {
  CMatrix out(repsu2::power_dim(r), repsu2::power_dim(r));
  for (const auto& [w, p] : terms) out.add_scaled(w, p);
  return out;
}

SuperselectionOperator build_superselection_operator(std::span<const double> weights, const SectorTable& table) {
  if (static_cast<int>(weights.size()) != table.total_copies()) {
    throw InvalidArgument("superselection operator needs " + std::to_string(table.total_copies()) +
                          " weights (one per sector copy), got " + std::to_string(weights.size()));
  }
  SuperselectionOperator op;
  op.r = table.r;
  std::size_t k = 0;
  for (auto it = table.sectors.rbegin(); it != table.sectors.rend(); ++it)
    for (int c = 0; c < it->multiplicity; ++c)
      op.terms.emplace_back(weights[k++], repsu2::copy_projector(table, it->T, c).entries());
  return op;
}

int distinguishable_message_oracle(int r) {
  if (r < 0 || r > 4) throw ResourceLimit("distinguishable_message_oracle supports 0 <= r <= 4");
  const std::size_t dim = repsu2::power_dim(r);

  std::vector<CMatrix> algebra;
  for (const auto& p : cuntz::Permutation::all(r)) {
    algebra.push_back(repsu2::realize(cuntz::permutation_operator(p, 2), r).entries());
  }

  Rng rng(20240611);
  std::vector<CMatrix> probes;
  for (int k = 0; k < 50; ++k) probes.push_back(repsu2::rep_power(twirl::haar_sample(rng), r).entries());
  for (const auto& a : algebra)
    for (const auto& u : probes)
      if (commutator(a, u).frobenius_norm() > 1e-9) throw InternalConsistency("permutation operator not invariant");

  Rng coeffs(7);
  std::vector<CMatrix> minimal;
  std::deque<CMatrix> pending{CMatrix::identity(dim)};
  while (!pending.empty()) {
    CMatrix p = std::move(pending.front());
    pending.pop_front();
    std::vector<CMatrix> compressed;
    for (const auto& a : algebra) compressed.push_back(p * a * p);
    if (span_rank(compressed) <= 1) {
      minimal.push_back(std::move(p));
      continue;
    }
    // Orthonormal basis Q of range(P), then split P by the spectrum of a
    // random Hermitian element of P A P expressed in that basis.
    const auto pe = eigh(p);
    std::vector<std::size_t> range_cols;
    for (std::size_t k = 0; k < dim; ++k)
      if (pe.values[k] > 0.5) range_cols.push_back(k);
    CMatrix q(dim, range_cols.size());
    for (std::size_t c = 0; c < range_cols.size(); ++c)
      for (std::size_t i = 0; i < dim; ++i) q(i, c) = pe.vectors(i, range_cols[c]);

    bool split = false;
    for (int attempt = 0; attempt < 8 && !split; ++attempt) {
      CMatrix h(dim, dim);
      for (const auto& c : compressed) {
        h.add_scaled(2.0 * coeffs.uniform() - 1.0, c);
        h.add_scaled(Complex(0.0, 2.0 * coeffs.uniform() - 1.0), c);
      }
      h = 0.5 * (h + h.adjoint());
      const auto he = eigh(q.adjoint() * h * q);
      const double scale = std::max(1.0, std::abs(he.values.back()) + std::abs(he.values.front()));
      std::vector<CMatrix> pieces;
      std::size_t start = 0;
      for (std::size_t k = 1; k <= he.values.size(); ++k) {
        if (k == he.values.size() || he.values[k] - he.values[k - 1] > 1e-7 * scale) {
          CMatrix w(range_cols.size(), k - start);
          for (std::size_t c = start; c < k; ++c)
            for (std::size_t i = 0; i < range_cols.size(); ++i) w(i, c - start) = he.vectors(i, c);
          const CMatrix qw = q * w;
          pieces.push_back(qw * qw.adjoint());
          start = k;
        }
      }
      if (pieces.size() > 1) {
        split = true;
        for (auto& piece : pieces) pending.push_back(std::move(piece));
      }
    }
    if (!split) throw InternalConsistency("could not split a non-minimal projection");
  }

  for (std::size_t i = 0; i < minimal.size(); ++i) {
    for (const auto& u : probes)
      if (commutator(minimal[i], u).frobenius_norm() > 1e-8) throw InternalConsistency("oracle projection not invariant");
    for (std::size_t j = i + 1; j < minimal.size(); ++j)
      if ((minimal[i] * minimal[j]).frobenius_norm() > 1e-8) throw InternalConsistency("oracle projections overlap");
  }
  return static_cast<int>(minimal.size());
}

}  // namespace cuntzsim::protocol

#include "cuntzsim/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cuntzsim/cuntz.hpp"
#include "cuntzsim/errors.hpp"
#include "cuntzsim/io.hpp"
#include "cuntzsim/protocol.hpp"
#include "cuntzsim/repsu2.hpp"
#include "cuntzsim/twirl.hpp"

namespace cuntzsim::cli {
namespace {

using io::json;

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  2  invalid flags, malformed input or invalid arguments\n"
    "  3  resource limit exceeded (e.g. r above r_max; see CUNTZSIM_RMAX)\n"
    "  4  internal invariant violated\n";

std::string fmt6(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::string fmt6(Complex z) {
  if (z.imag() == 0.0) return fmt6(z.real());
  if (z.real() == 0.0) return fmt6(z.imag()) + "i";
  std::string im = fmt6(z.imag());
  if (im.front() != '-') im = "+" + im;
  return "(" + fmt6(z.real()) + im + "i)";
}

std::string word_label(std::size_t index, int r) {
  std::string s = "|";
  for (int k = r - 1; k >= 0; --k) s += ((index >> k) & 1U) ? '2' : '1';
  return s + ">";
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InvalidArgument("cannot open output file '" + path + "'");
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json with_schema(json body) {
  json out{{"schema", io::kSchemaVersion}};
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

void write_sector_pretty(std::ostream& os, const repsu2::SectorTable& table, bool basis) {
  os << "r = " << table.r << ", dim = " << table.total_dim() << "\n";
  os << std::left << std::setw(8) << "T" << std::setw(8) << "mult" << "dim\n";
  for (const auto& s : table.sectors) {
    os << std::left << std::setw(8) << s.T.to_string() << std::setw(8) << s.multiplicity << s.dim << "\n";
  }
  if (!basis) return;
  for (const auto& s : table.sectors) {
    for (std::size_t c = 0; c < s.copies.size(); ++c) {
      for (std::size_t k = 0; k < s.copies[c].size(); ++k) {
        os << "T=" << s.T.to_string() << " copy " << c
           << " Tz=" << Spin::from_twice(s.T.twice() - 2 * static_cast<int>(k)).to_string() << ":";
        const auto& v = s.copies[c][k];
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (std::abs(v[i]) > 1e-12) os << " " << fmt6(v[i]) << word_label(i, table.r);
        }
        os << "\n";
      }
    }
  }
}

void write_sector_csv(std::ostream& os, const repsu2::SectorTable& table) {
  os << "T,mult,dim\n";
  for (const auto& s : table.sectors) os << s.T.to_string() << "," << s.multiplicity << "," << s.dim << "\n";
}

std::string format_choice_help() { return "Output format: json, csv or pretty"; }

void check_format(const std::string& f) {
  if (f != "json" && f != "csv" && f != "pretty") throw InvalidArgument("unknown format '" + f + "'");
}

struct DecomposeArgs {
  int r = 0;
  std::string format = "pretty";
  bool basis = false;
  std::string out;
};

void cmd_decompose(const DecomposeArgs& a, std::ostream& out) {
  check_format(a.format);
  const auto& table = repsu2::decompose(a.r);
  Output o(a.out, out);
  if (a.format == "json") {
    o.get() << io::dump(with_schema(io::sector_table_to_json(table, a.basis)));
  } else if (a.format == "csv") {
    write_sector_csv(o.get(), table);
  } else {
    write_sector_pretty(o.get(), table, a.basis);
  }
}

struct TwirlArgs {
  std::string in;
  std::string method = "analytic";
  std::vector<int> nodes{32, 32, 32};
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  std::string out;
};

void cmd_twirl(const TwirlArgs& a, std::ostream& out) {
  if (a.nodes.size() != 3) throw InvalidArgument("--nodes expects three comma-separated counts");
  twirl::TwirlMethod method;
  method.kind = twirl::parse_kind(a.method);
  method.nodes = {a.nodes[0], a.nodes[1], a.nodes[2]};
  method.samples = a.samples;
  method.seed = a.seed;
  method.validate();

  const auto op = io::operator_from_json(io::parse_json(read_file(a.in)));
  const auto result = twirl::twirl(op, method);

  json meta{{"kind", twirl::kind_name(method.kind)}};
  if (method.kind == twirl::Kind::quadrature) meta["nodes"] = a.nodes;
  if (method.kind == twirl::Kind::montecarlo) {
    meta["samples"] = method.samples;
    meta["seed"] = method.seed;
  }
  json body = io::operator_to_json(result);
  body["method"] = std::move(meta);
  Output o(a.out, out);
  o.get() << io::dump(with_schema(std::move(body)));
}

struct SimulateArgs {
  int r = 2;
  std::uint64_t trials = 10000;
  std::string mode = "sampled";
  std::string codebook = "invariant";
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string out;
};

void cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  check_format(a.format);
  const auto book = protocol::build_codebook(a.r, protocol::parse_codebook_kind(a.codebook));
  const auto summary = protocol::simulate(book, a.trials, protocol::parse_mode(a.mode), a.seed);
  Output o(a.out, out);
  std::ostream& os = o.get();
  if (a.format == "json") {
    os << io::dump(with_schema(io::summary_to_json(summary)));
  } else if (a.format == "csv") {
    os << "sent,outcome,probability,decoded_count\n";
    for (std::size_t m = 0; m < summary.confusion.size(); ++m) {
      for (std::size_t k = 0; k < summary.confusion[m].size(); ++k) {
        os << m << "," << k << "," << io::json(summary.confusion[m][k]).dump() << ","
           << summary.decoded_counts[m][k] << "\n";
      }
    }
  } else {
    os << "r = " << summary.r << ", codebook = " << protocol::kind_name(summary.codebook)
       << ", mode = " << protocol::mode_name(summary.mode) << ", trials = " << summary.trials
       << ", seed = " << summary.seed << "\n";
    for (std::size_t m = 0; m < summary.labels.size(); ++m) {
      os << m << "  " << summary.labels[m] << (summary.convention_dependent[m] ? " *" : "")
         << "  success " << fmt6(summary.success_rate[m]) << "  p =";
      for (double p : summary.confusion[m]) os << " " << fmt6(p);
      os << "\n";
    }
    if (std::find(summary.convention_dependent.begin(), summary.convention_dependent.end(), true) !=
        summary.convention_dependent.end()) {
      os << "* label depends on the choice of multiplicity-copy basis\n";
    }
  }
}

struct CapacityArgs {
  int min_r = 2;
  int max_r = 4;
  bool oracle = false;
  std::string format = "pretty";
  std::string out;
};

void cmd_capacity(const CapacityArgs& a, std::ostream& out) {
  check_format(a.format);
  if (a.min_r < 0 || a.max_r < a.min_r) throw InvalidArgument("need 0 <= --min-r <= --max-r");
  std::vector<protocol::Capacity> rows;
  std::vector<int> oracle;
  for (int r = a.min_r; r <= a.max_r; ++r) {
    rows.push_back(protocol::capacity(r));
    if (a.oracle) oracle.push_back(protocol::distinguishable_message_oracle(r));
  }
  Output o(a.out, out);
  std::ostream& os = o.get();
  if (a.format == "json") {
    json arr = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      json row = io::capacity_to_json(rows[i]);
      if (a.oracle) row["oracle"] = oracle[i];
      arr.push_back(std::move(row));
    }
    os << io::dump(with_schema(json{{"rows", std::move(arr)}}));
  } else if (a.format == "csv") {
    os << "r,messages,bits" << (a.oracle ? ",oracle" : "") << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << rows[i].r << "," << rows[i].message_count << "," << json(rows[i].bits).dump();
      if (a.oracle) os << "," << oracle[i];
      os << "\n";
    }
  } else {
    os << std::left << std::setw(6) << "r" << std::setw(10) << "messages";
    if (a.oracle) os << std::setw(10);
    os << "bits" << (a.oracle ? "oracle" : "") << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << std::left << std::setw(6) << rows[i].r << std::setw(10) << rows[i].message_count;
      if (a.oracle) os << std::setw(10);
      os << fmt6(rows[i].bits);
      if (a.oracle) os << oracle[i];
      os << "\n";
    }
  }
}

struct RealizeArgs {
  std::string expr;
  int r = 1;
  bool vector = false;
  std::string format = "json";
  std::string out;
};

void cmd_realize(const RealizeArgs& a, std::ostream& out) {
  if (a.format != "json" && a.format != "pretty") throw InvalidArgument("realize supports json or pretty");
  const auto x = cuntz::parse(a.expr, 2);
  Output o(a.out, out);
  std::ostream& os = o.get();
  if (a.vector) {
    const auto v = repsu2::realize_vector(x);
    if (a.format == "json") {
      os << io::dump(with_schema(io::vector_to_json(v)));
    } else {
      int r = 0;
      while ((std::size_t{1} << r) < v.size()) ++r;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-12) os << fmt6(v[i]) << " " << word_label(i, r) << "\n";
      }
    }
    return;
  }
  const auto op = repsu2::realize(x, a.r);
  if (a.format == "json") {
    os << io::dump(with_schema(io::operator_to_json(op)));
  } else {
    for (std::size_t i = 0; i < op.dim(); ++i) {
      for (std::size_t k = 0; k < op.dim(); ++k) os << (k ? " " : "") << fmt6(op(i, k));
      os << "\n";
    }
  }
}

struct MomentArgs {
  std::vector<int> powers{0, 0, 0, 0};
  std::string method = "quad";
  std::vector<int> nodes{32, 32, 32};
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
};

void cmd_moment(const MomentArgs& a, std::ostream& out) {
  if (a.powers.size() != 4) throw InvalidArgument("--powers expects a,b,c,d");
  if (a.nodes.size() != 3) throw InvalidArgument("--nodes expects three comma-separated counts");
  for (int p : a.powers) {
    if (p < 0) throw InvalidArgument("--powers must be non-negative");
  }
  const twirl::Monomial m{a.powers[0], a.powers[1], a.powers[2], a.powers[3]};
  const auto kind = twirl::parse_kind(a.method);
  json body{{"powers", a.powers}, {"method", twirl::kind_name(kind)}};
  if (kind == twirl::Kind::montecarlo) {
    const auto est = twirl::haar_moment_montecarlo(m, a.samples, a.seed);
    body["samples"] = a.samples;
    body["seed"] = a.seed;
    body["re"] = est.mean.real();
    body["im"] = est.mean.imag();
    body["stderr_re"] = est.stderr_re;
    body["stderr_im"] = est.stderr_im;
  } else if (kind == twirl::Kind::quadrature) {
    const auto v = twirl::haar_moment(m, {a.nodes[0], a.nodes[1], a.nodes[2]});
    body["nodes"] = a.nodes;
    body["re"] = v.real();
    body["im"] = v.imag();
  } else {
    throw InvalidArgument("moment supports --method quad or mc");
  }
  out << io::dump(with_schema(std::move(body)));
}

// CUNTZSIM_RMAX when set, else 4
int default_capacity_max() { return std::getenv("CUNTZSIM_RMAX") != nullptr ? repsu2::max_power() : 4; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulator for classical messaging under SU(2) superselection on qubit tensor powers."};
  app.name("cuntzsim");
  app.footer(kExitCodes);
  app.require_subcommand(1);

  DecomposeArgs dec;
  auto* sub_dec = app.add_subcommand("decompose", "Isotypic sector table of the r-th tensor power");
  sub_dec->add_option("--r", dec.r, "Tensor power")->required();
  sub_dec->add_option("--format", dec.format, format_choice_help())->capture_default_str();
  sub_dec->add_flag("--basis", dec.basis, "Include the orthonormal basis of every copy");
  sub_dec->add_option("--out", dec.out, "Output file (default stdout)");

  TwirlArgs tw;
  auto* sub_tw = app.add_subcommand("twirl", "Haar-average an operator read from JSON");
  sub_tw->add_option("--in", tw.in, "Input operator JSON")->required();
  sub_tw->add_option("--method", tw.method, "analytic, quad or mc")->capture_default_str();
  sub_tw->add_option("--nodes", tw.nodes, "Quadrature nodes theta,phi1,phi2")->delimiter(',')->expected(3);
  sub_tw->add_option("--samples", tw.samples, "Monte Carlo samples")->capture_default_str();
  sub_tw->add_option("--seed", tw.seed, "Monte Carlo seed")->capture_default_str();
  sub_tw->add_option("--out", tw.out, "Output file (default stdout)");

  SimulateArgs sim;
  auto* sub_sim = app.add_subcommand("simulate", "Run the messaging protocol for every codebook message");
  sub_sim->add_option("--r", sim.r, "Number of qubits")->required();
  sub_sim->add_option("--trials", sim.trials, "Trials per message")->capture_default_str();
  sub_sim->add_option("--mode", sim.mode, "sampled or twirl")->capture_default_str();
  sub_sim->add_option("--codebook", sim.codebook, "invariant or naive")->capture_default_str();
  sub_sim->add_option("--seed", sim.seed, "Seed for sampled misalignments")->capture_default_str();
  sub_sim->add_option("--format", sim.format, format_choice_help())->capture_default_str();
  sub_sim->add_option("--out", sim.out, "Output file (default stdout)");

  CapacityArgs cap;
  cap.max_r = default_capacity_max();
  auto* sub_cap = app.add_subcommand("capacity", "Perfectly distinguishable messages per r");
  sub_cap->add_option("--min-r", cap.min_r, "Smallest r")->capture_default_str();
  sub_cap->add_option("--max-r", cap.max_r, "Largest r")->capture_default_str();
  sub_cap->add_flag("--oracle", cap.oracle, "Cross-check with the independent commutant count (r <= 4)");
  sub_cap->add_option("--format", cap.format, format_choice_help())->capture_default_str();
  sub_cap->add_option("--out", cap.out, "Output file (default stdout)");

  RealizeArgs rl;
  auto* sub_rl = app.add_subcommand("realize", "Matrix of a Cuntz expression such as 'psi1 psi2 psi2* psi1*'");
  sub_rl->add_option("--expr", rl.expr, "Expression")->required();
  sub_rl->add_option("--r", rl.r, "Tensor power of the operator")->capture_default_str();
  sub_rl->add_flag("--vector", rl.vector, "Realize a creation-only element as a state vector");
  sub_rl->add_option("--format", rl.format, "json or pretty")->capture_default_str();
  sub_rl->add_option("--out", rl.out, "Output file (default stdout)");

  MomentArgs mo;
  auto* sub_mo = app.add_subcommand("moment", "Haar integral of alpha^a conj(alpha)^b beta^c conj(beta)^d");
  sub_mo->add_option("--powers", mo.powers, "a,b,c,d")->delimiter(',')->expected(4)->required();
  sub_mo->add_option("--method", mo.method, "quad or mc")->capture_default_str();
  sub_mo->add_option("--nodes", mo.nodes, "Quadrature nodes theta,phi1,phi2")->delimiter(',')->expected(3);
  sub_mo->add_option("--samples", mo.samples, "Monte Carlo samples")->capture_default_str();
  sub_mo->add_option("--seed", mo.seed, "Monte Carlo seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*sub_dec) cmd_decompose(dec, out);
    if (*sub_tw) cmd_twirl(tw, out);
    if (*sub_sim) cmd_simulate(sim, out);
    if (*sub_cap) cmd_capacity(cap, out);
    if (*sub_rl) cmd_realize(rl, out);
    if (*sub_mo) cmd_moment(mo, out);
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalConsistency& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace cuntzsim::cli

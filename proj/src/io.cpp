#include "cuntzsim/io.hpp"

#include <cmath>
#include <string>

#include "cuntzsim/errors.hpp"

namespace cuntzsim::io {
namespace {

[[noreturn]] void field_error(std::string_view field, std::string_view what) {
  throw ParseError("field '" + std::string(field) + "': " + std::string(what));
}

const json& require(const json& j, std::string_view key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(std::string(key));
  if (it == j.end()) field_error(key, "missing");
  return *it;
}

int require_int(const json& j, std::string_view key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) field_error(key, "expected an integer");
  return v.get<int>();
}

std::string require_string(const json& j, std::string_view key) {
  const json& v = require(j, key);
  if (!v.is_string()) field_error(key, "expected a string");
  return v.get<std::string>();
}

std::vector<double> number_row(const json& row, const std::string& where, std::size_t expected) {
  if (!row.is_array()) field_error(where, "expected an array");
  if (row.size() != expected) {
    field_error(where, "expected " + std::to_string(expected) + " entries, got " + std::to_string(row.size()));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (!row[k].is_number()) field_error(where + "[" + std::to_string(k) + "]", "expected a number");
    out.push_back(row[k].get<double>());
  }
  return out;
}

json vector_parts(const StateVector& v) {
  json re = json::array();
  json im = json::array();
  for (const auto& z : v) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

StateVector vector_parts_from(const json& j, std::size_t dim, const std::string& where) {
  const auto re = number_row(require(j, "re"), where + ".re", dim);
  const auto im = number_row(require(j, "im"), where + ".im", dim);
  StateVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = Complex(re[i], im[i]);
  return v;
}

int power_of_dim(std::size_t dim) {
  int r = 0;
  while ((std::size_t{1} << r) < dim) ++r;
  return r;
}

}  // namespace

json operator_to_json(const repsu2::TensorOperator& op) {
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < op.dim(); ++i) {
    json rr = json::array();
    json ii = json::array();
    for (std::size_t k = 0; k < op.dim(); ++k) {
      rr.push_back(op(i, k).real());
      ii.push_back(op(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return json{{"r", op.r()}, {"dim", op.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

repsu2::TensorOperator operator_from_json(const json& j) {
  const int r = require_int(j, "r");
  if (r < 0 || r > repsu2::max_power()) field_error("r", "must lie in 0.." + std::to_string(repsu2::max_power()));
  const int dim = require_int(j, "dim");
  if (static_cast<std::size_t>(dim) != repsu2::power_dim(r)) {
    field_error("dim", "must equal 2^r = " + std::to_string(repsu2::power_dim(r)));
  }
  const auto n = static_cast<std::size_t>(dim);
  const json& re = require(j, "re");
  const json& im = require(j, "im");
  if (!re.is_array() || re.size() != n) field_error("re", "expected " + std::to_string(n) + " rows");
  if (!im.is_array() || im.size() != n) field_error("im", "expected " + std::to_string(n) + " rows");
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto rr = number_row(re[i], "re[" + std::to_string(i) + "]", n);
    const auto ii = number_row(im[i], "im[" + std::to_string(i) + "]", n);
    for (std::size_t k = 0; k < n; ++k) m(i, k) = Complex(rr[k], ii[k]);
  }
  return repsu2::TensorOperator(r, std::move(m));
}

json vector_to_json(const StateVector& v) {
  json out{{"r", power_of_dim(v.size())}, {"dim", v.size()}};
  json parts = vector_parts(v);
  out["re"] = std::move(parts["re"]);
  out["im"] = std::move(parts["im"]);
  return out;
}

StateVector vector_from_json(const json& j) {
  const int dim = require_int(j, "dim");
  if (dim < 1) field_error("dim", "must be positive");
  return vector_parts_from(j, static_cast<std::size_t>(dim), "vector");
}

json sector_table_to_json(const repsu2::SectorTable& table, bool include_basis) {
  json sectors = json::array();
  for (const auto& s : table.sectors) {
    json js{{"T", s.T.to_string()}, {"mult", s.multiplicity}, {"dim", s.dim}};
    if (include_basis) {
      json copies = json::array();
      for (std::size_t c = 0; c < s.copies.size(); ++c) {
        json path = json::array();
        for (const auto& t : s.paths[c]) path.push_back(t.to_string());
        json vecs = json::array();
        for (std::size_t k = 0; k < s.copies[c].size(); ++k) {
          json v{{"Tz", Spin::from_twice(s.T.twice() - 2 * static_cast<int>(k)).to_string()}};
          json parts = vector_parts(s.copies[c][k]);
          v["re"] = std::move(parts["re"]);
          v["im"] = std::move(parts["im"]);
          vecs.push_back(std::move(v));
        }
        copies.push_back(json{{"path", std::move(path)}, {"vectors", std::move(vecs)}});
      }
      js["basis"] = std::move(copies);
    }
    sectors.push_back(std::move(js));
  }
  return json{{"r", table.r}, {"sectors", std::move(sectors)}};
}

repsu2::SectorTable sector_table_from_json(const json& j) {
  repsu2::SectorTable table;
  table.r = require_int(j, "r");
  if (table.r < 0 || table.r > repsu2::max_power()) field_error("r", "out of range");
  const json& sectors = require(j, "sectors");
  if (!sectors.is_array()) field_error("sectors", "expected an array");
  const std::size_t n = repsu2::power_dim(table.r);
  for (std::size_t k = 0; k < sectors.size(); ++k) {
    const json& js = sectors[k];
    repsu2::Sector s;
    s.T = Spin::parse(require_string(js, "T"));
    s.multiplicity = require_int(js, "mult");
    s.dim = require_int(js, "dim");
    if (s.dim != s.T.multiplet_dim()) field_error("sectors[" + std::to_string(k) + "].dim", "must equal 2T+1");
    if (auto it = js.find("basis"); it != js.end()) {
      if (!it->is_array() || it->size() != static_cast<std::size_t>(s.multiplicity)) {
        field_error("sectors[" + std::to_string(k) + "].basis", "expected one entry per copy");
      }
      for (std::size_t c = 0; c < it->size(); ++c) {
        const json& copy = (*it)[c];
        std::vector<Spin> path;
        for (const auto& t : require(copy, "path")) path.push_back(Spin::parse(t.get<std::string>()));
        const json& vecs = require(copy, "vectors");
        if (!vecs.is_array() || vecs.size() != static_cast<std::size_t>(s.dim)) {
          field_error("sectors[" + std::to_string(k) + "].basis.vectors", "expected 2T+1 vectors");
        }
        std::vector<StateVector> vs;
        for (std::size_t v = 0; v < vecs.size(); ++v) vs.push_back(vector_parts_from(vecs[v], n, "basis vector"));
        s.copies.push_back(std::move(vs));
        s.paths.push_back(std::move(path));
      }
    }
    table.sectors.push_back(std::move(s));
  }
  return table;
}

json capacity_to_json(const protocol::Capacity& cap) {
  json breakdown = json::array();
  for (const auto& [t, m] : cap.breakdown) breakdown.push_back(json{{"T", t.to_string()}, {"mult", m}});
  return json{{"r", cap.r}, {"messages", cap.message_count}, {"bits", cap.bits}, {"breakdown", std::move(breakdown)}};
}

json summary_to_json(const protocol::SimulationSummary& s) {
  json out;
  out["r"] = s.r;
  out["trials"] = s.trials;
  out["mode"] = protocol::mode_name(s.mode);
  out["codebook"] = protocol::kind_name(s.codebook);
  out["seed"] = s.seed;
  out["messages"] = s.labels;
  out["convention_dependent"] = s.convention_dependent;
  out["confusion"] = s.confusion;
  out["decoded_counts"] = s.decoded_counts;
  out["success_rate"] = s.success_rate;
  return out;
}

protocol::SimulationSummary summary_from_json(const json& j) {
  protocol::SimulationSummary s;
  s.r = require_int(j, "r");
  s.trials = require(j, "trials").get<std::uint64_t>();
  s.mode = protocol::parse_mode(require_string(j, "mode"));
  s.codebook = protocol::parse_codebook_kind(require_string(j, "codebook"));
  s.seed = require(j, "seed").get<std::uint64_t>();
  s.labels = require(j, "messages").get<std::vector<std::string>>();
  s.convention_dependent = require(j, "convention_dependent").get<std::vector<bool>>();
  s.confusion = require(j, "confusion").get<std::vector<std::vector<double>>>();
  s.decoded_counts = require(j, "decoded_counts").get<std::vector<std::vector<std::uint64_t>>>();
  s.success_rate = require(j, "success_rate").get<std::vector<double>>();
  return s;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace cuntzsim::io

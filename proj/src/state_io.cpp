#include "vdge/state_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vdge/error.hpp"

namespace vdge {

namespace {

using nlohmann::json;

constexpr double kNormBand = 1e-6;

json load_document(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw_error(errc::parse_error, std::string("invalid state document: ") + e.what());
  }
  if (!doc.is_object()) throw_error(errc::parse_error, "state document must be an object");
  return doc;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_error(errc::io_error, "cannot open '" + path + "' for reading");
  return load_document(in);
}

int read_qubit_field(const json& doc) {
  if (!doc.contains("n")) throw_error(errc::parse_error, "field 'n' is missing");
  const json& n = doc.at("n");
  if (!n.is_number_integer()) throw_error(errc::parse_error, "field 'n' must be an integer");
  return n.get<int>();
}

cplx read_complex(const json& entry, const std::string& field) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
    throw_error(errc::parse_error, "field '" + field + "' entries must be [re, im] pairs");
  }
  return {entry[0].get<double>(), entry[1].get<double>()};
}

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

PureState dense_from_json(const json& doc) {
  const int n = read_qubit_field(doc);
  if (n < 1) throw_error(errc::parse_error, "field 'n' must be at least 1");
  if (n > kMaxDenseQubits) throw_error(errc::parse_error, "field 'n' exceeds the dense limit of 26");
  if (!doc.contains("amplitudes")) throw_error(errc::parse_error, "field 'amplitudes' is missing");
  const json& amps = doc.at("amplitudes");
  if (!amps.is_array()) throw_error(errc::parse_error, "field 'amplitudes' must be a list");
  const std::size_t expected = std::size_t{1} << n;
  if (amps.size() != expected) {
    throw_error(errc::parse_error, "field 'amplitudes' must have exactly 2^n entries");
  }
  PureState state;
  state.n = n;
  state.amplitudes.reserve(expected);
  double norm2 = 0.0;
  for (const auto& entry : amps) {
    const cplx z = read_complex(entry, "amplitudes");
    norm2 += std::norm(z);
    state.amplitudes.push_back(z);
  }
  const double norm = std::sqrt(norm2);
  if (std::abs(norm - 1.0) > kNormBand) {
    throw_error(errc::parse_error, "field 'amplitudes' has norm off by more than 1e-6");
  }
  const double inv = 1.0 / norm;
  for (auto& z : state.amplitudes) z *= inv;
  return state;
}

MpsState mps_from_json(const json& doc) {
  const int n = read_qubit_field(doc);
  if (n < 1) throw_error(errc::parse_error, "field 'n' must be at least 1");
  if (!doc.contains("bond_dims")) throw_error(errc::parse_error, "field 'bond_dims' is missing");
  const json& bonds = doc.at("bond_dims");
  if (!bonds.is_array() || bonds.size() != static_cast<std::size_t>(n) + 1) {
    throw_error(errc::parse_error, "field 'bond_dims' must have n+1 entries");
  }
  std::vector<int> dims;
  dims.reserve(bonds.size());
  for (const auto& d : bonds) {
    if (!d.is_number_integer() || d.get<int>() < 1) {
      throw_error(errc::parse_error, "field 'bond_dims' entries must be positive integers");
    }
    dims.push_back(d.get<int>());
  }
  if (dims.front() != 1 || dims.back() != 1) {
    throw_error(errc::parse_error, "field 'bond_dims' boundaries must be 1");
  }

  if (!doc.contains("tensors")) throw_error(errc::parse_error, "field 'tensors' is missing");
  const json& tensors = doc.at("tensors");
  if (!tensors.is_array() || tensors.size() != static_cast<std::size_t>(n)) {
    throw_error(errc::parse_error, "field 'tensors' must have exactly n entries");
  }

  MpsState mps;
  mps.n = n;
  mps.tensors.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const json& tj_in = tensors[static_cast<std::size_t>(j)];
    const int left = dims[static_cast<std::size_t>(j)];
    const int right = dims[static_cast<std::size_t>(j) + 1];
    if (!tj_in.is_array() || tj_in.size() != static_cast<std::size_t>(left)) {
      throw_error(errc::parse_error, "field 'tensors' entry has wrong left-bond size");
    }
    MpsTensor tensor(left, right);
    for (int l = 0; l < left; ++l) {
      const json& phys = tj_in[static_cast<std::size_t>(l)];
      if (!phys.is_array() || phys.size() != 2) {
        throw_error(errc::parse_error, "field 'tensors' entry has wrong physical size");
      }
      for (int s = 0; s < 2; ++s) {
        const json& row = phys[static_cast<std::size_t>(s)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(right)) {
          throw_error(errc::parse_error, "field 'tensors' entry has wrong right-bond size");
        }
        for (int r = 0; r < right; ++r) {
          tensor.at(l, s, r) = read_complex(row[static_cast<std::size_t>(r)], "tensors");
        }
      }
    }
    mps.tensors.push_back(std::move(tensor));
  }

  const double norm = std::sqrt(mps_norm2(mps));
  if (std::abs(norm - 1.0) > kNormBand) {
    throw_error(errc::parse_error, "field 'tensors' has norm off by more than 1e-6");
  }
  return normalize_mps(mps);
}

}  // namespace

StateKind detect_state_kind(const std::string& path) {
  const json doc = load_file(path);
  if (doc.contains("tensors")) return StateKind::mps;
  if (doc.contains("amplitudes")) return StateKind::dense;
  throw_error(errc::parse_error, "state document needs an 'amplitudes' or 'tensors' field");
}

PureState read_dense_state(const std::string& path) { return dense_from_json(load_file(path)); }

PureState parse_dense_state(std::istream& in) { return dense_from_json(load_document(in)); }

void write_dense_state(const PureState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw_error(errc::io_error, "cannot open '" + path + "' for writing");
  print_dense_state(state, out);
  if (!out) throw_error(errc::io_error, "failed writing '" + path + "'");
}

void print_dense_state(const PureState& state, std::ostream& out) {
  json doc;
  doc["n"] = state.n;
  json amps = json::array();
  for (const auto& z : state.amplitudes) amps.push_back(complex_to_json(z));
  doc["amplitudes"] = std::move(amps);
  out << doc.dump(2) << '\n';
}

MpsState read_mps_state(const std::string& path) { return mps_from_json(load_file(path)); }

MpsState parse_mps_state(std::istream& in) { return mps_from_json(load_document(in)); }

void write_mps_state(const MpsState& mps, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw_error(errc::io_error, "cannot open '" + path + "' for writing");
  print_mps_state(mps, out);
  if (!out) throw_error(errc::io_error, "failed writing '" + path + "'");
}

void print_mps_state(const MpsState& mps, std::ostream& out) {
  json doc;
  doc["n"] = mps.n;
  doc["bond_dims"] = mps.bond_dims();
  json tensors = json::array();
  for (const auto& t : mps.tensors) {
    json tj = json::array();
    for (int l = 0; l < t.left; ++l) {
      json phys = json::array();
      for (int s = 0; s < 2; ++s) {
        json row = json::array();
        for (int r = 0; r < t.right; ++r) row.push_back(complex_to_json(t.at(l, s, r)));
        phys.push_back(std::move(row));
      }
      tj.push_back(std::move(phys));
    }
    tensors.push_back(std::move(tj));
  }
  doc["tensors"] = std::move(tensors);
  out << doc.dump(2) << '\n';
}

}  // namespace vdge

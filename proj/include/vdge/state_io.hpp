#pragma once

#include <iosfwd>
#include <string>

#include "vdge/dense_state.hpp"
#include "vdge/mps_state.hpp"

namespace vdge {

// Dense state document:
//   {"n": int, "amplitudes": [[re, im], ...]}    (index order, qubit 1 MSB)
// MPS document:
//   {"n": int, "bond_dims": [d0, ..., dn], "tensors": [[[[re, im], ...]]]}
// with tensors[j][l][s][r] and d0 = dn = 1. Parsers reject wrong-length
// lists; a norm within 1e-6 of 1 is renormalized, anything further off is
// rejected.

enum class StateKind { dense, mps };

StateKind detect_state_kind(const std::string& path);

PureState read_dense_state(const std::string& path);
PureState parse_dense_state(std::istream& in);
void write_dense_state(const PureState& state, const std::string& path);
void print_dense_state(const PureState& state, std::ostream& out);

MpsState read_mps_state(const std::string& path);
MpsState parse_mps_state(std::istream& in);
void write_mps_state(const MpsState& mps, const std::string& path);
void print_mps_state(const MpsState& mps, std::ostream& out);

}  // namespace vdge

#pragma once

#include "vdge/dense_state.hpp"
#include "vdge/mps_state.hpp"

namespace vdge {

// Capability contract shared by the state representations: an exact
// product-state fidelity in [0, 1]. Implementations are immutable and safe
// for concurrent evaluation; they hold a non-owning view of the state.
class FidelityBackend {
public:
  virtual ~FidelityBackend() = default;
  virtual int num_qubits() const = 0;
  virtual double exact_fidelity(const ProductParams& params) const = 0;
};

class DenseBackend final : public FidelityBackend {
public:
  explicit DenseBackend(const PureState& state) : state_(&state) {}
  int num_qubits() const override { return state_->n; }
  double exact_fidelity(const ProductParams& params) const override {
    return vdge::exact_fidelity(*state_, params);
  }
  const PureState& state() const { return *state_; }

private:
  const PureState* state_;
};

class MpsBackend final : public FidelityBackend {
public:
  explicit MpsBackend(const MpsState& state) : state_(&state) {}
  int num_qubits() const override { return state_->n; }
  double exact_fidelity(const ProductParams& params) const override {
    return vdge::exact_fidelity(*state_, params);
  }
  const MpsState& state() const { return *state_; }

private:
  const MpsState* state_;
};

}  // namespace vdge

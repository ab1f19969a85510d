#pragma once

#include <cstddef>
#include <vector>

#include "pqc/grid.hpp"
#include "pqc/rng.hpp"
#include "pqc/templates.hpp"

namespace pqc::detail {

// Uniform [0, 2pi) draw for every block the model leaves unfixed, blocks in
// declaration order, entries in index order. All samplers share this so the
// draw sequence is identical across the statistics and spectrum paths.
ParamMap draw_unfixed_params(const Model& model, SplitMix64& rng);

// Evaluates a model on the whole x_j = 2*pi*j/N grid at once, one statevector
// column per grid point. Gates up to and including the last spectral gate are
// applied a single time at construction when no parameter slot precedes them,
// so repeated evaluations with fresh trainable parameters only replay the
// suffix.
class GridEvaluator {
 public:
  GridEvaluator(const Model& model, int N);

  int grid_size() const { return N_; }
  const std::vector<double>& grid() const { return xs_; }

  // Output value per grid point. extra supplies parameter blocks not present
  // in the model's fixed bindings (extra wins on overlap).
  std::vector<double> evaluate(const ParamMap& extra = {}) const;

 private:
  void apply_range(GridState& st, std::size_t begin, std::size_t end,
                   const ParamMap& extra) const;
  double resolve_angle(const Slot& slot, const ParamMap& extra) const;

  const Model* model_;
  int N_ = 0;
  std::vector<double> xs_;
  HalfAngles ha_;
  std::size_t split_ = 0;
  GridState prefix_;
};

}  // namespace pqc::detail

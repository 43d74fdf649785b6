#pragma once

#include <cstddef>
#include <vector>

#include "cdv/graph.hpp"
#include "cdv/matrix.hpp"
#include "cdv/sequence.hpp"

namespace cdv {

/// Optimal CdV matrix of K_{1,q}, center at index 0.
///   q = 1:      [[-1,-1],[-1,-1]]
///   q = 2, 3:   zero diagonal, -1 between center and leaves
///   q >= 4:     as above, but the first q-3 leaves carry a 1 on the diagonal
FloatMatrix star_matrix(int q);

/// Matrix under construction: a CdV matrix of a connected component on the
/// leading `component` rows, followed by `isolates` isolated vertices whose
/// diagonal entries are exactly 1.
struct SuspensionState {
  FloatMatrix matrix;
  std::size_t component = 0;
  std::size_t isolates = 0;
  std::vector<int> labels;  // construction index of each row
};

/// Diagnostics of one cone step.
struct ConeStepReport {
  double lambda1 = 0.0;  // negative eigenvalue of the component block
  double theta = 0.0;
  /// ||M w|| / ||M||_F for the kernel vector w = (theta z, -lambda1 1, -lambda1).
  double witness_residual = 0.0;
};

/// M <- M (+) (1).
SuspensionState add_isolate(SuspensionState state, int label);

/// Borders the state with a vertex adjacent to everything:
///   [ M'         0     theta z   ]
///   [ 0          I     -1        ]
///   [ theta z^T  -1^T  1/lambda1 ]
/// where lambda1 < 0 is the unique negative eigenvalue of the component block
/// M', z its unit eigenvector with all entries negative, and
/// theta = sqrt(1 - p lambda1) for p trailing isolates. Raises the corank by 1.
SuspensionState add_cone(SuspensionState state, int label, ConeStepReport* report = nullptr);

struct RecursiveResult {
  FloatMatrix matrix;       // rows in construction order
  int expected_corank = 0;  // mu(seq)
  std::vector<ConeStepReport> cone_steps;
};

/// Starts from the star K_{1,k-1} formed when the second cone arrives at step
/// k, then replays the remaining steps. Requires a connected sequence with at
/// least two vertices.
RecursiveResult construct_recursive(const BuildSequence& seq);

/// Reorders a construction-order matrix to the degree order of build_graph().
FloatMatrix to_degree_order(const FloatMatrix& construction_order, const ThresholdGraph& g);

}  // namespace cdv

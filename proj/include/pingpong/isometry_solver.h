// Copyright 2026 The pingpong-ghz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PINGPONG_ISOMETRY_SOLVER_H
#define PINGPONG_ISOMETRY_SOLVER_H

#include <stdexcept>
#include <string>
#include <vector>

#include "pingpong/fock.h"

namespace pingpong {

/// One linear constraint M(input) = output on a map's local configurations.
struct MapConstraint {
    std::string label;
    Amplitudes input;
    Amplitudes output;
};

/// The constraint system cannot come from an isometry.
class InconsistentConstraints : public std::runtime_error {
   public:
    InconsistentConstraints(std::string first, std::string second, std::string detail);
    const std::string &first() const {
        return first_;
    }
    const std::string &second() const {
        return second_;
    }

   private:
    std::string first_;
    std::string second_;
};

/// Solves for a partial isometry on `modes` satisfying every constraint.
///
/// The domain is the set of configurations appearing in constraint inputs.
/// Directions of the domain not fixed by the constraints are completed by
/// exact Gram-Schmidt: the orthonormal complement of the constrained span is
/// mapped onto the first configurations (canonical order, same photon number)
/// left orthogonal to the constrained outputs. The result is deterministic.
///
/// Throws InconsistentConstraints naming the conflicting pair when two
/// constraints disagree on an inner product (which covers both linear
/// inconsistency and non-isometric data), and std::invalid_argument when a
/// constraint mixes photon numbers.
LinearMap solve_isometry(std::string name, std::vector<ModeId> modes, const std::vector<MapConstraint> &constraints);

/// Splits a pair of states on a full registry into per-spectator constraints
/// for a map acting on `map_modes`: for every occupation pattern s of the
/// other modes, M(<s|before>) = <s|after>.
std::vector<MapConstraint> constraints_from_states(const std::string &label, const QuantumState &before,
                                                   const QuantumState &after, const std::vector<ModeId> &map_modes);

}  // namespace pingpong

#endif

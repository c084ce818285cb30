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

#ifndef PINGPONG_FOCK_H
#define PINGPONG_FOCK_H

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pingpong/exact.h"

namespace pingpong {

/// Spatial modes. A is Alice's home photon, B and C travel to Bob and Charlie,
/// x is the eavesdropper's initially empty mode and y her probe mode.
enum class ModeId : uint8_t { A, B, C, x, y };

std::string_view mode_name(ModeId mode);
/// Throws std::invalid_argument on anything but "A", "B", "C", "x", "y".
ModeId parse_mode(std::string_view name);

/// Photon content of one dual-rail mode: n0 photons polarized 0, n1 polarized 1.
///
/// Photons are bosons, so occupations are unordered. The kets written "|01>_x"
/// and "|10>_x" are the same occupation (1, 1).
struct ModeOccupation {
    uint8_t n0 = 0;
    uint8_t n1 = 0;

    constexpr int total() const {
        return n0 + n1;
    }
    constexpr bool is_vacuum() const {
        return n0 == 0 && n1 == 0;
    }
    /// "vac", "0", "1", or a comma list of the polarizations present ("0,1").
    std::string label() const;

    friend constexpr bool operator==(const ModeOccupation &, const ModeOccupation &) = default;
    /// Canonical ket order: vac < 0 < 1 < (0,0) < (0,1) < (1,1).
    friend constexpr std::strong_ordering operator<=>(const ModeOccupation &a, const ModeOccupation &b) {
        if (auto c = a.total() <=> b.total(); c != 0) {
            return c;
        }
        return a.n1 <=> b.n1;
    }
};

inline constexpr ModeOccupation kVac{0, 0};
inline constexpr ModeOccupation kPol0{1, 0};
inline constexpr ModeOccupation kPol1{0, 1};
inline constexpr ModeOccupation kPair01{1, 1};

/// One occupation per registered mode, in registry order.
using FockConfig = std::vector<ModeOccupation>;
/// Sparse real vector over configurations.
using Amplitudes = std::map<FockConfig, ExactReal>;

int photon_number(const FockConfig &config);

/// Ordered list of modes plus the per-mode photon cap.
class ModeRegistry {
   public:
    static constexpr int kDefaultCap = 2;

    ModeRegistry() = default;
    explicit ModeRegistry(std::vector<ModeId> modes, int cap = kDefaultCap);

    /// (A, B, C) or (A, B, C, x, y).
    static ModeRegistry protocol(bool with_eve);

    const std::vector<ModeId> &modes() const {
        return modes_;
    }
    int cap() const {
        return cap_;
    }
    size_t size() const {
        return modes_.size();
    }
    bool contains(ModeId mode) const;
    /// Throws std::invalid_argument for unregistered modes.
    size_t index_of(ModeId mode) const;

    /// Every configuration with each mode at or under the cap, in canonical order.
    std::vector<FockConfig> all_configs() const;
    bool within_cap(const FockConfig &config) const;

    std::string ket(const FockConfig &config) const;

    friend bool operator==(const ModeRegistry &, const ModeRegistry &) = default;

   private:
    std::vector<ModeId> modes_;
    int cap_ = kDefaultCap;
};

/// Raised when a linear map meets a configuration outside its declared domain.
class DomainError : public std::invalid_argument {
   public:
    DomainError(const std::string &map_name, std::string ket);
    const std::string &ket() const {
        return ket_;
    }

   private:
    std::string ket_;
};

/// Immutable sparse state over a mode registry. Zero amplitudes are never stored.
class QuantumState {
   public:
    QuantumState() = default;
    /// Validates the cap and drops zero terms.
    QuantumState(ModeRegistry registry, Amplitudes terms);

    const ModeRegistry &registry() const {
        return registry_;
    }
    const Amplitudes &terms() const {
        return terms_;
    }
    bool empty() const {
        return terms_.empty();
    }
    ExactReal amplitude(const FockConfig &config) const;
    ExactReal norm2() const;
    /// Common photon number of all terms; nullopt when empty or mixed.
    std::optional<int> photon_number() const;

    QuantumState scaled(const ExactReal &factor) const;

    /// "(1/2)|0>_A|vac>_B... - (1/4)√2|...>"; "0" for the empty state.
    std::string to_string() const;

    friend bool operator==(const QuantumState &, const QuantumState &) = default;

   private:
    ModeRegistry registry_;
    Amplitudes terms_;
};

/// Single-term state with amplitude 1. Every registered mode must be assigned exactly once.
QuantumState basis_state(const ModeRegistry &registry, const std::vector<std::pair<ModeId, ModeOccupation>> &assignment);

/// Linear combination; all parts must share a registry. Cancelled terms are dropped.
QuantumState superpose(const std::vector<std::pair<ExactReal, QuantumState>> &parts);

/// Product state over the concatenated registries (modes must be disjoint).
QuantumState tensor(const QuantumState &a, const QuantumState &b);

ExactReal inner(const QuantumState &a, const QuantumState &b);

/// A partial linear map acting on a subset of modes. Rows are keyed by the
/// input configuration restricted to `modes()`; configurations without a row
/// are outside the domain and applying the map to them is an error.
class LinearMap {
   public:
    LinearMap() = default;
    LinearMap(std::string name, std::vector<ModeId> modes, std::map<FockConfig, Amplitudes> rows, int cap = ModeRegistry::kDefaultCap);

    const std::string &name() const {
        return name_;
    }
    const std::vector<ModeId> &modes() const {
        return modes_;
    }
    const std::map<FockConfig, Amplitudes> &rows() const {
        return rows_;
    }
    int cap() const {
        return cap_;
    }
    bool in_domain(const FockConfig &local) const {
        return rows_.contains(local);
    }

    /// Gram matrix of the row outputs equals the identity, exactly.
    bool is_isometry() const;
    /// Every output term carries the same photon number as its input row.
    bool preserves_photon_number() const;

    /// The same map with its modes relabelled position by position.
    LinearMap relabelled(std::string name, std::vector<ModeId> modes) const;

   private:
    std::string name_;
    std::vector<ModeId> modes_;
    std::map<FockConfig, Amplitudes> rows_;
    int cap_ = ModeRegistry::kDefaultCap;
};

/// Linear extension of the row action. Throws DomainError naming the first
/// configuration without a row.
QuantumState apply(const LinearMap &map, const QuantumState &state);

/// Applies `maps` left to right (the first element acts first).
QuantumState apply_all(const std::vector<LinearMap> &maps, const QuantumState &state);

/// Sum of squares of amplitudes.
ExactReal norm2(const Amplitudes &v);
ExactReal dot(const Amplitudes &a, const Amplitudes &b);

/// Gram matrix of the vectors equals the identity.
bool is_orthonormal(const std::vector<Amplitudes> &vectors);

/// The sub-configuration of `config` on the given registry positions.
FockConfig restrict_config(const FockConfig &config, const std::vector<size_t> &positions);

using LabeledState = std::pair<std::string, QuantumState>;
using Distribution = std::vector<std::pair<std::string, ExactReal>>;

inline constexpr std::string_view kOtherLabel = "other";

/// Projective measurement of `modes` in an orthonormal basis of states on
/// exactly those modes. The unspanned weight is reported under "other", so the
/// result always sums to norm2(state). Throws std::invalid_argument if the
/// basis is not orthonormal.
Distribution measure_distribution(const QuantumState &state, const std::vector<ModeId> &modes,
                                  const std::vector<LabeledState> &outcome_basis);

/// Unnormalized post-measurement state on the remaining modes after projecting
/// `modes` onto `outcome` (a state on exactly those modes).
QuantumState project(const QuantumState &state, const std::vector<ModeId> &modes, const QuantumState &outcome);

/// Splits the state by the occupation of `modes`: each key is the occupation
/// pattern, each value the unnormalized state of the remaining modes.
std::map<FockConfig, QuantumState> split_by_occupation(const QuantumState &state, const std::vector<ModeId> &modes);

}  // namespace pingpong

#endif

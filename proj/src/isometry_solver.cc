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

#include "pingpong/isometry_solver.h"

#include <algorithm>
#include <set>

namespace pingpong {

namespace {

void axpy(Amplitudes &target, const ExactReal &factor, const Amplitudes &v) {
    for (const auto &[config, amp] : v) {
        auto &slot = target[config];
        slot += factor * amp;
        if (slot.is_zero()) {
            target.erase(config);
        }
    }
}

Amplitudes scaled(const Amplitudes &v, const ExactReal &factor) {
    Amplitudes out;
    for (const auto &[config, amp] : v) {
        out.emplace(config, amp * factor);
    }
    return out;
}

ExactReal coefficient(const Amplitudes &v, const FockConfig &config) {
    auto it = v.find(config);
    return it == v.end() ? ExactReal() : it->second;
}

using Matrix = std::vector<std::vector<ExactReal>>;

// Gauss-Jordan inverse of a nonsingular matrix over Q(sqrt 2).
Matrix invert(Matrix m) {
    size_t n = m.size();
    Matrix inv(n, std::vector<ExactReal>(n));
    for (size_t i = 0; i < n; ++i) {
        inv[i][i] = ExactReal(1);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            throw std::logic_error("solve_isometry: singular Gram matrix");
        }
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        ExactReal scale = m[col][col].inv();
        for (size_t k = 0; k < n; ++k) {
            m[col][k] *= scale;
            inv[col][k] *= scale;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) {
                continue;
            }
            ExactReal f = m[row][col];
            for (size_t k = 0; k < n; ++k) {
                m[row][k] -= f * m[col][k];
                inv[row][k] -= f * inv[col][k];
            }
        }
    }
    return inv;
}

struct PivotRow {
    FockConfig pivot;
    Amplitudes input;
    Amplitudes output;
};

std::optional<int> homogeneous_photon_number(const Amplitudes &v) {
    std::optional<int> n;
    for (const auto &[config, amp] : v) {
        int k = photon_number(config);
        if (n && *n != k) {
            throw std::invalid_argument("solve_isometry: constraint mixes photon numbers");
        }
        n = k;
    }
    return n;
}

void check_gram(const std::vector<MapConstraint> &constraints) {
    for (size_t i = 0; i < constraints.size(); ++i) {
        for (size_t j = i; j < constraints.size(); ++j) {
            ExactReal in = dot(constraints[i].input, constraints[j].input);
            ExactReal out = dot(constraints[i].output, constraints[j].output);
            if (in != out) {
                throw InconsistentConstraints(constraints[i].label, constraints[j].label,
                                              "input overlap " + in.to_string() + " but output overlap " +
                                                  out.to_string());
            }
        }
    }
}

// Solves one photon-number sector and appends its rows.
void solve_sector(const std::vector<MapConstraint> &constraints, const ModeRegistry &local, int photons,
                  std::map<FockConfig, Amplitudes> &rows) {
    std::vector<PivotRow> basis;
    std::set<FockConfig> domain;
    for (const auto &c : constraints) {
        for (const auto &[config, amp] : c.input) {
            domain.insert(config);
        }
        Amplitudes v = c.input;
        Amplitudes t = c.output;
        for (const auto &row : basis) {
            ExactReal f = coefficient(v, row.pivot);
            if (!f.is_zero()) {
                axpy(v, -f, row.input);
                axpy(t, -f, row.output);
            }
        }
        if (v.empty()) {
            // Linearly dependent; the Gram check already proved t is zero.
            continue;
        }
        FockConfig pivot = v.begin()->first;
        ExactReal s = v.begin()->second.inv();
        v = scaled(v, s);
        t = scaled(t, s);
        for (auto &row : basis) {
            ExactReal f = coefficient(row.input, pivot);
            if (!f.is_zero()) {
                axpy(row.input, -f, v);
                axpy(row.output, -f, t);
            }
        }
        basis.push_back({pivot, std::move(v), std::move(t)});
    }

    size_t k = basis.size();
    Matrix gram(k, std::vector<ExactReal>(k));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            gram[i][j] = dot(basis[i].input, basis[j].input);
        }
    }
    Matrix gram_inv = invert(gram);

    // Orthonormal basis of the unconstrained part of the domain.
    std::vector<Amplitudes> free_dirs;
    for (const auto &f : domain) {
        bool is_pivot = std::any_of(basis.begin(), basis.end(), [&](const PivotRow &r) { return r.pivot == f; });
        if (is_pivot) {
            continue;
        }
        Amplitudes w{{f, ExactReal(1)}};
        for (const auto &row : basis) {
            ExactReal c = coefficient(row.input, f);
            if (!c.is_zero()) {
                axpy(w, -c, Amplitudes{{row.pivot, ExactReal(1)}});
            }
        }
        for (const auto &prev : free_dirs) {
            axpy(w, -dot(prev, w), prev);
        }
        auto norm = field_sqrt(norm2(w));
        if (!norm) {
            throw std::runtime_error("solve_isometry: unconstrained direction cannot be normalized in Q(sqrt 2)");
        }
        free_dirs.push_back(scaled(w, norm->inv()));
    }

    // Images for those directions: canonical configurations orthogonal to everything used so far.
    std::vector<Amplitudes> completion;
    for (const auto &candidate : local.all_configs()) {
        if (completion.size() == free_dirs.size()) {
            break;
        }
        if (photon_number(candidate) != photons) {
            continue;
        }
        Amplitudes r{{candidate, ExactReal(1)}};
        for (size_t i = 0; i < k; ++i) {
            ExactReal beta;
            for (size_t j = 0; j < k; ++j) {
                beta += gram_inv[i][j] * coefficient(basis[j].output, candidate);
            }
            axpy(r, -beta, basis[i].output);
        }
        for (const auto &prev : completion) {
            axpy(r, -dot(prev, r), prev);
        }
        if (r.empty()) {
            continue;
        }
        auto norm = field_sqrt(norm2(r));
        if (!norm) {
            continue;
        }
        completion.push_back(scaled(r, norm->inv()));
    }
    if (completion.size() != free_dirs.size()) {
        throw std::runtime_error("solve_isometry: not enough room to complete the isometry");
    }

    for (const auto &e : domain) {
        Amplitudes image;
        for (size_t i = 0; i < k; ++i) {
            ExactReal alpha;
            for (size_t j = 0; j < k; ++j) {
                alpha += gram_inv[i][j] * coefficient(basis[j].input, e);
            }
            if (!alpha.is_zero()) {
                axpy(image, alpha, basis[i].output);
            }
        }
        for (size_t i = 0; i < free_dirs.size(); ++i) {
            ExactReal c = coefficient(free_dirs[i], e);
            if (!c.is_zero()) {
                axpy(image, c, completion[i]);
            }
        }
        rows.emplace(e, std::move(image));
    }
}

}  // namespace

InconsistentConstraints::InconsistentConstraints(std::string first, std::string second, std::string detail)
    : std::runtime_error("inconsistent constraints '" + first + "' and '" + second + "': " + detail),
      first_(std::move(first)),
      second_(std::move(second)) {
}

LinearMap solve_isometry(std::string name, std::vector<ModeId> modes, const std::vector<MapConstraint> &constraints) {
    ModeRegistry local(modes);
    for (const auto &c : constraints) {
        for (const auto *v : {&c.input, &c.output}) {
            for (const auto &[config, amp] : *v) {
                if (!local.within_cap(config)) {
                    throw std::invalid_argument("solve_isometry: constraint '" + c.label +
                                                "' has a configuration outside the map's modes");
                }
            }
        }
        auto in = homogeneous_photon_number(c.input);
        auto out = homogeneous_photon_number(c.output);
        if (in && out && *in != *out) {
            throw std::invalid_argument("solve_isometry: constraint '" + c.label + "' changes the photon number");
        }
    }
    check_gram(constraints);

    std::map<int, std::vector<MapConstraint>> sectors;
    for (const auto &c : constraints) {
        if (auto n = homogeneous_photon_number(c.input)) {
            sectors[*n].push_back(c);
        }
    }
    std::map<FockConfig, Amplitudes> rows;
    for (const auto &[photons, group] : sectors) {
        solve_sector(group, local, photons, rows);
    }
    LinearMap result(std::move(name), std::move(modes), std::move(rows));
    if (!result.is_isometry()) {
        throw std::logic_error("solve_isometry: completed map is not an isometry");
    }
    return result;
}

std::vector<MapConstraint> constraints_from_states(const std::string &label, const QuantumState &before,
                                                   const QuantumState &after, const std::vector<ModeId> &map_modes) {
    if (!(before.registry() == after.registry())) {
        throw std::invalid_argument("constraints_from_states: registry mismatch");
    }
    std::vector<ModeId> spectators;
    for (ModeId m : before.registry().modes()) {
        if (std::find(map_modes.begin(), map_modes.end(), m) == map_modes.end()) {
            spectators.push_back(m);
        }
    }
    auto pre = split_by_occupation(before, spectators);
    auto post = split_by_occupation(after, spectators);
    std::set<FockConfig> keys;
    for (const auto &[k, v] : pre) {
        keys.insert(k);
    }
    for (const auto &[k, v] : post) {
        keys.insert(k);
    }
    ModeRegistry spectator_registry(spectators, before.registry().cap());
    std::vector<MapConstraint> out;
    for (const auto &key : keys) {
        MapConstraint c;
        c.label = label + " @ " + spectator_registry.ket(key);
        if (auto it = pre.find(key); it != pre.end()) {
            if (it->second.registry().modes() != map_modes) {
                throw std::invalid_argument("constraints_from_states: map modes must follow registry order");
            }
            c.input = it->second.terms();
        }
        if (auto it = post.find(key); it != post.end()) {
            c.output = it->second.terms();
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace pingpong

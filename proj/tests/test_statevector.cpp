// Copyright 2026 The qgan developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qgan/ansatz/generator.hpp"
#include "qgan/sim/circuit.hpp"
#include "qgan/sim/statevector.hpp"

using namespace qgan;

namespace {

Statevector random_state(int n_qubits, Rng &rng) {
    Statevector psi(n_qubits, 0);
    double norm2 = 0.0;
    for (auto &a : psi.amplitudes) {
        a = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        norm2 += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto &a : psi.amplitudes) {
        a *= scale;
    }
    return psi;
}

double max_abs_diff(const Statevector &a, const Eigen::VectorXcd &b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        m = std::max(m, std::abs(a.amplitudes[j] - b(static_cast<Eigen::Index>(j))));
    }
    return m;
}

} // namespace

TEST_CASE("zero-angle rotations act as the identity") {
    Rng rng(11);
    const Statevector psi = random_state(3, rng);
    for (const RotationKind kind : {RotationKind::RX, RotationKind::RZ}) {
        const Statevector out = apply_rotation(psi, kind, 1, 0.0);
        for (std::size_t j = 0; j < psi.dim(); ++j) {
            REQUIRE(std::abs(out.amplitudes[j] - psi.amplitudes[j]) < 1e-15);
        }
    }
    const Statevector out = apply_rotation(psi, RotationKind::RZZ, 0, 2, 0.0);
    for (std::size_t j = 0; j < psi.dim(); ++j) {
        REQUIRE(std::abs(out.amplitudes[j] - psi.amplitudes[j]) < 1e-15);
    }
}

TEST_CASE("rx(pi) maps |0> to -i|1>") {
    Statevector psi(1, 0);
    apply_rx_in_place(psi, 0, 3.14159265358979323846);
    REQUIRE(std::abs(psi.amplitudes[0]) < 1e-12);
    REQUIRE(std::abs(psi.amplitudes[1] - cplx{0.0, -1.0}) < 1e-12);
}

TEST_CASE("rzz phases |00> by e^{-i angle/2}") {
    const double angle = 0.7;
    Statevector psi(2, 0);
    apply_rzz_in_place(psi, 0, 1, angle);
    // Independent route: dense matrix exponential of the ZZ generator.
    const Matrix zz = oracle::pauli_string_matrix(oracle::string_on(2, {{0, Pauli::Z}, {1, Pauli::Z}}));
    const Matrix u = oracle::expm_hermitian_times_i(zz, -0.5 * angle);
    REQUIRE(std::abs(psi.amplitudes[0] - u(0, 0)) < 1e-12);
    REQUIRE(std::abs(psi.amplitudes[0] - std::polar(1.0, -0.5 * angle)) < 1e-12);
    for (std::size_t j = 1; j < 4; ++j) {
        REQUIRE(std::abs(psi.amplitudes[j]) < 1e-15);
    }
}

TEST_CASE("rotations match dense matrix exponentials on random states") {
    Rng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const Statevector psi = random_state(3, rng);
        const double angle = rng.uniform(-8.0, 8.0);

        Gate gate;
        switch (trial % 3) {
        case 0:
            gate = Gate{RotationKind::RX, static_cast<int>(rng.uniform_index(3)), -1, 0};
            break;
        case 1:
            gate = Gate{RotationKind::RZ, static_cast<int>(rng.uniform_index(3)), -1, 0};
            break;
        default: {
            const int q0 = static_cast<int>(rng.uniform_index(3));
            const int q1 = (q0 + 1 + static_cast<int>(rng.uniform_index(2))) % 3;
            gate = Gate{RotationKind::RZZ, q0, q1, 0};
            break;
        }
        }
        const Statevector applied = apply_rotation(psi, gate.kind, gate.q0, gate.q1, angle);
        const Eigen::VectorXcd expected = oracle::gate_matrix(gate, angle, 3) * oracle::to_eigen(psi);
        REQUIRE(max_abs_diff(applied, expected) < 1e-12);
    }
}

TEST_CASE("gate applications preserve the norm") {
    Rng rng(37);
    Statevector psi = random_state(4, rng);
    for (int step = 0; step < 100; ++step) {
        const int pick = static_cast<int>(rng.uniform_index(3));
        const double angle = rng.uniform(0.0, two_pi);
        if (pick == 0) {
            apply_rx_in_place(psi, static_cast<int>(rng.uniform_index(4)), angle);
        } else if (pick == 1) {
            apply_rz_in_place(psi, static_cast<int>(rng.uniform_index(4)), angle);
        } else {
            const int q0 = static_cast<int>(rng.uniform_index(4));
            const int q1 = (q0 + 1 + static_cast<int>(rng.uniform_index(3))) % 4;
            apply_rzz_in_place(psi, q0, q1, angle);
        }
        REQUIRE(std::abs(psi.squared_norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("qubit index violations are rejected") {
    Statevector psi(2, 0);
    REQUIRE_THROWS_AS(apply_rx_in_place(psi, 2, 0.3), std::out_of_range);
    REQUIRE_THROWS_AS(apply_rz_in_place(psi, -1, 0.3), std::out_of_range);
    REQUIRE_THROWS_AS(apply_rzz_in_place(psi, 0, 2, 0.3), std::out_of_range);
    REQUIRE_THROWS_AS(apply_rzz_in_place(psi, 1, 1, 0.3), std::out_of_range);
}

TEST_CASE("circuit unitary of an empty gate list is the identity") {
    const std::vector<Gate> gates;
    const ParamVector params;
    const Matrix u = circuit_unitary(2, gates, params);
    REQUIRE((u - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("single zero-angle gate gives the identity unitary") {
    const std::vector<Gate> gates = {Gate{RotationKind::RX, 0, -1, 0}};
    const ParamVector params = {0.0};
    const Matrix u = circuit_unitary(1, gates, params);
    REQUIRE((u - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("circuit unitary matches the dense gate product") {
    Rng rng(51);
    const GeneratorSpec spec = build_generator_spec(3, 1, AncillaConfig::None);
    for (int trial = 0; trial < 5; ++trial) {
        const ParamVector theta = init_params(spec, InitMode::Random, rng);
        const Matrix fast = circuit_unitary(spec, theta);
        const Matrix dense = oracle::circuit_matrix(spec, theta);
        REQUIRE((fast - dense).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("circuit unitaries are unitary for random parameter draws") {
    Rng rng(67);
    const GeneratorSpec spec = build_generator_spec(3, 3, AncillaConfig::A4);
    for (int trial = 0; trial < 100; ++trial) {
        const ParamVector theta = init_params(spec, InitMode::Random, rng);
        REQUIRE(is_unitary(circuit_unitary(spec, theta), 1e-10));
    }
}

TEST_CASE("circuit unitary rejects parameter count mismatches") {
    const GeneratorSpec spec = build_generator_spec(3, 1, AncillaConfig::None);
    const ParamVector wrong(static_cast<std::size_t>(spec.n_params) + 1, 0.0);
    REQUIRE_THROWS_AS(circuit_unitary(spec, wrong), contract_error);
}

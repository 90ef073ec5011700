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
#include "qgan/sim/pauli.hpp"

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

PauliString random_string(int n_qubits, Rng &rng) {
    PauliString s(n_qubits);
    static constexpr Pauli letters[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    for (auto &l : s.letters) {
        l = letters[rng.uniform_index(4)];
    }
    return s;
}

} // namespace

TEST_CASE("identity string has expectation 1 on any normalized state") {
    Rng rng(5);
    const Statevector psi = random_state(3, rng);
    const PauliString identity(3);
    REQUIRE(identity.weight() == 0);
    REQUIRE(std::abs(pauli_expectation(psi, identity) - 1.0) < 1e-12);
}

TEST_CASE("single Z distinguishes the computational basis") {
    const PauliString z = oracle::string_on(1, {{0, Pauli::Z}});
    REQUIRE(std::abs(pauli_expectation(Statevector(1, 0), z) - 1.0) < 1e-15);
    REQUIRE(std::abs(pauli_expectation(Statevector(1, 1), z) + 1.0) < 1e-15);
}

TEST_CASE("string weight counts non-identity letters") {
    PauliString s(4);
    s.letters[1] = Pauli::X;
    s.letters[3] = Pauli::Y;
    REQUIRE(s.weight() == 2);
    REQUIRE(s.label() == "IXIY");
}

TEST_CASE("weighted observables match the dense quadratic form") {
    Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const Statevector psi = random_state(3, rng);
        std::vector<PauliTerm> terms;
        Matrix dense = Matrix::Zero(8, 8);
        for (int k = 0; k < 3; ++k) {
            const double c = rng.uniform(-2.0, 2.0);
            const PauliString s = random_string(3, rng);
            dense += c * oracle::pauli_string_matrix(s);
            terms.push_back(PauliTerm{c, s});
        }
        const Eigen::VectorXcd v = oracle::to_eigen(psi);
        const double expected = (v.adjoint() * dense * v).value().real();
        REQUIRE(std::abs(pauli_expectation(psi, terms) - expected) < 1e-12);
    }
}

TEST_CASE("pauli application accumulates c * P |psi>") {
    Rng rng(29);
    const Statevector psi = random_state(3, rng);
    const PauliString s = oracle::string_on(3, {{0, Pauli::Y}, {2, Pauli::X}});
    std::vector<cplx> chi(psi.dim(), cplx{0.0, 0.0});
    add_pauli_applied(chi, psi, s, 0.75);
    const Eigen::VectorXcd expected = 0.75 * oracle::pauli_string_matrix(s) * oracle::to_eigen(psi);
    for (std::size_t j = 0; j < psi.dim(); ++j) {
        REQUIRE(std::abs(chi[j] - expected(static_cast<Eigen::Index>(j))) < 1e-12);
    }
}

TEST_CASE("qubit-count mismatches are rejected") {
    const Statevector psi(2, 0);
    const PauliString s(3);
    REQUIRE_THROWS_AS(pauli_expectation(psi, s), contract_error);
}

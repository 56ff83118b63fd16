// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "thetakit/polynomial.hpp"

namespace thetakit {

struct GroebnerStats {
  uint64_t pairs_considered = 0;
  uint64_t pairs_reduced = 0;
  uint64_t zero_reductions = 0;
  size_t basis_size = 0;
};

/// Reduced Groebner basis of the ideal generated by gens, in the gens' ring (its domain and
/// order). Elements are monic and sorted by increasing leading monomial.
/// Limits: at most 15 variables and total degree at most 127 in intermediate results.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       GroebnerStats* stats = nullptr);

/// Full normal form of f with respect to basis (basis need not be reduced).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

/// Every S-polynomial of basis reduces to zero against basis.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis);

}  // namespace thetakit

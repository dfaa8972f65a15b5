// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

#include "classical_spectrum.hpp"
#include "correspondence.hpp"
#include "equilibrium.hpp"
#include "quantum_1d.hpp"

namespace qcc {

/// 17 significant digits, '.' decimal separator regardless of locale.
std::string format_double(double value);

nlohmann::json to_json(const EquilibriumReport& report);
nlohmann::json to_json(const SpectrumTable& table);
nlohmann::json to_json(std::span<const VerificationEntry> entries);
nlohmann::json to_json(const CorrespondenceRun& run);

/// Rows: hbar,n,E_n,flag
std::string spectrum_csv(std::span<const SpectrumTable> tables);
/// Rows: level,calE,n_1..n_r,match_residual,fit_residual,status
std::string correspondence_csv(const CorrespondenceRun& run);
/// Rows: label,eigenvalue,residual,vanishing,hessian_residual,approximate
std::string verification_csv(std::span<const VerificationEntry> entries);
/// Rows: mode,frequency,v_1..v_r
std::string equilibrium_csv(const EquilibriumReport& report);

}  // namespace qcc

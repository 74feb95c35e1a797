#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fecheck/feq.hpp"

namespace fecheck {

/// Reads a `.feq` document:
///
///   # comment
///   let phi = sub(t^2)
///   name    = power_converse
///   lhs     = at(trace(sum(81/16*prod(phi, phi))), x^2)
///   rhs     = lin(3/2*phi)^4
///   samples = t, t+1, 1/t
///   expect  = pass
///
/// A value continues on following lines while brackets are open. `lhs` and
/// `rhs` are required; `name` defaults to `default_name`, `expect` to pass,
/// and `samples` may be empty. Throws ParseError with the file position.
Scenario parse_scenario(std::string_view text, const std::string& default_name = "scenario");

/// Throws std::runtime_error when the file cannot be read.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace fecheck

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "report.hpp"

namespace hoagent::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitError = 2;

int cmd_eval(const std::filesystem::path& problem, const std::filesystem::path& agent, Format format,
             std::ostream& out, std::ostream& err);

struct CheckOptions {
  std::filesystem::path agent;
  std::optional<std::string> signature;  // "X=<n>,R=<m>"
  std::optional<std::filesystem::path> problem;
  std::string property;
  std::optional<std::filesystem::path> against;
  std::uint64_t budget = EnumerationBudget{}.max_contexts;
  Format format = Format::text;
};

int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err);

int cmd_demo(const std::string& name, std::ostream& out, std::ostream& err);

/// Parses "X=<n>,R=<m>" into the numbered signature. Throws ParseError.
Signature parse_signature(const std::string& text);

/// The property names accepted by `check`.
const std::vector<std::string>& property_names();

}  // namespace hoagent::cli

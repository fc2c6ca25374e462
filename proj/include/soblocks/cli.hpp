#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "soblocks/weights.hpp"

namespace soblocks::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or domain error,
// 3 precision or resource error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Weight literal: {"young":[rows...], "sigma":bool} or {"fund":[a_1..a_r]}.
BWeight parse_weight_literal(const std::string& text, int rank, int level);
std::vector<BWeight> parse_weight_list(const std::string& text, int rank, int level);

}  // namespace soblocks::cli

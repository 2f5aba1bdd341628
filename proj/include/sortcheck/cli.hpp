#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sortcheck/orders.hpp"

// Command-line harness: plain-text configs in, deterministic text
// reports out. Exit codes: 0 all checks pass, 1 some check fails,
// 2 usage or parse error.
namespace cli {

struct RunConfig {
  std::size_t carrier_size = 0;
  std::optional<orders::TotalOrder> order;
  std::optional<std::string> section;
  std::size_t max_word_len = 5;
};

/// Config format, one item per line. Blank lines and lines starting
/// with '#' are ignored.
///
///   n=<carrier_size>          (required, first)
///   order:                    (optional; followed by n rows of n 0/1)
///   section=<name>            (optional)
///   maxlen=<k>                (optional, default 5)
std::variant<RunConfig, std::string> parse_config(std::istream& in);

/// The base order used by certify and enumerate when the config has
/// none: numeric leq on 0..n-1.
orders::TotalOrder effective_order(const RunConfig& cfg);

/// Deterministic demo multiset for `enumerate`: every carrier element
/// exactly twice, interleaved from both ends.
std::vector<int> sample_bag(std::size_t n);

int cmd_check_order(const RunConfig& cfg, std::ostream& out);
int cmd_certify_section(const RunConfig& cfg, std::ostream& out);
int cmd_enumerate(const RunConfig& cfg, std::ostream& out);

/// Parses `<subcommand> <config-path>` and dispatches. Reports go to
/// out, usage and parse errors to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cli

#include "sortcheck/cli.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sortcheck/sorting.hpp"

namespace cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

bool next_content_line(std::istream& in, std::string& line) {
  std::string raw;
  while (std::getline(in, raw)) {
    line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    return true;
  }
  return false;
}

bool parse_size(const std::string& text, std::size_t& value) {
  if (text.empty()) return false;
  std::size_t parsed = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
    parsed = parsed * 10 + static_cast<std::size_t>(c - '0');
    if (parsed > 1000000) return false;
  }
  value = parsed;
  return true;
}

}  // namespace

std::variant<RunConfig, std::string> parse_config(std::istream& in) {
  RunConfig cfg;
  std::string line;

  if (!next_content_line(in, line) || line.rfind("n=", 0) != 0 ||
      !parse_size(line.substr(2), cfg.carrier_size)) {
    return std::string("first line must be n=<carrier_size>");
  }
  if (cfg.carrier_size > 64) {
    return std::string("carrier_size must be at most 64");
  }

  while (next_content_line(in, line)) {
    if (line == "order:") {
      if (cfg.order) return std::string("duplicate order block");
      orders::TotalOrder t{cfg.carrier_size,
                           std::vector<std::uint8_t>(cfg.carrier_size * cfg.carrier_size, 0)};
      for (std::size_t row = 0; row < cfg.carrier_size; ++row) {
        std::string row_line;
        if (!next_content_line(in, row_line)) {
          return std::string("order block ends before row " + std::to_string(row));
        }
        std::istringstream cells(row_line);
        std::string cell;
        std::size_t col = 0;
        while (cells >> cell) {
          if (col >= cfg.carrier_size || (cell != "0" && cell != "1")) {
            return std::string("order row " + std::to_string(row) +
                               " must hold " + std::to_string(cfg.carrier_size) +
                               " 0/1 cells");
          }
          t.set(row, col, cell == "1");
          ++col;
        }
        if (col != cfg.carrier_size) {
          return std::string("order row " + std::to_string(row) + " must hold " +
                             std::to_string(cfg.carrier_size) + " 0/1 cells");
        }
      }
      cfg.order = std::move(t);
    } else if (line.rfind("section=", 0) == 0) {
      cfg.section = line.substr(8);
    } else if (line.rfind("maxlen=", 0) == 0) {
      if (!parse_size(line.substr(7), cfg.max_word_len)) {
        return std::string("maxlen must be a natural number");
      }
    } else {
      return std::string("unrecognized config line: " + line);
    }
  }
  return cfg;
}

orders::TotalOrder effective_order(const RunConfig& cfg) {
  return cfg.order ? *cfg.order : orders::TotalOrder::numeric(cfg.carrier_size);
}

std::vector<int> sample_bag(std::size_t n) {
  std::vector<int> bag;
  bag.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    bag.push_back(static_cast<int>(n - 1 - i));
    bag.push_back(static_cast<int>(i));
  }
  return bag;
}

int cmd_check_order(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.order) {
    out << "ERROR: config has no order table\n";
    return 2;
  }
  if (const auto failure = orders::check_total_order(*cfg.order)) {
    out << "ORDER: FAIL " << failure->axiom
        << " witness=" << sorting::format_tuple(failure->witness) << '\n';
    return 1;
  }
  out << "ORDER: PASS\n";
  return 0;
}

int cmd_certify_section(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.section) {
    out << "ERROR: config has no section name\n";
    return 2;
  }
  if (cfg.carrier_size > 6 || cfg.max_word_len > 6) {
    out << "ERROR: certify requires n <= 6 and maxlen <= 6\n";
    return 2;
  }
  const orders::TotalOrder base = effective_order(cfg);
  if (const auto failure = orders::check_total_order(base)) {
    out << "ORDER: FAIL " << failure->axiom
        << " witness=" << sorting::format_tuple(failure->witness) << '\n';
    return 1;
  }
  const sorting::Domain domain{cfg.carrier_size, cfg.max_word_len};
  const auto section = sorting::make_registered_section(*cfg.section, base, domain);
  if (!section) {
    out << "ERROR: unknown or invalid section '" << *cfg.section << "'\n";
    return 2;
  }
  const sorting::SortReport report = sorting::certify(*section, base);
  sorting::write_report(out, report);
  return report.all_pass() ? 0 : 1;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.carrier_size > 6) {
    out << "ERROR: enumerate requires n <= 6\n";
    return 2;
  }
  const auto all = orders::enumerate_total_orders(cfg.carrier_size);
  const std::vector<int> bag = sample_bag(cfg.carrier_size);
  for (std::size_t i = 0; i < all.size(); ++i) {
    out << "ORDER " << (i + 1) << ":\n" << orders::order_to_text(all[i]);
    out << "SORTED " << sorting::format_word(bag) << " -> "
        << sorting::format_word(sorting::insertion_sort_word(all[i], bag)) << '\n';
  }
  out << "COUNT: " << all.size() << '\n';
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  const auto usage = [&err]() {
    err << "usage: sortcheck <check-order|certify|enumerate> <config-file>\n";
    return 2;
  };
  if (args.size() != 2) return usage();

  std::ifstream file(args[1]);
  if (!file) {
    err << "ERROR: cannot open config file '" << args[1] << "'\n";
    return 2;
  }
  auto parsed = parse_config(file);
  if (std::holds_alternative<std::string>(parsed)) {
    err << "ERROR: " << std::get<std::string>(parsed) << '\n';
    return 2;
  }
  const RunConfig& cfg = std::get<RunConfig>(parsed);

  if (args[0] == "check-order") return cmd_check_order(cfg, out);
  if (args[0] == "certify") return cmd_certify_section(cfg, out);
  if (args[0] == "enumerate") return cmd_enumerate(cfg, out);
  return usage();
}

}  // namespace cli

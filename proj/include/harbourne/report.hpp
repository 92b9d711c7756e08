#pragma once

#include "harbourne/catalog.hpp"
#include "harbourne/error.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace harbourne {

enum class Format { Human, Csv, Json };

/// "human" | "csv" | "json"; ParseError otherwise.
Format parse_format(std::string_view text);

/// An arrangement to report on, with the catalog claims when it came from
/// the catalog.
struct Target {
  CatalogEntry entry;
  bool from_catalog = false;
  std::optional<std::int64_t> cn_parameter;  // set for catalog:cn-N
  std::vector<std::string> warnings;         // soft validation failures
};

/// "catalog:NAME" resolves through catalog_entry(); anything else is read
/// as an arrangement document from the filesystem.
Target resolve_target(std::string_view where);
Target target_from_document(std::string_view text);

/// Value of a named quantity ("h_index", "h_sing", "b1", "b2",
/// "is_ball_quotient", "defect_n3", "pair_count", "cn_gap"), or nullopt when
/// it does not apply to the target.
std::optional<Rat> evaluate_quantity(const Target& target, std::string_view quantity);

std::string analyze(const Target& target, Format format);

std::string sweep_cn(std::int64_t from, std::int64_t to, std::int64_t step, Format format);

std::string cover_table(const Target& target, std::int64_t n_min, std::int64_t n_max, Format format);

struct CheckOutcome {
  std::string output;
  bool passed = true;  // false iff some hard check failed
};

CheckOutcome check(const Target& target, Format format);

std::string list_catalog(Format format);

/// Exit status for an error: 2 for parse and usage errors, 1 otherwise.
int exit_code(ErrorKind kind);

/// Command-line entry point. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harbourne

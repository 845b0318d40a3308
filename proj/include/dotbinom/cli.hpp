#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dotbinom::cli {

enum class Format { Plain, Csv, Json };

/// A command result: a record table plus optional scalar fields. Plain text is
/// command-specific; CSV is the table; JSON is {"command", "rows", "summary"}.
struct Output {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> summary;
  std::string plain;
};

std::string render(const Output& output, Format format);

/// Aligned columns with a header row.
std::string plain_table(const Output& output);

/// Exit status: 0 success, 1 a check failed, 2 usage error or invalid input.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dotbinom::cli

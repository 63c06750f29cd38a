#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace clt::cli {

/// Runs one command. `args` excludes the program name. Returns the exit
/// code: 0 success, 1 computation error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Flat `key = value` file with `#` comments. Keys are normalized to the
/// long-flag spelling ('_' becomes '-'). Throws ConfigError on malformed lines.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Writes through a temporary file in the same directory and renames it.
void write_atomically(const std::string& path, const std::string& content);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);
std::string csv_number(double v);

}  // namespace clt::cli

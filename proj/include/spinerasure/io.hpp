#pragma once

#include <string>
#include <vector>

namespace spinerasure {

/// Shortest representation with up to 17 significant digits ("%.17g"):
/// parses back to the identical double.
std::string format_double17(double value);

/// One CSV line: fields joined by commas, LF terminated.
std::string csv_line(const std::vector<std::string>& fields);

/// Writes content to path ("-" means stdout). Returns false on I/O failure.
bool write_text(const std::string& path, const std::string& content);

}  // namespace spinerasure

#include "spinerasure/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace spinerasure {

std::string format_double17(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            line += ',';
        }
        line += fields[i];
    }
    line += '\n';
    return line;
}

bool write_text(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return std::cout.good();
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        return false;
    }
    out << content;
    return out.good();
}

}  // namespace spinerasure

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hyperboot/configuration.hpp"

namespace hyperboot {

// Input error with a 1-based line number, formatted as "name:line: message".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& name, int line, const std::string& message)
        : std::runtime_error(name + ":" + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// One j-set per line, space-separated ascending vertex ids; '#' starts a
// comment line; blank lines are ignored.
Configuration read_configuration(std::istream& in, const std::string& name, int n, int j);
Configuration read_configuration_file(const std::string& path, int n, int j);

void write_configuration(std::ostream& out, const Configuration& config);
void write_configuration_file(const std::string& path, const Configuration& config);

}  // namespace hyperboot

#include "hyperboot/text_format.hpp"

#include <fstream>
#include <sstream>

namespace hyperboot {

Configuration read_configuration(std::istream& in, const std::string& name, int n, int j) {
    Configuration config(j, Universe(n));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream row(line);
        std::vector<int> vertices;
        std::string token;
        while (row >> token) {
            try {
                std::size_t used = 0;
                int v = std::stoi(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                vertices.push_back(v);
            } catch (const std::exception&) {
                throw ParseError(name, lineno, "not a vertex id: '" + token + "'");
            }
        }
        if (static_cast<int>(vertices.size()) != j)
            throw ParseError(name, lineno,
                             "expected " + std::to_string(j) + " vertex ids, got " +
                                 std::to_string(vertices.size()));
        int prev = 0;
        for (int v : vertices) {
            if (v < 1 || v > n)
                throw ParseError(name, lineno,
                                 "vertex " + std::to_string(v) + " outside [1, " +
                                     std::to_string(n) + "]");
            if (v <= prev) throw ParseError(name, lineno, "vertex ids must be strictly ascending");
            prev = v;
        }
        config.insert(vertices);
    }
    return config;
}

Configuration read_configuration_file(const std::string& path, int n, int j) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open configuration file: " + path);
    return read_configuration(in, path, n, j);
}

void write_configuration(std::ostream& out, const Configuration& config) {
    config.for_each([&](std::span<const int> member) {
        for (std::size_t i = 0; i < member.size(); ++i) {
            if (i) out << ' ';
            out << member[i];
        }
        out << '\n';
    });
}

void write_configuration_file(const std::string& path, const Configuration& config) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write configuration file: " + path);
    write_configuration(out, config);
}

}  // namespace hyperboot

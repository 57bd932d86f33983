#include "lamskel/golden.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lamskel {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

GoldenSequence load_golden_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden data file: " + path);

    GoldenSequence seq;
    {
        auto slash = path.find_last_of('/');
        auto base = slash == std::string::npos ? path : path.substr(slash + 1);
        auto dot = base.find_last_of('.');
        seq.name = dot == std::string::npos ? base : base.substr(0, dot);
    }

    std::string line;
    std::size_t expected_index = 0;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto grab = [&line](const char* key) -> std::string {
                auto pos = line.find(key);
                if (pos == std::string::npos) return "";
                return trim(line.substr(pos + std::string(key).size()));
            };
            if (auto v = grab("oeis:"); !v.empty()) seq.oeis_id = v;
            if (auto v = grab("index:"); !v.empty()) seq.index_kind = v;
            continue;
        }
        std::istringstream row(line);
        std::size_t index;
        std::string value;
        if (!(row >> index >> value))
            throw std::runtime_error(path + ": malformed line '" + line + "'");
        if (index != expected_index)
            throw std::runtime_error(path + ": indices must be dense from 0, got " +
                                     std::to_string(index));
        seq.values.emplace_back(value);
        ++expected_index;
    }
    if (seq.values.empty()) throw std::runtime_error(path + ": no data rows");
    return seq;
}

}  // namespace lamskel

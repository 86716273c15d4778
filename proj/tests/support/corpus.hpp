#pragma once

#include <convexgeo/closure.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace corpus {

inline std::filesystem::path root() { return CORPUS_DIR; }

inline std::string read(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Files in a corpus subdirectory with the given extension, sorted by name.
inline std::vector<std::filesystem::path> files(const std::string& dir, const std::string& ext) {
    std::vector<std::filesystem::path> out;
    for (const auto& entry : std::filesystem::directory_iterator(root() / dir))
        if (entry.path().extension() == ext) out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

inline convexgeo::ImplicationBasis basis(const std::filesystem::path& p) {
    return convexgeo::parse_basis_file(read(p));
}

}  // namespace corpus

#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <disclab/io.hpp>

namespace disclab::cli {

struct InputDigest {
    std::string path;
    std::string sha256;
};

struct RunManifest {
    std::vector<std::string> argv;
    std::string command;
    std::map<std::string, std::string> flags;
    std::vector<InputDigest> inputs;
    std::uint64_t seed = 0;
    std::string version;
    int workers = 1;
    double wallTime = 0.0;

    io::Json toJson() const;
};

std::string sha256File(const std::string& path);

} // namespace disclab::cli

#include "manifest.hpp"

#include <fstream>
#include <iterator>

#include <openssl/evp.h>

#include <disclab/errors.hpp>

namespace disclab::cli {

std::string sha256File(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw inputError("MissingFile", "cannot open " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
        throw numericalFailure("DigestFailure", "sha256 failed for " + path);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

io::Json RunManifest::toJson() const {
    io::Json in = io::Json::array();
    for (const auto& d : inputs) in.push_back({{"path", d.path}, {"sha256", d.sha256}});
    return {{"command", command}, {"argv", argv},          {"flags", flags},       {"inputs", in},
            {"seed", seed},       {"version", version},    {"workers", workers},   {"wall_time_s", wallTime}};
}

} // namespace disclab::cli

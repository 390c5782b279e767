#pragma once

#include <string>
#include <vector>

namespace despec {

// SHA-256 hex digest of a byte string.
std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(const std::string& s);

// Digest of a file's raw bytes.
std::string sha256_file(const std::string& path);

}  // namespace despec

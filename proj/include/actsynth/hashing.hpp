#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace actsynth {

std::string sha256_hex(const void* data, size_t len);
std::string sha256_hex(std::string_view s);
std::string sha256_hex(const std::vector<uint8_t>& v);

}  // namespace actsynth

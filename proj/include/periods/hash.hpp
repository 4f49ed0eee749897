#pragma once

#include <cstdint>
#include <string>

namespace periods {

// FNV-1a, used for content fingerprints in reports. Not cryptographic.
inline uint64_t fnv1a(const std::string& data, uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(uint64_t v);

}  // namespace periods

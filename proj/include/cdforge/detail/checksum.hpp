#ifndef CDFORGE_DETAIL_CHECKSUM_HPP
#define CDFORGE_DETAIL_CHECKSUM_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>

namespace cdforge::detail {

// CRC-32 (IEEE 802.3 polynomial, reflected).
inline std::uint32_t crc32(std::span<const unsigned char> data) {
  static const auto table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int k = 0; k < 8; ++k) c = (c >> 1) ^ (c & 1 ? 0xEDB88320u : 0u);
      t[i] = c;
    }
    return t;
  }();
  std::uint32_t crc = 0xFFFFFFFFu;
  for (unsigned char b : data) crc = (crc >> 8) ^ table[(crc ^ b) & 0xFFu];
  return ~crc;
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Order-sensitive 128-bit digest of a word sequence; used to deduplicate
// domains by content without keeping every order list around.
struct Digest128 {
  std::uint64_t a = 0, b = 0;
  friend auto operator<=>(const Digest128&, const Digest128&) = default;
};

inline Digest128 digest128(std::span<const std::uint64_t> words) {
  Digest128 d{0x6A09E667F3BCC908ull, 0xBB67AE8584CAA73Bull};
  for (std::uint64_t w : words) {
    d.a = mix64(d.a ^ w);
    d.b = mix64(d.b + (w * 0x9E3779B97F4A7C15ull));
  }
  d.a = mix64(d.a ^ words.size());
  d.b = mix64(d.b ^ (words.size() * 0xC2B2AE3D27D4EB4Full));
  return d;
}

}  // namespace cdforge::detail

#endif  // CDFORGE_DETAIL_CHECKSUM_HPP

#ifndef CIKIT_HMAC_SHA256_HPP
#define CIKIT_HMAC_SHA256_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cikit/state_vector.hpp"

namespace cikit {

using ByteView = std::span<const std::uint8_t>;

std::array<std::uint8_t, 32> sha256(ByteView data);

/// HMAC-SHA-256 per the standard construction (64-byte block, 0x36/0x5c pads).
std::array<std::uint8_t, 32> hmac_sha256(ByteView key, ByteView message);

/// A keyed hash function h: key x message -> n-bit digest.
class KeyedHash {
 public:
  virtual ~KeyedHash() = default;
  virtual int digest_bits() const noexcept = 0;
  virtual StateVector digest(ByteView key, ByteView message) const = 0;
};

/// HMAC-SHA-256 adapter; digests shorter than 256 bits keep the leftmost
/// bytes of the MAC (the usual truncation rule). Output width must be a
/// multiple of 8 in [8, 256].
class HmacSha256 final : public KeyedHash {
 public:
  explicit HmacSha256(int digest_bits = 256);
  int digest_bits() const noexcept override { return bits_; }
  StateVector digest(ByteView key, ByteView message) const override;

 private:
  int bits_;
};

}  // namespace cikit

#endif

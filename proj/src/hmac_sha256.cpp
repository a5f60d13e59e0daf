#include "cikit/hmac_sha256.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <stdexcept>

namespace cikit {

std::array<std::uint8_t, 32> sha256(ByteView data) {
  std::array<std::uint8_t, 32> out{};
  unsigned out_len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &out_len, EVP_sha256(), nullptr) != 1 ||
      out_len != out.size())
    throw std::runtime_error("sha256: EVP_Digest failed");
  return out;
}

std::array<std::uint8_t, 32> hmac_sha256(ByteView key, ByteView message) {
  constexpr std::size_t kBlock = 64;
  std::array<std::uint8_t, kBlock> block{};
  if (key.size() > kBlock) {
    const auto folded = sha256(key);
    std::memcpy(block.data(), folded.data(), folded.size());
  } else if (!key.empty()) {
    std::memcpy(block.data(), key.data(), key.size());
  }

  std::array<std::uint8_t, kBlock> ipad, opad;
  for (std::size_t i = 0; i < kBlock; ++i) {
    ipad[i] = block[i] ^ 0x36;
    opad[i] = block[i] ^ 0x5c;
  }

  std::vector<std::uint8_t> inner;
  inner.reserve(kBlock + message.size());
  inner.insert(inner.end(), ipad.begin(), ipad.end());
  inner.insert(inner.end(), message.begin(), message.end());
  const auto inner_digest = sha256(inner);

  std::array<std::uint8_t, kBlock + 32> outer;
  std::memcpy(outer.data(), opad.data(), kBlock);
  std::memcpy(outer.data() + kBlock, inner_digest.data(), inner_digest.size());
  return sha256(outer);
}

HmacSha256::HmacSha256(int digest_bits) : bits_(digest_bits) {
  if (digest_bits < 8 || digest_bits > 256 || digest_bits % 8 != 0)
    throw std::invalid_argument("HmacSha256: digest width must be a multiple of 8 in [8, 256]");
}

StateVector HmacSha256::digest(ByteView key, ByteView message) const {
  const auto mac = hmac_sha256(key, message);
  return StateVector::from_bytes_be(bits_,
                                    ByteView(mac.data(), static_cast<std::size_t>(bits_ / 8)));
}

}  // namespace cikit

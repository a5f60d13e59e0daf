#ifndef CIKIT_CHACHA20_HPP
#define CIKIT_CHACHA20_HPP

#include <array>
#include <cstdint>
#include <span>

#include "cikit/hmac_sha256.hpp"
#include "cikit/state_vector.hpp"

namespace cikit {

/// ChaCha20 keystream (32-byte key, 12-byte nonce, 32-bit initial counter).
class ChaCha20Stream {
 public:
  ChaCha20Stream(const std::array<std::uint8_t, 32>& key,
                 const std::array<std::uint8_t, 12>& nonce, std::uint32_t counter = 0);
  ChaCha20Stream(const ChaCha20Stream&) = delete;
  ChaCha20Stream& operator=(const ChaCha20Stream&) = delete;
  ChaCha20Stream(ChaCha20Stream&&) noexcept;
  ChaCha20Stream& operator=(ChaCha20Stream&&) noexcept;
  ~ChaCha20Stream();

  void fill(std::span<std::uint8_t> out);

 private:
  void* ctx_ = nullptr;  // EVP_CIPHER_CTX
};

/// Deterministic strategy generator: a ChaCha20 keystream keyed by
/// SHA-256(seed) with an all-zero nonce. Indices are drawn by rejection
/// sampling ceil(log2 n)-bit values (bits taken most-significant first from
/// the keystream), so they are uniform over [1, n]; blocks are consecutive
/// n-bit chunks of the keystream.
class StrategyPrng {
 public:
  StrategyPrng(ByteView seed, int n_cells);

  int n_cells() const noexcept { return n_cells_; }
  /// Uniform index in [1, n_cells].
  int next_index();
  /// Next n_cells-bit keystream block (n_cells must be a multiple of 8).
  StateVector next_block();

 private:
  std::uint32_t next_bits(int count);

  ChaCha20Stream stream_;
  int n_cells_;
  int index_bits_;
  std::uint64_t bit_buffer_ = 0;
  int buffered_bits_ = 0;
};

}  // namespace cikit

#endif

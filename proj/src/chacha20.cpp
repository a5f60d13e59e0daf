#include "cikit/chacha20.hpp"

#include <openssl/evp.h>

#include <bit>
#include <cstring>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cikit {

ChaCha20Stream::ChaCha20Stream(const std::array<std::uint8_t, 32>& key,
                               const std::array<std::uint8_t, 12>& nonce,
                               std::uint32_t counter) {
  // OpenSSL's chacha20 takes a 16-byte IV: 32-bit little-endian block
  // counter followed by the 12-byte nonce.
  std::array<std::uint8_t, 16> iv{};
  iv[0] = static_cast<std::uint8_t>(counter);
  iv[1] = static_cast<std::uint8_t>(counter >> 8);
  iv[2] = static_cast<std::uint8_t>(counter >> 16);
  iv[3] = static_cast<std::uint8_t>(counter >> 24);
  std::memcpy(iv.data() + 4, nonce.data(), nonce.size());

  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  if (ctx == nullptr ||
      EVP_EncryptInit_ex(ctx, EVP_chacha20(), nullptr, key.data(), iv.data()) != 1) {
    EVP_CIPHER_CTX_free(ctx);
    throw std::runtime_error("ChaCha20Stream: cipher initialization failed");
  }
  ctx_ = ctx;
}

ChaCha20Stream::ChaCha20Stream(ChaCha20Stream&& other) noexcept
    : ctx_(std::exchange(other.ctx_, nullptr)) {}

ChaCha20Stream& ChaCha20Stream::operator=(ChaCha20Stream&& other) noexcept {
  std::swap(ctx_, other.ctx_);
  return *this;
}

ChaCha20Stream::~ChaCha20Stream() {
  if (ctx_ != nullptr) EVP_CIPHER_CTX_free(static_cast<EVP_CIPHER_CTX*>(ctx_));
}

void ChaCha20Stream::fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  // Keystream = encryption of zeros.
  std::vector<std::uint8_t> zeros(out.size(), 0);
  int written = 0;
  if (EVP_EncryptUpdate(static_cast<EVP_CIPHER_CTX*>(ctx_), out.data(), &written, zeros.data(),
                        static_cast<int>(zeros.size())) != 1 ||
      written != static_cast<int>(out.size()))
    throw std::runtime_error("ChaCha20Stream: keystream generation failed");
}

StrategyPrng::StrategyPrng(ByteView seed, int n_cells)
    : stream_(sha256(seed), std::array<std::uint8_t, 12>{}, 0), n_cells_(n_cells) {
  if (n_cells < 1 || n_cells > StateVector::kMaxCells)
    throw std::invalid_argument("StrategyPrng: cell count out of range");
  index_bits_ = std::bit_width(static_cast<unsigned>(n_cells - 1));
  if (index_bits_ == 0) index_bits_ = 1;  // n = 1 still consumes one bit per draw
}

std::uint32_t StrategyPrng::next_bits(int count) {
  while (buffered_bits_ < count) {
    std::uint8_t byte = 0;
    stream_.fill({&byte, 1});
    bit_buffer_ = (bit_buffer_ << 8) | byte;
    buffered_bits_ += 8;
  }
  buffered_bits_ -= count;
  const auto value = static_cast<std::uint32_t>(bit_buffer_ >> buffered_bits_);
  bit_buffer_ &= (std::uint64_t{1} << buffered_bits_) - 1;
  return value & ((std::uint32_t{1} << count) - 1);
}

int StrategyPrng::next_index() {
  // Rejection sampling keeps the draw unbiased for cell counts that are not
  // powers of two.
  for (;;) {
    const std::uint32_t v = next_bits(index_bits_);
    if (v < static_cast<std::uint32_t>(n_cells_)) return static_cast<int>(v) + 1;
  }
}

StateVector StrategyPrng::next_block() {
  if (n_cells_ % 8 != 0)
    throw std::logic_error("StrategyPrng::next_block: width must be a multiple of 8");
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(n_cells_) / 8);
  stream_.fill(bytes);
  return StateVector::from_bytes_be(n_cells_, bytes);
}

}  // namespace cikit

#ifndef CIKIT_KEYED_HASH_HPP
#define CIKIT_KEYED_HASH_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cikit/chacha20.hpp"
#include "cikit/hmac_sha256.hpp"
#include "cikit/iterate.hpp"
#include "cikit/strategy.hpp"
#include "cikit/update.hpp"

namespace cikit {

/// An n-bit digest is just a state vector of the digest width.
using Digest = StateVector;

/// Key triple: inner-hash key, strategy seed, and the number of
/// post-treatment rounds. 128-bit keys or longer make the secure profile;
/// shorter keys are accepted for testing.
struct HashKey {
  std::vector<std::uint8_t> k1;  // inner-hash key
  std::vector<std::uint8_t> k2;  // strategy seed
  std::uint64_t rounds = 0;

  bool secure_profile() const noexcept { return k1.size() >= 16 && k2.size() >= 16; }
};

/// Produces the update directives that drive the digest post-treatment.
/// PRNG-driven sources emit uniform unary indices; stream-driven sources
/// emit one subset per input frame, the frame xored with the keystream.
class StrategySource final : public TermSource {
 public:
  /// Supplies the next n-bit frame, or nullopt at end of stream.
  using FrameSupplier = std::function<std::optional<std::vector<std::uint8_t>>()>;

  static StrategySource prng_driven(ByteView seed, int n_cells);
  static StrategySource stream_driven(ByteView seed, int n_cells, FrameSupplier frames);

  int n_cells() const noexcept override { return prng_.n_cells(); }
  TermKind kind() const noexcept override { return kind_; }
  StrategyTerm next() override;

 private:
  StrategySource(StrategyPrng prng, TermKind kind, FrameSupplier frames);

  StrategyPrng prng_;
  TermKind kind_;
  FrameSupplier frames_;  // null for PRNG-driven sources
};

/// The first `count` terms of a source.
std::vector<StrategyTerm> strategy_terms(StrategySource& source, std::size_t count);

/// Applies one chaotic-iteration step per term to the digest. Unary terms
/// update a single cell, subset terms update the masked cells, all from f's
/// image of the incoming digest.
Digest post_treatment(const Digest& digest, std::span<const StrategyTerm> terms,
                      const Update& f);

/// Raised when inversion is requested for an update function whose steps
/// cannot be certified as permutations of the digest space.
class CertificationError : public std::runtime_error {
 public:
  explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

/// The unique preimage of `digest` under post_treatment with the same terms:
/// inverse steps applied in reverse order. Certification paths, tried in
/// order:
///   - vectorial negation: every step is an involution (any width);
///   - explicit tables with arity <= 12: each step used is exhaustively
///     verified to be a permutation and inverted by table;
///   - explicit tables with arity <= 24, unary terms only: f must satisfy
///     f(x)_i = x_i xor g_i(rest), which makes each unary step an involution
///     on the updated cell (verified cell by cell).
/// Anything else raises CertificationError.
Digest invert_post_treatment(const Digest& digest, std::span<const StrategyTerm> terms,
                             const Update& f);

/// Keyed hash with chaotic post-treatment: the inner digest of (k1, m) is
/// run through `rounds` PRNG-driven negation steps seeded by k2.
Digest chaotic_hash(const KeyedHash& inner, const HashKey& key, ByteView message);

struct StreamOptions {
  bool zero_keystream = false;  // test profile: frames act as raw subsets
};

/// Frame-by-frame hashing of a stream: frame 0 is absorbed through the inner
/// hash, every later frame drives one subset step (frame xor keystream).
/// The digest after each frame is the running hash of the stream so far.
/// One session per stream; sessions are movable but not shareable, and the
/// inner hash must outlive the session.
class StreamHashSession {
 public:
  StreamHashSession(const KeyedHash& inner, HashKey key, StreamOptions options = {});

  int frame_bits() const noexcept { return n_cells_; }
  std::size_t frames_consumed() const noexcept { return frames_; }

  /// Absorb one frame of exactly frame_bits() bits; returns the running
  /// digest. Frames of any other size are rejected.
  const Digest& push_frame(ByteView frame);

  /// Running digest; requires at least one frame.
  const Digest& digest() const;

 private:
  const KeyedHash* inner_;
  HashKey key_;
  StreamOptions options_;
  int n_cells_;
  StrategyPrng prng_;
  std::optional<Digest> state_;
  std::size_t frames_ = 0;
};

}  // namespace cikit

#endif

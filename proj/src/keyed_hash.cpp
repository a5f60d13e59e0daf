#include "cikit/keyed_hash.hpp"

#include <string>
#include <utility>

namespace cikit {

StrategySource::StrategySource(StrategyPrng prng, TermKind kind, FrameSupplier frames)
    : prng_(std::move(prng)), kind_(kind), frames_(std::move(frames)) {}

StrategySource StrategySource::prng_driven(ByteView seed, int n_cells) {
  return StrategySource(StrategyPrng(seed, n_cells), TermKind::unary, nullptr);
}

StrategySource StrategySource::stream_driven(ByteView seed, int n_cells,
                                             FrameSupplier frames) {
  if (!frames) throw std::invalid_argument("StrategySource: null frame supplier");
  if (n_cells % 8 != 0)
    throw std::invalid_argument("StrategySource: stream width must be a multiple of 8");
  return StrategySource(StrategyPrng(seed, n_cells), TermKind::subset, std::move(frames));
}

StrategyTerm StrategySource::next() {
  if (kind_ == TermKind::unary) return StrategyTerm::unary(prng_.next_index());
  auto frame = frames_();
  if (!frame.has_value())
    throw std::runtime_error("StrategySource: frame underflow (stream ended)");
  const std::size_t want = static_cast<std::size_t>(prng_.n_cells()) / 8;
  if (frame->size() != want)
    throw std::invalid_argument("StrategySource: frame has " + std::to_string(frame->size()) +
                                " bytes, expected " + std::to_string(want));
  StateVector mask = StateVector::from_bytes_be(prng_.n_cells(), *frame);
  mask.xor_with(prng_.next_block());
  return StrategyTerm::subset(std::move(mask));
}

std::vector<StrategyTerm> strategy_terms(StrategySource& source, std::size_t count) {
  std::vector<StrategyTerm> terms;
  terms.reserve(count);
  for (std::size_t i = 0; i < count; ++i) terms.push_back(source.next());
  return terms;
}

Digest post_treatment(const Digest& digest, std::span<const StrategyTerm> terms,
                      const Update& f) {
  if (f.arity() != digest.size())
    throw std::invalid_argument("post_treatment: digest width does not match update arity");
  Digest x = digest;
  for (const auto& term : terms) x = ci_step(f, x, term);
  return x;
}

namespace {

// x_i -> f(x)_i is independent of x_i for every cell the terms touch, which
// makes each unary step an involution on that cell.
void certify_coordinate_xor(const UpdateFunction& f, std::span<const StrategyTerm> terms) {
  const int n = f.arity();
  std::vector<bool> needed(static_cast<std::size_t>(n) + 1, false);
  for (const auto& term : terms) needed[static_cast<std::size_t>(term.unary_index())] = true;
  const std::uint32_t states = std::uint32_t{1} << n;
  for (int i = 1; i <= n; ++i) {
    if (!needed[static_cast<std::size_t>(i)]) continue;
    const std::uint32_t bit = std::uint32_t{1} << (i - 1);
    for (std::uint32_t x = 0; x < states; ++x)
      if (((f.image_encoded(x) ^ f.image_encoded(x ^ bit)) & bit) == 0)
        throw CertificationError(
            "update function is not coordinate-invertible at cell " + std::to_string(i) +
            "; inversion would be ambiguous");
  }
}

Digest invert_table_exhaustive(const Digest& digest, std::span<const StrategyTerm> terms,
                               const UpdateFunction& f) {
  const int n = f.arity();
  const std::uint32_t states = std::uint32_t{1} << n;
  auto y = static_cast<std::uint32_t>(digest.encoding());
  std::vector<std::uint32_t> inverse(states);
  constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
  for (std::size_t t = terms.size(); t-- > 0;) {
    std::fill(inverse.begin(), inverse.end(), kUnset);
    const StateVector mask = terms[t].kind() == TermKind::subset
                                 ? terms[t].subset_mask()
                                 : terms[t].as_subset(n).subset_mask();
    const auto mask_bits = static_cast<std::uint32_t>(mask.encoding());
    for (std::uint32_t x = 0; x < states; ++x) {
      const std::uint32_t image = (x & ~mask_bits) | (f.image_encoded(x) & mask_bits);
      if (inverse[image] != kUnset)
        throw CertificationError("post-treatment step " + std::to_string(t) +
                                 " is not a permutation of the digest space");
      inverse[image] = x;
    }
    y = inverse[y];
  }
  return StateVector::from_encoding(n, y);
}

}  // namespace

Digest invert_post_treatment(const Digest& digest, std::span<const StrategyTerm> terms,
                             const Update& f) {
  if (f.arity() != digest.size())
    throw std::invalid_argument("invert_post_treatment: digest width mismatch");

  if (is_negation(f)) {
    // Negation steps are involutions of either kind: re-apply in reverse.
    Digest x = digest;
    for (std::size_t t = terms.size(); t-- > 0;) x = ci_step(f, x, terms[t]);
    return x;
  }

  const auto* table = dynamic_cast<const UpdateFunction*>(&f);
  if (table == nullptr)
    throw CertificationError(
        "inversion requires vectorial negation or an explicit truth table");

  if (table->arity() <= 12) return invert_table_exhaustive(digest, terms, *table);

  for (const auto& term : terms)
    if (term.kind() != TermKind::unary)
      throw CertificationError(
          "subset steps can only be inverted exhaustively (arity <= 12) or under negation");
  certify_coordinate_xor(*table, terms);

  Digest x = digest;
  for (std::size_t t = terms.size(); t-- > 0;) {
    // The updated cell's preimage is whichever value maps onto it; the
    // certification above guarantees exactly one does.
    const int i = terms[t].unary_index();
    StateVector candidate = x;
    candidate.set(i, false);
    x.set(i, table->image_bit(candidate, i) == x.get(i) ? false : true);
  }
  return x;
}

Digest chaotic_hash(const KeyedHash& inner, const HashKey& key, ByteView message) {
  const Digest seed = inner.digest(key.k1, message);
  if (key.rounds == 0) return seed;
  StrategySource source = StrategySource::prng_driven(key.k2, inner.digest_bits());
  const auto terms = strategy_terms(source, key.rounds);
  return post_treatment(seed, terms, Negation(inner.digest_bits()));
}

StreamHashSession::StreamHashSession(const KeyedHash& inner, HashKey key, StreamOptions options)
    : inner_(&inner),
      key_(std::move(key)),
      options_(options),
      n_cells_(inner.digest_bits()),
      prng_(key_.k2, n_cells_) {
  if (n_cells_ % 8 != 0)
    throw std::invalid_argument("StreamHashSession: frame width must be a multiple of 8");
}

const Digest& StreamHashSession::push_frame(ByteView frame) {
  const std::size_t want = static_cast<std::size_t>(n_cells_) / 8;
  if (frame.size() != want)
    throw std::invalid_argument("StreamHashSession: frame has " +
                                std::to_string(frame.size()) + " bytes, expected " +
                                std::to_string(want));
  if (!state_.has_value()) {
    state_ = inner_->digest(key_.k1, frame);
  } else {
    StateVector mask = StateVector::from_bytes_be(n_cells_, frame);
    if (!options_.zero_keystream) mask.xor_with(prng_.next_block());
    state_ = ci_step_subset(Negation(n_cells_), *state_, StrategyTerm::subset(std::move(mask)));
  }
  ++frames_;
  return *state_;
}

const Digest& StreamHashSession::digest() const {
  if (!state_.has_value())
    throw std::logic_error("StreamHashSession: no frames pushed yet (empty stream)");
  return *state_;
}

}  // namespace cikit

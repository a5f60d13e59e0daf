#ifndef CIKIT_UPDATE_HPP
#define CIKIT_UPDATE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cikit/state_vector.hpp"

namespace cikit {

/// A total map f: B^N -> B^N. Explicit truth tables cover N <= 24; implicit
/// rules (negation, callbacks) extend stepping to the widths the digest
/// post-treatment needs.
class Update {
 public:
  virtual ~Update() = default;

  virtual int arity() const noexcept = 0;

  /// f(x)_i, i in [1, arity].
  virtual bool image_bit(const StateVector& x, int i) const = 0;

  /// f(x); the default evaluates image_bit cell by cell.
  virtual StateVector image(const StateVector& x) const;

 protected:
  void check_input(const StateVector& x) const;
};

/// Explicit truth table: entry e is the canonical encoding of f(state(e)).
class UpdateFunction final : public Update {
 public:
  static constexpr int kMaxArity = 24;

  UpdateFunction(int arity, std::vector<std::uint32_t> table);

  static UpdateFunction negation(int arity);  // f(x) = bitwise complement
  static UpdateFunction identity(int arity);
  static UpdateFunction constant(int arity, std::uint32_t value = 0);

  int arity() const noexcept override { return arity_; }
  bool image_bit(const StateVector& x, int i) const override;
  StateVector image(const StateVector& x) const override;

  std::uint32_t image_encoded(std::uint32_t e) const;
  std::span<const std::uint32_t> table() const noexcept { return table_; }

  bool operator==(const UpdateFunction& other) const {
    return arity_ == other.arity_ && table_ == other.table_;
  }

 private:
  int arity_;
  std::vector<std::uint32_t> table_;
};

/// Vectorial negation f_0 as an implicit rule; arity up to StateVector::kMaxCells.
class Negation final : public Update {
 public:
  explicit Negation(int arity);
  int arity() const noexcept override { return arity_; }
  bool image_bit(const StateVector& x, int i) const override;
  StateVector image(const StateVector& x) const override;

 private:
  int arity_;
};

/// User-supplied rule; the callback must return a vector of the same length.
class CallbackUpdate final : public Update {
 public:
  CallbackUpdate(int arity, std::function<StateVector(const StateVector&)> fn);
  int arity() const noexcept override { return arity_; }
  bool image_bit(const StateVector& x, int i) const override;
  StateVector image(const StateVector& x) const override;

 private:
  int arity_;
  std::function<StateVector(const StateVector&)> fn_;
};

/// The canonical chaotic update function (explicit table form).
UpdateFunction make_negation(int arity);

/// True iff f is vectorial negation (recognizes both representations).
bool is_negation(const Update& f);

}  // namespace cikit

#endif

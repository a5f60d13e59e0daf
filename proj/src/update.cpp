#include "cikit/update.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cikit {

void Update::check_input(const StateVector& x) const {
  if (x.size() != arity())
    throw std::invalid_argument("update function arity " + std::to_string(arity()) +
                                " does not match state length " + std::to_string(x.size()));
}

StateVector Update::image(const StateVector& x) const {
  check_input(x);
  StateVector y(x.size());
  for (int i = 1; i <= x.size(); ++i) y.set(i, image_bit(x, i));
  return y;
}

UpdateFunction::UpdateFunction(int arity, std::vector<std::uint32_t> table)
    : arity_(arity), table_(std::move(table)) {
  if (arity < 1 || arity > kMaxArity)
    throw std::invalid_argument("UpdateFunction: arity must be in [1, " +
                                std::to_string(kMaxArity) + "], got " + std::to_string(arity));
  const std::size_t want = std::size_t{1} << arity;
  if (table_.size() != want)
    throw std::invalid_argument("UpdateFunction: table must have " + std::to_string(want) +
                                " entries, got " + std::to_string(table_.size()));
  for (std::uint32_t e : table_)
    if (e >= want)
      throw std::invalid_argument("UpdateFunction: table entry " + std::to_string(e) +
                                  " exceeds " + std::to_string(arity) + "-cell state space");
}

UpdateFunction UpdateFunction::negation(int arity) {
  if (arity < 1 || arity > kMaxArity)
    throw std::invalid_argument("UpdateFunction::negation: arity must be in [1, " +
                                std::to_string(kMaxArity) + "]");
  const std::uint32_t count = std::uint32_t{1} << arity;
  std::vector<std::uint32_t> table(count);
  for (std::uint32_t e = 0; e < count; ++e) table[e] = ~e & (count - 1);
  return UpdateFunction(arity, std::move(table));
}

UpdateFunction UpdateFunction::identity(int arity) {
  if (arity < 1 || arity > kMaxArity)
    throw std::invalid_argument("UpdateFunction::identity: arity must be in [1, " +
                                std::to_string(kMaxArity) + "]");
  const std::uint32_t count = std::uint32_t{1} << arity;
  std::vector<std::uint32_t> table(count);
  for (std::uint32_t e = 0; e < count; ++e) table[e] = e;
  return UpdateFunction(arity, std::move(table));
}

UpdateFunction UpdateFunction::constant(int arity, std::uint32_t value) {
  if (arity < 1 || arity > kMaxArity)
    throw std::invalid_argument("UpdateFunction::constant: arity must be in [1, " +
                                std::to_string(kMaxArity) + "]");
  const std::uint32_t count = std::uint32_t{1} << arity;
  if (value >= count)
    throw std::invalid_argument("UpdateFunction::constant: value exceeds state space");
  return UpdateFunction(arity, std::vector<std::uint32_t>(count, value));
}

std::uint32_t UpdateFunction::image_encoded(std::uint32_t e) const {
  if (e >= table_.size())
    throw std::out_of_range("UpdateFunction: encoding " + std::to_string(e) +
                            " exceeds state space");
  return table_[e];
}

bool UpdateFunction::image_bit(const StateVector& x, int i) const {
  check_input(x);
  if (i < 1 || i > arity_)
    throw std::out_of_range("UpdateFunction::image_bit: index out of range");
  return (table_[x.encoding()] >> (i - 1)) & 1u;
}

StateVector UpdateFunction::image(const StateVector& x) const {
  check_input(x);
  return StateVector::from_encoding(arity_, table_[x.encoding()]);
}

Negation::Negation(int arity) : arity_(arity) {
  if (arity < 1 || arity > StateVector::kMaxCells)
    throw std::invalid_argument("Negation: arity must be in [1, " +
                                std::to_string(StateVector::kMaxCells) + "]");
}

bool Negation::image_bit(const StateVector& x, int i) const {
  check_input(x);
  return !x.get(i);
}

StateVector Negation::image(const StateVector& x) const {
  check_input(x);
  return x.complemented();
}

CallbackUpdate::CallbackUpdate(int arity, std::function<StateVector(const StateVector&)> fn)
    : arity_(arity), fn_(std::move(fn)) {
  if (arity < 1 || arity > StateVector::kMaxCells)
    throw std::invalid_argument("CallbackUpdate: arity out of range");
  if (!fn_) throw std::invalid_argument("CallbackUpdate: empty callback");
}

bool CallbackUpdate::image_bit(const StateVector& x, int i) const {
  return image(x).get(i);
}

StateVector CallbackUpdate::image(const StateVector& x) const {
  check_input(x);
  StateVector y = fn_(x);
  if (y.size() != arity_)
    throw std::logic_error("CallbackUpdate: callback returned wrong length");
  return y;
}

UpdateFunction make_negation(int arity) { return UpdateFunction::negation(arity); }

bool is_negation(const Update& f) {
  if (dynamic_cast<const Negation*>(&f) != nullptr) return true;
  if (const auto* table = dynamic_cast<const UpdateFunction*>(&f)) {
    const std::uint32_t mask = (std::uint32_t{1} << table->arity()) - 1;
    for (std::uint32_t e = 0; e <= mask; ++e)
      if (table->image_encoded(e) != (~e & mask)) return false;
    return true;
  }
  return false;
}

}  // namespace cikit

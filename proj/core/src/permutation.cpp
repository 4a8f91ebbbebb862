#include "dra2dpa/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dra2dpa {

Permutation::Permutation(std::vector<std::uint32_t> order)
    : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (std::uint32_t index : order_) {
    if (index >= order_.size() || seen[index])
      throw std::invalid_argument("not a permutation of 0..k-1");
    seen[index] = true;
  }
}

Permutation Permutation::identity(std::uint32_t k) {
  std::vector<std::uint32_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  Permutation pi;
  pi.order_ = std::move(order);
  return pi;
}

std::uint32_t Permutation::position_of(std::uint32_t index) const {
  for (std::uint32_t pos = 0; pos < order_.size(); ++pos)
    if (order_[pos] == index) return pos;
  throw std::out_of_range("index not in permutation");
}

std::string Permutation::to_string() const {
  bool dotted = size() > 9;
  std::string out;
  for (std::uint32_t pos = 0; pos < size(); ++pos) {
    if (dotted && pos) out += '.';
    out += std::to_string(order_[pos] + 1);
  }
  return out;
}

Permutation move_to_front(const Permutation& pi, std::uint64_t visited_mask) {
  if (pi.size() < 64 && (visited_mask >> pi.size()) != 0)
    throw std::out_of_range("visited index outside permutation");
  if (visited_mask == 0) return pi;
  std::vector<std::uint32_t> order;
  order.reserve(pi.size());
  for (std::uint32_t pos = 0; pos < pi.size(); ++pos)
    if (visited_mask & (std::uint64_t{1} << pi.at(pos))) order.push_back(pi.at(pos));
  for (std::uint32_t pos = 0; pos < pi.size(); ++pos)
    if (!(visited_mask & (std::uint64_t{1} << pi.at(pos)))) order.push_back(pi.at(pos));
  Permutation out;
  out = Permutation(std::move(order));
  return out;
}

std::vector<Permutation> all_permutations(std::uint32_t k) {
  if (k > 8) throw std::invalid_argument("too many permutations to enumerate");
  std::vector<std::uint32_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Permutation> result;
  do {
    result.push_back(Permutation(order));
  } while (std::next_permutation(order.begin(), order.end()));
  return result;
}

}  // namespace dra2dpa

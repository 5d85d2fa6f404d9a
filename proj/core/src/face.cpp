#include "coskel/face.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace coskel {

GroundSet::GroundSet(int size) : size_(size) { assert(size >= 0); }

GroundSet::GroundSet(int size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  assert(size >= 0);
  assert(labels_.empty() || static_cast<int>(labels_.size()) == size_);
}

std::string GroundSet::label(int i) const {
  assert(i >= 0 && i < size_);
  if (labels_.empty()) return std::to_string(i);
  return labels_[static_cast<std::size_t>(i)];
}

GroundSet concat(const GroundSet& a, const GroundSet& b) {
  if (!a.has_labels() && !b.has_labels()) return GroundSet(a.size() + b.size());
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(a.size() + b.size()));
  for (int i = 0; i < a.size(); ++i) labels.push_back(a.label(i));
  for (int i = 0; i < b.size(); ++i) labels.push_back(b.label(i));
  return GroundSet(a.size() + b.size(), std::move(labels));
}

Face::Face(std::initializer_list<int> elems) : Face(std::vector<int>(elems)) {}

Face::Face(std::vector<int> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  assert(elems_.empty() || elems_.front() >= 0);
}

Face Face::from_mask(std::uint64_t mask) {
  Face f;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1) f.elems_.push_back(i);
  return f;
}

Face Face::full(int m) {
  Face f;
  f.elems_.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) f.elems_[static_cast<std::size_t>(i)] = i;
  return f;
}

bool Face::contains(int i) const {
  return std::binary_search(elems_.begin(), elems_.end(), i);
}

bool Face::subset_of(const Face& other) const {
  if (fits_word() && other.fits_word())
    return (mask() & ~other.mask()) == 0;
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

bool Face::disjoint_with(const Face& other) const {
  if (fits_word() && other.fits_word()) return (mask() & other.mask()) == 0;
  auto a = elems_.begin();
  auto b = other.elems_.begin();
  while (a != elems_.end() && b != other.elems_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

Face Face::united_with(const Face& other) const {
  std::vector<int> out;
  out.reserve(elems_.size() + other.elems_.size());
  std::set_union(elems_.begin(), elems_.end(),
                 other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out));
  Face f;
  f.elems_ = std::move(out);
  return f;
}

Face Face::intersected_with(const Face& other) const {
  std::vector<int> out;
  std::set_intersection(elems_.begin(), elems_.end(),
                        other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out));
  Face f;
  f.elems_ = std::move(out);
  return f;
}

Face Face::without(int i) const {
  Face f;
  f.elems_.reserve(elems_.size());
  for (int e : elems_)
    if (e != i) f.elems_.push_back(e);
  return f;
}

Face Face::shifted(int offset) const {
  Face f;
  f.elems_.reserve(elems_.size());
  for (int e : elems_) f.elems_.push_back(e + offset);
  return f;
}

Face Face::complement_in(int m) const {
  Face f;
  f.elems_.reserve(static_cast<std::size_t>(m) - elems_.size());
  auto it = elems_.begin();
  for (int i = 0; i < m; ++i) {
    if (it != elems_.end() && *it == i) { ++it; continue; }
    f.elems_.push_back(i);
  }
  return f;
}

std::uint64_t Face::mask() const {
  assert(fits_word());
  std::uint64_t m = 0;
  for (int e : elems_) m |= std::uint64_t{1} << e;
  return m;
}

std::string to_string(const Face& f) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int e : f.elements()) {
    if (!first) out << ',';
    out << e;
    first = false;
  }
  out << '}';
  return out.str();
}

} // namespace coskel

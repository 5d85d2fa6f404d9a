#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace coskel {

// Ground set {0, ..., size-1} with optional element labels used only for
// rendering.  Labels never take part in equality of complexes.
class GroundSet {
public:
  GroundSet() = default;
  explicit GroundSet(int size);
  GroundSet(int size, std::vector<std::string> labels);

  int size() const { return size_; }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(int i) const;
  const std::vector<std::string>& labels() const { return labels_; }

private:
  int size_ = 0;
  std::vector<std::string> labels_; // empty means "use the index itself"
};

// Concatenation for block constructions (products, joins).
GroundSet concat(const GroundSet& a, const GroundSet& b);

// A face is a subset of a ground set, stored as a sorted vector of distinct
// indices.  Set predicates take a packed 64-bit fast path whenever every
// element fits in one machine word; the generic path handles larger grounds.
// Both paths are observationally identical.
class Face {
public:
  Face() = default;
  Face(std::initializer_list<int> elems);
  explicit Face(std::vector<int> elems); // sorts and deduplicates

  static Face from_mask(std::uint64_t mask);
  static Face full(int m); // {0, ..., m-1}

  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  const std::vector<int>& elements() const { return elems_; }
  int max_element() const { return elems_.empty() ? -1 : elems_.back(); }

  bool contains(int i) const;
  bool subset_of(const Face& other) const;
  bool disjoint_with(const Face& other) const;

  Face united_with(const Face& other) const;
  Face intersected_with(const Face& other) const;
  Face without(int i) const;
  Face shifted(int offset) const;      // adds offset to every element
  Face complement_in(int m) const;     // {0..m-1} minus this

  bool fits_word() const { return elems_.empty() || elems_.back() < 64; }
  std::uint64_t mask() const;          // precondition: fits_word()

  friend bool operator==(const Face&, const Face&) = default;
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
    return a.elems_ <=> b.elems_;
  }

private:
  std::vector<int> elems_;
};

std::string to_string(const Face& f);

} // namespace coskel

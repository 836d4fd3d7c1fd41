#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "homalg/tensor.hpp"

namespace homalg {

// One nonzero coefficient of a defect value, keyed by its basis indices.
struct DefectEntry {
  std::vector<std::size_t> component;
  Scalar value;

  friend bool operator==(const DefectEntry&, const DefectEntry&) = default;
};

// A basis input on which an identity fails, with the nonzero part of the
// difference between its two sides.
struct Witness {
  std::string condition;
  std::vector<std::size_t> at;
  std::vector<DefectEntry> defect;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Result of a structural check: the identity holds iff there are no witnesses.
// Witnesses are listed in lexicographic order of basis inputs.
class DefectReport {
 public:
  bool holds() const { return witnesses_.empty(); }
  const std::vector<Witness>& witnesses() const { return witnesses_; }

  void add(Witness w) { witnesses_.push_back(std::move(w)); }
  // Adds a witness when the value is nonzero.
  void record(const std::string& condition, std::vector<std::size_t> at, const Vector& defect);
  void record(const std::string& condition, std::vector<std::size_t> at, const Tensor2& defect);
  void record(const std::string& condition, std::vector<std::size_t> at, const Tensor3& defect);
  void record(const std::string& condition, std::vector<std::size_t> at, const Scalar& defect);
  void merge(const DefectReport& other);

 private:
  std::vector<Witness> witnesses_;
};

// Renders basis indices one-based, e.g. "(e1,e2,e2)".
std::string basis_label(const std::vector<std::size_t>& at);
std::ostream& operator<<(std::ostream& os, const Witness& w);

}  // namespace homalg

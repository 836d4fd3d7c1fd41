#include "homalg/defect.hpp"

#include <sstream>

namespace homalg {

void DefectReport::record(const std::string& condition, std::vector<std::size_t> at, const Vector& defect) {
  Witness w{condition, std::move(at), {}};
  for (std::size_t i = 0; i < defect.dim(); ++i) {
    if (!defect[i].is_zero()) w.defect.push_back({{i}, defect[i]});
  }
  if (!w.defect.empty()) add(std::move(w));
}

void DefectReport::record(const std::string& condition, std::vector<std::size_t> at, const Tensor2& defect) {
  Witness w{condition, std::move(at), {}};
  for (std::size_t i = 0; i < defect.extent0(); ++i) {
    for (std::size_t j = 0; j < defect.extent1(); ++j) {
      if (!defect(i, j).is_zero()) w.defect.push_back({{i, j}, defect(i, j)});
    }
  }
  if (!w.defect.empty()) add(std::move(w));
}

void DefectReport::record(const std::string& condition, std::vector<std::size_t> at, const Tensor3& defect) {
  Witness w{condition, std::move(at), {}};
  for (std::size_t i = 0; i < defect.extent(0); ++i) {
    for (std::size_t j = 0; j < defect.extent(1); ++j) {
      for (std::size_t k = 0; k < defect.extent(2); ++k) {
        if (!defect(i, j, k).is_zero()) w.defect.push_back({{i, j, k}, defect(i, j, k)});
      }
    }
  }
  if (!w.defect.empty()) add(std::move(w));
}

void DefectReport::record(const std::string& condition, std::vector<std::size_t> at, const Scalar& defect) {
  if (!defect.is_zero()) add(Witness{condition, std::move(at), {{{}, defect}}});
}

void DefectReport::merge(const DefectReport& other) {
  witnesses_.insert(witnesses_.end(), other.witnesses_.begin(), other.witnesses_.end());
}

std::string basis_label(const std::vector<std::size_t>& at) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < at.size(); ++i) os << (i ? "," : "") << 'e' << at[i] + 1;
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Witness& w) {
  os << w.condition << " at " << basis_label(w.at) << ":";
  for (const auto& d : w.defect) {
    os << ' ';
    if (d.component.empty()) {
      os << d.value;
      continue;
    }
    os << d.value << "*";
    for (std::size_t i = 0; i < d.component.size(); ++i) os << (i ? "(x)" : "") << 'e' << d.component[i] + 1;
  }
  return os;
}

}  // namespace homalg

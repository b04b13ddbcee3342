#pragma once

#include <compare>
#include <string>

namespace qaff {

// Kirillov-Reshetikhin module W^{(i)}_{k, q^r}: highest loop-weight
// sum_{j<k} (varpi_i, q^{r + 2 d_i j}).
struct KRIndex {
  int i = 1;
  int k = 0;
  int r = 0;

  auto operator<=>(const KRIndex&) const = default;
  std::string to_string() const {
    return "W(" + std::to_string(i) + ")_{" + std::to_string(k) + ",q^" + std::to_string(r) + "}";
  }
};

}  // namespace qaff

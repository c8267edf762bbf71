#pragma once

#include "sginv/abstract_graph.hpp"
#include "sginv/diagram.hpp"
#include "sginv/laurent.hpp"

#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace sginv {

// sigma = A + 1 + A^-1
LaurentPoly yamada_sigma();

// Values of connected crossing-free graphs keyed by canonical certificate.
// Safe to share between threads.
class YamadaMemo {
 public:
  std::optional<LaurentPoly> find(const std::string& key) const;
  void insert(const std::string& key, const LaurentPoly& value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, LaurentPoly> table_;
};

LaurentPoly eval_crossing_free(const AbstractGraph& g, YamadaMemo* memo = nullptr);

// Picks which crossing to resolve next given the current crossing count.
using CrossingChooser = std::function<std::size_t(std::size_t crossing_count)>;

LaurentPoly yamada_raw(const Diagram& d, YamadaMemo* memo = nullptr, const CrossingChooser& choose = {});

struct YamadaResult {
  LaurentPoly raw{'A'};
  LaurentPoly normalized{'A'};
  std::optional<int> min_power;  // empty when raw is zero
};

YamadaResult normalize_yamada(const LaurentPoly& raw);
YamadaResult yamada_normalized(const Diagram& d, YamadaMemo* memo = nullptr);

}  // namespace sginv

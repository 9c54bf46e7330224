#ifndef WELLCOVER_GENERATE_HPP
#define WELLCOVER_GENERATE_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wellcover/errors.hpp"
#include "wellcover/graph.hpp"

namespace wellcover {

// Configuration for a stream of test instances. Exhaustive mode walks every
// labeled graph (optionally every labeled s-partite graph) on n vertices;
// the random modes draw independent samples from a fixed seed.
struct GeneratorConfig {
  enum class Mode { kExhaustiveLabeled, kRandomSpartite, kRandomGnp };

  Mode mode = Mode::kExhaustiveLabeled;
  int n = 0;
  std::vector<int> part_sizes;       // required for kRandomSpartite; optional filter in exhaustive mode
  double edge_probability = 0.5;     // random modes only
  std::uint64_t seed = 0;            // random modes only
  std::uint64_t count = 0;           // instances to emit; 0 = everything (exhaustive mode only)
  int timeout_secs = 5;              // per-instance work allowance for scans
};

struct Instance {
  Graph graph;
  std::optional<Partition> partition;
  std::uint64_t index = 0;
};

namespace detail {

// Platform-stable uniform draw from [0, 1): 53 random bits scaled down.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Partition consecutive_parts(const std::vector<int>& part_sizes) {
  Partition p;
  int v = 0;
  for (int size : part_sizes) {
    VertexSet part;
    for (int i = 0; i < size; ++i) part.add(v++);
    p.parts.push_back(part);
  }
  return p;
}

}  // namespace detail

// Emits instances one at a time; exhausted streams return nullopt.
class InstanceStream {
 public:
  explicit InstanceStream(GeneratorConfig config) : config_(std::move(config)), rng_(config_.seed) {
    if (config_.n < 1 || config_.n > 64) throw std::invalid_argument("vertex count out of range");
    if (config_.edge_probability < 0.0 || config_.edge_probability > 1.0)
      throw std::invalid_argument("edge probability out of range");
    if (!config_.part_sizes.empty()) {
      for (int size : config_.part_sizes)
        if (size < 1) throw std::invalid_argument("empty partition part");
      if (std::accumulate(config_.part_sizes.begin(), config_.part_sizes.end(), 0) != config_.n)
        throw std::invalid_argument("part sizes do not sum to the vertex count");
      partition_ = detail::consecutive_parts(config_.part_sizes);
      for (int v = 0; v < config_.n; ++v)
        for (std::size_t i = 0; i < partition_->parts.size(); ++i)
          if (partition_->parts[i].contains(v)) part_of_.push_back(static_cast<int>(i));
    }
    switch (config_.mode) {
      case GeneratorConfig::Mode::kExhaustiveLabeled: {
        for (auto [u, v] : vertex_pairs(config_.n))
          if (part_of_.empty() ||
              part_of_[static_cast<std::size_t>(u)] != part_of_[static_cast<std::size_t>(v)])
            eligible_pairs_.emplace_back(u, v);
        if (eligible_pairs_.size() > 24)
          throw LimitError("too many vertex pairs for exhaustive enumeration");
        total_ = 1ull << eligible_pairs_.size();
        if (config_.count > 0 && config_.count < total_) total_ = config_.count;
        break;
      }
      case GeneratorConfig::Mode::kRandomSpartite:
        if (config_.part_sizes.empty())
          throw std::invalid_argument("random multipartite mode needs part sizes");
        [[fallthrough]];
      case GeneratorConfig::Mode::kRandomGnp:
        if (config_.count == 0) throw std::invalid_argument("random modes need an instance count");
        total_ = config_.count;
        break;
    }
  }

  const GeneratorConfig& config() const { return config_; }
  std::uint64_t total() const { return total_; }

  std::optional<Instance> next() {
    if (index_ >= total_) return std::nullopt;
    Graph g(config_.n);
    switch (config_.mode) {
      case GeneratorConfig::Mode::kExhaustiveLabeled:
        for (std::size_t b = 0; b < eligible_pairs_.size(); ++b)
          if (index_ >> b & 1) g.add_edge(eligible_pairs_[b].first, eligible_pairs_[b].second);
        break;
      case GeneratorConfig::Mode::kRandomSpartite:
        for (auto [u, v] : vertex_pairs(config_.n))
          if (part_of_[static_cast<std::size_t>(u)] != part_of_[static_cast<std::size_t>(v)] &&
              detail::unit_uniform(rng_) < config_.edge_probability)
            g.add_edge(u, v);
        break;
      case GeneratorConfig::Mode::kRandomGnp:
        for (auto [u, v] : vertex_pairs(config_.n))
          if (detail::unit_uniform(rng_) < config_.edge_probability) g.add_edge(u, v);
        break;
    }
    return Instance{std::move(g), partition_, index_++};
  }

 private:
  GeneratorConfig config_;
  std::mt19937_64 rng_;
  std::optional<Partition> partition_;
  std::vector<int> part_of_;
  std::vector<std::pair<int, int>> eligible_pairs_;
  std::uint64_t total_ = 0;
  std::uint64_t index_ = 0;
};

}  // namespace wellcover

#endif

#pragma once

// Resource caps for exhaustive searches. Exceeding a cap throws
// BudgetExceeded; a search never reports "none" after running out.

#include <chrono>
#include <cstdint>

#include "barnette/plane_graph.hpp"

namespace barnette {

struct SearchBudget {
  int max_vertices = 100000;
  int max_edges = 300000;
  std::int64_t max_nodes = 2'000'000'000;
  double max_seconds = 3600.0;
};

class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget = {})
      : budget_(budget), start_(std::chrono::steady_clock::now()) {
    require(budget.max_vertices > 0 && budget.max_edges > 0 && budget.max_nodes > 0 && budget.max_seconds > 0,
            "search budget caps must be positive");
  }

  void check_size(const PlaneGraph& g) const {
    if (g.vertex_count() > budget_.max_vertices)
      throw BudgetExceeded("graph has " + std::to_string(g.vertex_count()) + " vertices, cap is " +
                           std::to_string(budget_.max_vertices));
    if (g.edge_count() > budget_.max_edges)
      throw BudgetExceeded("graph has " + std::to_string(g.edge_count()) + " edges, cap is " +
                           std::to_string(budget_.max_edges));
  }

  /// Counts one search node; the clock is sampled every 4096 nodes.
  void tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) throw BudgetExceeded("node cap of " + std::to_string(budget_.max_nodes) + " reached");
    if ((nodes_ & 4095) == 0 && elapsed() > budget_.max_seconds)
      throw BudgetExceeded("time cap of " + std::to_string(budget_.max_seconds) + " s reached");
  }

  std::int64_t nodes() const { return nodes_; }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::int64_t nodes_ = 0;
};

}  // namespace barnette

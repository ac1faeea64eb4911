#pragma once
#include <optional>
#include <string>
#include <vector>

#include "rpt/sp_tester.hpp"
#include "rpt/spirality.hpp"
#include "rpt/spq_tree.hpp"

namespace rpt {

// Non-negative part of a symmetric integer spirality set in one of the shapes
// [0], [1], [1,2]^1, [0,M]^1, [0,M]^2, [1,M]^2.
struct Interval {
  enum Shape { Empty, Trivial, Jump1, Jump2 } shape = Empty;
  int m = 0;
  int M = 0;

  static Interval empty() { return {}; }
  static Interval trivial(int M) { return {Trivial, M, M}; }
  static Interval jump1(int m, int M) { return {Jump1, m, M}; }
  static Interval jump2(int M) { return {Jump2, M % 2, M}; }

  bool is_empty() const { return shape == Empty; }
  bool admits(int v) const;
  std::string str() const;
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.shape == b.shape && (a.shape == Empty || (a.m == b.m && a.M == b.M));
  }
};

// Classifies the non-negative part of a (doubled) set; false if it is none of the six shapes.
bool classify(const SpiralitySet& s, Interval& out);

struct SeriesCounters {
  int n = 0;      // children
  int x = 0;      // children equal to [0]
  int y = 0;      // children equal to [1,2]^1
  int z = 0;      // jump-1 children
  int empty = 0;  // infeasible children
  long long M = 0;

  void add(const Interval& c);
  void remove(const Interval& c);
  friend bool operator==(const SeriesCounters&, const SeriesCounters&) = default;
};

Interval interval_q(int len);
Interval interval_series(const SeriesCounters& c);
Interval interval_p3(const Interval& a, const Interval& b, const Interval& c);
Interval interval_p2(const Interval& a, const Interval& b);
bool root_check(const Interval& child, int len);

// Directed-edge memo of intervals with constant-time S-node reroots.
class IpDp {
 public:
  explicit IpDp(const SpqTree& t);
  const Interval& get(int node, int parent);
  // Counters of S-node `node` with parent `parent`, as used by get().
  SeriesCounters counters(int node, int parent);
  SeriesCounters counters_from_scratch(int node, int parent);
  long long reroot_updates() const { return reroots_; }
  long long direct_work() const { return direct_; }
  const SpqTree& tree() const { return t_; }

 private:
  void evaluate(int node, int parent);
  const SpqTree& t_;
  std::vector<Interval> val_;
  std::vector<char> done_;
  std::vector<int> first_;
  std::vector<SeriesCounters> full_;
  std::vector<char> has_full_;
  long long reroots_ = 0, direct_ = 0;
};

// Throws std::invalid_argument unless t is independent-parallel.
std::optional<Witness> test_ip(const SpqTree& t);
NodeAssignment construct_ip(IpDp& dp, int root, int sigma_child2);

// S-node split: values for sets summing to target, jump-2 children reduced first.
std::vector<int> split_series(const std::vector<Interval>& kids, int target);

}  // namespace rpt

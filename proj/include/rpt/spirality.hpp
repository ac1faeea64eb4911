#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rpt {

// Set of spirality values stored doubled (2*sigma), so semi-integers are exact.
class SpiralitySet {
 public:
  SpiralitySet() = default;
  static SpiralitySet single(int d2);
  // doubled values lo2, lo2+step2, ..., <= hi2
  static SpiralitySet range(int lo2, int hi2, int step2 = 2);
  static SpiralitySet from_values(const std::vector<int>& d2);

  bool empty() const { return nbits_ == 0; }
  bool contains(int d2) const;
  void insert(int d2);
  int min() const { return offset_; }
  int max() const { return offset_ + nbits_ - 1; }
  int count() const;
  std::vector<int> values() const;  // doubled, ascending

  SpiralitySet shifted(int d2) const;
  SpiralitySet negated() const;
  SpiralitySet& operator|=(const SpiralitySet& o);
  friend SpiralitySet operator&(const SpiralitySet& a, const SpiralitySet& b);
  friend bool operator==(const SpiralitySet& a, const SpiralitySet& b) {
    return a.offset_ == b.offset_ && a.nbits_ == b.nbits_ && a.bits_ == b.bits_;
  }
  bool symmetric() const { return *this == negated(); }
  // "[-2,-1,0,1/2]" style
  std::string str() const;

  int offset() const { return offset_; }
  int nbits() const { return nbits_; }
  const std::vector<uint64_t>& words() const { return bits_; }
  static SpiralitySet from_words(int offset, int nbits, std::vector<uint64_t> w);

 private:
  void normalize();
  int offset_ = 0;
  int nbits_ = 0;
  std::vector<uint64_t> bits_;
};

enum class SumBackend { Auto, Serial, Omp, Fft };
void set_sum_backend(SumBackend b);
SumBackend sum_backend();

SpiralitySet cartesian_sum(const SpiralitySet& a, const SpiralitySet& b);
SpiralitySet cartesian_sum_naive(const SpiralitySet& a, const SpiralitySet& b);
SpiralitySet cartesian_sum_serial(const SpiralitySet& a, const SpiralitySet& b);
SpiralitySet cartesian_sum_omp(const SpiralitySet& a, const SpiralitySet& b);
SpiralitySet cartesian_sum_fft(const SpiralitySet& a, const SpiralitySet& b);

SpiralitySet q_star_set(int len);
SpiralitySet compose_series(const std::vector<SpiralitySet>& sets);

// P-node with three children.
SpiralitySet p3_set(const SpiralitySet& a, const SpiralitySet& b, const SpiralitySet& c);
// Feasible child orders (indices into sets, left/centre/right) for target doubled sigma.
std::vector<std::array<int, 3>> compose_parallel3(const std::array<SpiralitySet, 3>& sets, int target2);

// P-node with two children. Coefficients are doubled k (1 means 1/2, 2 means 1).
// Alpha index: 0 = u left, 1 = u right, 2 = v left, 3 = v right.
struct ParallelJoinVars {
  std::array<int, 4> k2{2, 2, 2, 2};
  std::array<int, 4> alpha{0, 0, 0, 0};
};
// Allowed values per alpha variable as bitmask over {0,1}: bit0 -> 0 allowed, bit1 -> 1 allowed.
using AlphaMask = std::array<uint8_t, 4>;
constexpr AlphaMask kAlphaFree{3, 3, 3, 3};

// k2 for a fixed child order: k2[0..3] refer to the child placed left (0,2) and right (1,3).
struct P2Choice {
  int left = 0;  // index of left child (0 or 1)
  std::array<int, 4> alpha{};
  int sigma_left2 = 0, sigma_right2 = 0;
};

// kc[c] holds doubled k for child c at (u, v).
struct P2Coefs {
  std::array<std::array<int, 2>, 2> kc{{{2, 2}, {2, 2}}};
};

SpiralitySet p2_set(const SpiralitySet& c0, const SpiralitySet& c1, const P2Coefs& k, const AlphaMask& mask);
std::vector<P2Choice> compose_parallel2(const SpiralitySet& c0, const SpiralitySet& c1, const P2Coefs& k,
                                        const AlphaMask& mask, int target2);

class SupportTree {
 public:
  explicit SupportTree(const std::vector<SpiralitySet>& children);
  const SpiralitySet& root() const { return nodes_[1]; }
  SpiralitySet delta_without(int j) const;
  int leaves() const { return leaves_; }
  int dummies() const { return leaves_ - children_; }

 private:
  int children_ = 0, leaves_ = 0;
  std::vector<SpiralitySet> nodes_;
};

}  // namespace rpt

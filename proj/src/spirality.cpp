#include "rpt/spirality.hpp"

#include <fftw3.h>
#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace rpt {

namespace {

std::atomic<SumBackend> g_backend{SumBackend::Auto};
constexpr int kOmpMinWords = 64;
constexpr int kFftMinBits = 1 << 14;

inline int words_for(int nbits) { return (nbits + 63) / 64; }

inline bool get_bit(const std::vector<uint64_t>& w, int i) { return (w[i >> 6] >> (i & 63)) & 1u; }

// dst[lo, hi) |= (src << shift), word granularity.
void or_shifted(std::vector<uint64_t>& dst, int lo, int hi, const std::vector<uint64_t>& src, int shift) {
  int ws = shift >> 6, bs = shift & 63;
  int ns = static_cast<int>(src.size());
  int a = std::max(lo, ws), b = std::min(hi, ws + ns + (bs ? 1 : 0));
  for (int i = a; i < b; ++i) {
    int j = i - ws;
    uint64_t v = 0;
    if (j < ns) v = src[j] << bs;
    if (bs && j - 1 >= 0 && j - 1 < ns) v |= src[j - 1] >> (64 - bs);
    dst[i] |= v;
  }
}

}  // namespace

SpiralitySet SpiralitySet::single(int d2) {
  SpiralitySet s;
  s.offset_ = d2;
  s.nbits_ = 1;
  s.bits_ = {1};
  return s;
}

SpiralitySet SpiralitySet::range(int lo2, int hi2, int step2) {
  SpiralitySet s;
  if (hi2 < lo2) return s;
  s.offset_ = lo2;
  s.nbits_ = hi2 - lo2 + 1;
  s.bits_.assign(words_for(s.nbits_), 0);
  for (int x = 0; x < s.nbits_; x += step2) s.bits_[x >> 6] |= uint64_t{1} << (x & 63);
  s.normalize();
  return s;
}

SpiralitySet SpiralitySet::from_values(const std::vector<int>& d2) {
  SpiralitySet s;
  for (int x : d2) s.insert(x);
  return s;
}

SpiralitySet SpiralitySet::from_words(int offset, int nbits, std::vector<uint64_t> w) {
  SpiralitySet s;
  s.offset_ = offset;
  s.nbits_ = nbits;
  s.bits_ = std::move(w);
  s.bits_.resize(words_for(nbits));
  s.normalize();
  return s;
}

void SpiralitySet::normalize() {
  if (nbits_ > 0 && (nbits_ & 63)) bits_[bits_.size() - 1] &= (uint64_t{1} << (nbits_ & 63)) - 1;
  int hi = -1;
  for (int i = static_cast<int>(bits_.size()) - 1; i >= 0; --i)
    if (bits_[i]) {
      hi = i * 64 + 63 - std::countl_zero(bits_[i]);
      break;
    }
  if (hi < 0) {
    *this = SpiralitySet();
    return;
  }
  int lo = 0;
  for (size_t i = 0;; ++i)
    if (bits_[i]) {
      lo = static_cast<int>(i) * 64 + std::countr_zero(bits_[i]);
      break;
    }
  if (lo == 0) {
    nbits_ = hi + 1;
    bits_.resize(words_for(nbits_));
    return;
  }
  std::vector<uint64_t> out(words_for(hi - lo + 1), 0);
  int ws = lo >> 6, bs = lo & 63;
  for (size_t i = 0; i < out.size(); ++i) {
    size_t j = i + ws;
    uint64_t v = j < bits_.size() ? bits_[j] >> bs : 0;
    if (bs && j + 1 < bits_.size()) v |= bits_[j + 1] << (64 - bs);
    out[i] = v;
  }
  offset_ += lo;
  nbits_ = hi - lo + 1;
  bits_ = std::move(out);
  if (nbits_ & 63) bits_.back() &= (uint64_t{1} << (nbits_ & 63)) - 1;
}

bool SpiralitySet::contains(int d2) const {
  int i = d2 - offset_;
  return i >= 0 && i < nbits_ && get_bit(bits_, i);
}

void SpiralitySet::insert(int d2) {
  if (empty()) {
    *this = single(d2);
    return;
  }
  SpiralitySet s = single(d2);
  *this |= s;
}

int SpiralitySet::count() const {
  int c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

std::vector<int> SpiralitySet::values() const {
  std::vector<int> v;
  for (int i = 0; i < nbits_; ++i)
    if (get_bit(bits_, i)) v.push_back(offset_ + i);
  return v;
}

SpiralitySet SpiralitySet::shifted(int d2) const {
  SpiralitySet s = *this;
  if (!s.empty()) s.offset_ += d2;
  return s;
}

SpiralitySet SpiralitySet::negated() const {
  if (empty()) return {};
  std::vector<uint64_t> out(bits_.size(), 0);
  for (int i = 0; i < nbits_; ++i)
    if (get_bit(bits_, i)) {
      int j = nbits_ - 1 - i;
      out[j >> 6] |= uint64_t{1} << (j & 63);
    }
  return from_words(-max(), nbits_, std::move(out));
}

SpiralitySet& SpiralitySet::operator|=(const SpiralitySet& o) {
  if (o.empty()) return *this;
  if (empty()) return *this = o;
  int lo = std::min(offset_, o.offset_);
  int hi = std::max(max(), o.max());
  int nb = hi - lo + 1;
  std::vector<uint64_t> out(words_for(nb), 0);
  or_shifted(out, 0, static_cast<int>(out.size()), bits_, offset_ - lo);
  or_shifted(out, 0, static_cast<int>(out.size()), o.bits_, o.offset_ - lo);
  *this = from_words(lo, nb, std::move(out));
  return *this;
}

SpiralitySet operator&(const SpiralitySet& a, const SpiralitySet& b) {
  if (a.empty() || b.empty()) return {};
  int lo = std::max(a.offset_, b.offset_);
  int hi = std::min(a.max(), b.max());
  if (hi < lo) return {};
  int nb = hi - lo + 1;
  int nw = words_for(nb);
  // realign both onto [lo, hi]
  auto slice = [&](const SpiralitySet& s) {
    std::vector<uint64_t> out(nw, 0);
    int sh = s.offset_ - lo;  // <= 0
    int ws = (-sh) >> 6, bs = (-sh) & 63;
    int ns = static_cast<int>(s.bits_.size());
    for (int i = 0; i < nw; ++i) {
      int j = i + ws;
      uint64_t v = j < ns ? s.bits_[j] >> bs : 0;
      if (bs && j + 1 < ns) v |= s.bits_[j + 1] << (64 - bs);
      out[i] = v;
    }
    return out;
  };
  auto x = slice(a), y = slice(b);
  for (int i = 0; i < nw; ++i) x[i] &= y[i];
  return SpiralitySet::from_words(lo, nb, std::move(x));
}

std::string SpiralitySet::str() const {
  std::string s = "[";
  bool first = true;
  for (int v : values()) {
    if (!first) s += ",";
    first = false;
    if (v % 2 == 0)
      s += std::to_string(v / 2);
    else
      s += std::to_string(v) + "/2";
  }
  return s + "]";
}

void set_sum_backend(SumBackend b) { g_backend = b; }
SumBackend sum_backend() { return g_backend; }

SpiralitySet cartesian_sum_naive(const SpiralitySet& a, const SpiralitySet& b) {
  SpiralitySet r;
  auto bv = b.values();
  for (int x : a.values())
    for (int y : bv) r.insert(x + y);
  return r;
}

SpiralitySet cartesian_sum_serial(const SpiralitySet& a, const SpiralitySet& b) {
  if (a.empty() || b.empty()) return {};
  const SpiralitySet& big = a.count() >= b.count() ? a : b;
  const SpiralitySet& small = &big == &a ? b : a;
  int nb = a.nbits() + b.nbits() - 1;
  std::vector<uint64_t> out(words_for(nb), 0);
  int hi = static_cast<int>(out.size());
  const auto& sw = small.words();
  for (int i = 0; i < small.nbits(); ++i)
    if (get_bit(sw, i)) or_shifted(out, 0, hi, big.words(), i);
  return SpiralitySet::from_words(a.offset() + b.offset(), nb, std::move(out));
}

SpiralitySet cartesian_sum_omp(const SpiralitySet& a, const SpiralitySet& b) {
  if (a.empty() || b.empty()) return {};
  const SpiralitySet& big = a.count() >= b.count() ? a : b;
  const SpiralitySet& small = &big == &a ? b : a;
  int nb = a.nbits() + b.nbits() - 1;
  int nw = words_for(nb);
  std::vector<uint64_t> out(nw, 0);
  std::vector<int> shifts = small.values();
  for (int& s : shifts) s -= small.offset();
  const auto& bw = big.words();
  int chunk = std::max(8, nw / (4 * std::max(1, omp_get_max_threads())));
  int nchunks = (nw + chunk - 1) / chunk;
#pragma omp parallel for schedule(static)
  for (int c = 0; c < nchunks; ++c) {
    int lo = c * chunk, hi = std::min(nw, lo + chunk);
    for (int s : shifts) or_shifted(out, lo, hi, bw, s);
  }
  return SpiralitySet::from_words(a.offset() + b.offset(), nb, std::move(out));
}

SpiralitySet cartesian_sum_fft(const SpiralitySet& a, const SpiralitySet& b) {
  if (a.empty() || b.empty()) return {};
  static std::mutex plan_mutex;
  int na = a.nbits(), nb = b.nbits();
  int n = na + nb - 1;
  int len = 1;
  while (len < n) len <<= 1;
  int nc = len / 2 + 1;
  double* x = fftw_alloc_real(len);
  double* y = fftw_alloc_real(len);
  fftw_complex* X = fftw_alloc_complex(nc);
  fftw_complex* Y = fftw_alloc_complex(nc);
  fftw_plan px, py, pi;
  {
    std::lock_guard<std::mutex> lk(plan_mutex);
    px = fftw_plan_dft_r2c_1d(len, x, X, FFTW_ESTIMATE);
    py = fftw_plan_dft_r2c_1d(len, y, Y, FFTW_ESTIMATE);
    pi = fftw_plan_dft_c2r_1d(len, X, x, FFTW_ESTIMATE);
  }
  std::fill(x, x + len, 0.0);
  std::fill(y, y + len, 0.0);
  for (int i = 0; i < na; ++i) x[i] = get_bit(a.words(), i) ? 1.0 : 0.0;
  for (int i = 0; i < nb; ++i) y[i] = get_bit(b.words(), i) ? 1.0 : 0.0;
  fftw_execute(px);
  fftw_execute(py);
  for (int i = 0; i < nc; ++i) {
    double re = X[i][0] * Y[i][0] - X[i][1] * Y[i][1];
    double im = X[i][0] * Y[i][1] + X[i][1] * Y[i][0];
    X[i][0] = re;
    X[i][1] = im;
  }
  fftw_execute(pi);
  std::vector<uint64_t> out(words_for(n), 0);
  for (int i = 0; i < n; ++i)
    if (x[i] / len > 0.5) out[i >> 6] |= uint64_t{1} << (i & 63);
  {
    std::lock_guard<std::mutex> lk(plan_mutex);
    fftw_destroy_plan(px);
    fftw_destroy_plan(py);
    fftw_destroy_plan(pi);
  }
  fftw_free(x);
  fftw_free(y);
  fftw_free(X);
  fftw_free(Y);
  return SpiralitySet::from_words(a.offset() + b.offset(), n, std::move(out));
}

SpiralitySet cartesian_sum(const SpiralitySet& a, const SpiralitySet& b) {
  switch (g_backend.load()) {
    case SumBackend::Serial: return cartesian_sum_serial(a, b);
    case SumBackend::Omp: return cartesian_sum_omp(a, b);
    case SumBackend::Fft:
      if (std::min(a.count(), b.count()) > 8 && a.nbits() + b.nbits() > kFftMinBits) return cartesian_sum_fft(a, b);
      return cartesian_sum_serial(a, b);
    case SumBackend::Auto:
      if (omp_get_max_threads() > 1 && words_for(a.nbits() + b.nbits()) >= kOmpMinWords)
        return cartesian_sum_omp(a, b);
      return cartesian_sum_serial(a, b);
  }
  return cartesian_sum_serial(a, b);
}

SpiralitySet q_star_set(int len) {
  if (len < 1) throw std::invalid_argument("q_star_set: length must be >= 1");
  return SpiralitySet::range(-2 * (len - 1), 2 * (len - 1));
}

SpiralitySet compose_series(const std::vector<SpiralitySet>& sets) {
  if (sets.empty()) return SpiralitySet::single(0);
  SpiralitySet acc = sets[0];
  for (size_t i = 1; i < sets.size() && !acc.empty(); ++i) acc = cartesian_sum(acc, sets[i]);
  return acc;
}

namespace {
constexpr std::array<std::array<int, 3>, 6> kPerms{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
}

SpiralitySet p3_set(const SpiralitySet& a, const SpiralitySet& b, const SpiralitySet& c) {
  std::array<const SpiralitySet*, 3> s{&a, &b, &c};
  SpiralitySet r;
  for (auto& p : kPerms) r |= s[p[0]]->shifted(-4) & *s[p[1]] & s[p[2]]->shifted(4);
  return r;
}

std::vector<std::array<int, 3>> compose_parallel3(const std::array<SpiralitySet, 3>& sets, int target2) {
  std::vector<std::array<int, 3>> out;
  for (auto& p : kPerms)
    if (sets[p[0]].contains(target2 + 4) && sets[p[1]].contains(target2) && sets[p[2]].contains(target2 - 4))
      out.push_back(p);
  return out;
}

namespace {

template <class F>
void for_each_alpha(const AlphaMask& mask, F&& f) {
  for (int m = 0; m < 16; ++m) {
    std::array<int, 4> al{m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1};
    bool ok = true;
    for (int i = 0; i < 4; ++i)
      if (!((mask[i] >> al[i]) & 1)) ok = false;
    if (!ok || al[0] + al[1] < 1 || al[2] + al[3] < 1) continue;
    f(al);
  }
}

}  // namespace

SpiralitySet p2_set(const SpiralitySet& c0, const SpiralitySet& c1, const P2Coefs& k, const AlphaMask& mask) {
  std::array<const SpiralitySet*, 2> s{&c0, &c1};
  SpiralitySet r;
  for (int l = 0; l < 2; ++l) {
    int rr = 1 - l;
    for_each_alpha(mask, [&](const std::array<int, 4>& al) {
      int a = k.kc[l][0] * al[0] + k.kc[l][1] * al[2];
      int b = k.kc[rr][0] * al[1] + k.kc[rr][1] * al[3];
      r |= s[l]->shifted(-a) & s[rr]->shifted(b);
    });
  }
  return r;
}

std::vector<P2Choice> compose_parallel2(const SpiralitySet& c0, const SpiralitySet& c1, const P2Coefs& k,
                                        const AlphaMask& mask, int target2) {
  std::array<const SpiralitySet*, 2> s{&c0, &c1};
  std::vector<P2Choice> out;
  for (int l = 0; l < 2; ++l) {
    int rr = 1 - l;
    for_each_alpha(mask, [&](const std::array<int, 4>& al) {
      int a = k.kc[l][0] * al[0] + k.kc[l][1] * al[2];
      int b = k.kc[rr][0] * al[1] + k.kc[rr][1] * al[3];
      if (s[l]->contains(target2 + a) && s[rr]->contains(target2 - b))
        out.push_back({l, al, target2 + a, target2 - b});
    });
  }
  return out;
}

SupportTree::SupportTree(const std::vector<SpiralitySet>& children) {
  children_ = static_cast<int>(children.size());
  leaves_ = 1;
  while (leaves_ < children_) leaves_ <<= 1;
  nodes_.assign(2 * leaves_, {});
  for (int i = 0; i < leaves_; ++i) nodes_[leaves_ + i] = i < children_ ? children[i] : SpiralitySet::single(0);
  for (int i = leaves_ - 1; i >= 1; --i) nodes_[i] = cartesian_sum(nodes_[2 * i], nodes_[2 * i + 1]);
}

SpiralitySet SupportTree::delta_without(int j) const {
  SpiralitySet acc = SpiralitySet::single(0);
  for (int x = leaves_ + j; x > 1; x >>= 1) acc = cartesian_sum(acc, nodes_[x ^ 1]);
  return acc;
}

}  // namespace rpt

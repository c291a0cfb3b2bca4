#include "fst/set_pool.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "fst/error.hpp"

namespace fst {

namespace {

std::uint64_t power_saturating(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace

SetPool::SetPool(FramePtr frame, GradeLattice lattice, std::uint64_t cap)
    : frame_(std::move(frame)), lattice_(std::move(lattice)), cells_(frame_->cells()) {
  const std::size_t m = lattice_.size();
  const std::uint64_t limit = std::min<std::uint64_t>(cap, std::numeric_limits<std::uint16_t>::max());
  const std::uint64_t count = power_saturating(m, cells_, std::numeric_limits<std::uint64_t>::max() / 2);
  if (count > limit) throw CapExceeded("set pool", count, limit);
  const std::size_t P = count;
  const std::size_t U = frame_->universe->size();

  digits_.assign(P * cells_, 0);
  for (std::size_t i = 0; i < P; ++i) {
    std::size_t v = i;
    for (std::size_t c = cells_; c-- > 0;) {
      digits_[i * cells_ + c] = static_cast<std::uint8_t>(v % m);
      v /= m;
    }
  }
  sets_.reserve(P);
  elements_.assign(P, 0);
  crisp_.assign(P, 1);
  for (std::size_t i = 0; i < P; ++i) {
    std::vector<Grade> g(cells_);
    for (std::size_t c = 0; c < cells_; ++c) {
      const auto d = digits_[i * cells_ + c];
      g[c] = lattice_[d];
      if (d != 0) elements_[i] |= std::uint64_t{1} << (c % U);
      if (d != 0 && d != m - 1) crisp_[i] = 0;
    }
    sets_.emplace_back(frame_, std::move(g));
  }

  meet_.resize(P * P);
  join_.resize(P * P);
  up_.reset(P, P);
  down_.reset(P, P);
  std::vector<std::uint8_t> lo(cells_), hi(cells_);
  for (std::size_t a = 0; a < P; ++a) {
    const auto* da = &digits_[a * cells_];
    for (std::size_t b = 0; b < P; ++b) {
      const auto* db = &digits_[b * cells_];
      bool le = true;
      for (std::size_t c = 0; c < cells_; ++c) {
        lo[c] = std::min(da[c], db[c]);
        hi[c] = std::max(da[c], db[c]);
        le = le && da[c] <= db[c];
      }
      meet_[a * P + b] = static_cast<std::uint16_t>(encode(lo));
      join_[a * P + b] = static_cast<std::uint16_t>(encode(hi));
      if (le) {
        up_.set(a, b);
        down_.set(b, a);
      }
    }
  }
  complement_.resize(P);
  for (std::size_t a = 0; a < P; ++a) {
    for (std::size_t c = 0; c < cells_; ++c) lo[c] = static_cast<std::uint8_t>(m - 1 - digits_[a * cells_ + c]);
    complement_[a] = encode(lo);
  }

  const auto pts = enumerate_points(frame_, lattice_, std::numeric_limits<std::uint64_t>::max());
  points_ = pts;
  point_pos_.assign(P, npos);
  for (std::size_t pos = 0; pos < points_.size(); ++pos) {
    const Index i = index_of(point_as_fss(points_[pos]));
    point_sets_.push_back(i);
    point_pos_[i] = static_cast<std::uint32_t>(pos);
  }
  points_in_.reset(P, points_.size());
  for (std::size_t a = 0; a < P; ++a)
    for (std::size_t pos = 0; pos < points_.size(); ++pos)
      if (leq(point_sets_[pos], static_cast<Index>(a))) points_in_.set(a, pos);
}

SetPool::Index SetPool::encode(std::span<const std::uint8_t> digits) const {
  Index v = 0;
  for (auto d : digits) v = static_cast<Index>(v * lattice_.size() + d);
  return v;
}

SetPool::Index SetPool::index_of(const FuzzySoftSet& g) const {
  if (!same_frame(g.frame_ptr(), frame_)) throw MismatchError("set does not live over the pool frame");
  std::vector<std::uint8_t> d(cells_);
  for (std::size_t c = 0; c < cells_; ++c) {
    const auto pos = lattice_.index_of(g.cells()[c]);
    if (!pos) throw PreconditionError("set " + render(g) + " is not on the lattice " + to_string(lattice_));
    d[c] = static_cast<std::uint8_t>(*pos);
  }
  return encode(d);
}

SetPool::Index SetPool::restrict_off(Index g, Index k) const {
  std::array<std::uint8_t, 16> d{};
  for (std::size_t c = 0; c < cells_; ++c) d[c] = digits_[k * cells_ + c] == 0 ? digits_[g * cells_ + c] : 0;
  return encode(std::span<const std::uint8_t>(d.data(), cells_));
}

}  // namespace fst

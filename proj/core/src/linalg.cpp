#include "grstage/linalg.hpp"

#include <map>
#include <stdexcept>
#include <variant>

namespace grstage {

Scalar determinant(std::vector<std::vector<Scalar>> entries,
                   const Field& field) {
  const std::size_t n = entries.size();
  for (const auto& row : entries) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  }
  Scalar det = field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && entries[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return field.zero();
    if (pivot != col) {
      std::swap(entries[pivot], entries[col]);
      det = field.neg(det);
    }
    const Scalar& lead = entries[col][col];
    det = field.mul(det, lead);
    const Scalar inv_lead = field.inv(lead);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (entries[r][col].is_zero()) continue;
      const Scalar factor = field.mul(entries[r][col], inv_lead);
      for (std::size_t c = col; c < n; ++c) {
        entries[r][c] =
            field.sub(entries[r][c], field.mul(factor, entries[col][c]));
      }
    }
  }
  return det;
}

namespace {

// Arithmetic policies for the elimination engine.

struct PrimeOps {
  using Value = std::int64_t;
  std::int64_t p;

  Value zero() const { return 0; }
  bool is_zero(Value a) const { return a == 0; }
  Value neg(Value a) const { return a == 0 ? 0 : p - a; }
  Value add(Value a, Value b) const { return (a + b) % p; }
  Value sub(Value a, Value b) const {
    Value r = (a - b) % p;
    return r < 0 ? r + p : r;
  }
  Value mul(Value a, Value b) const { return a * b % p; }
  Value inv(Value a) const {
    Value old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
      const Value q = old_r / r;
      Value t = old_r - q * r;
      old_r = r;
      r = t;
      t = old_s - q * s;
      old_s = s;
      s = t;
    }
    return old_s < 0 ? old_s + p : old_s;
  }
};

struct RationalOps {
  using Value = BigRat;

  Value zero() const { return BigRat(0); }
  bool is_zero(const Value& a) const { return a.is_zero(); }
  Value neg(const Value& a) const { return -a; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value inv(const Value& a) const { return 1 / a; }
};

template <class Ops>
class Engine {
 public:
  using Value = typename Ops::Value;
  using Row = std::vector<std::pair<std::int32_t, Value>>;

  Engine(Ops ops, bool track) : ops_(std::move(ops)), track_(track) {}

  // r -= factor * pivot, merged by column.
  Row axpy(const Row& r, const Value& factor, const Row& pivot) const {
    Row out;
    out.reserve(r.size() + pivot.size());
    auto ir = r.begin();
    auto ip = pivot.begin();
    while (ir != r.end() || ip != pivot.end()) {
      if (ip == pivot.end() || (ir != r.end() && ir->first < ip->first)) {
        out.push_back(*ir++);
      } else if (ir == r.end() || ip->first < ir->first) {
        out.emplace_back(ip->first, ops_.neg(ops_.mul(factor, ip->second)));
        ++ip;
      } else {
        Value v = ops_.sub(ir->second, ops_.mul(factor, ip->second));
        if (!ops_.is_zero(v)) out.emplace_back(ir->first, std::move(v));
        ++ir;
        ++ip;
      }
    }
    return out;
  }

  struct Reduced {
    Row remainder;
    Row combination;  // over input indices (tracking only)
  };

  Reduced reduce(Row row) const {
    Reduced acc;
    Row combo;
    while (!row.empty()) {
      const std::int32_t lead = row.front().first;
      const auto it = pivot_by_col_.find(lead);
      if (it == pivot_by_col_.end()) break;
      const Pivot& pivot = pivots_[static_cast<std::size_t>(it->second)];
      const Value factor = row.front().second;  // pivot lead is 1
      row = axpy(row, factor, pivot.row);
      if (track_) combo = axpy(combo, ops_.neg(factor), pivot.rep);
    }
    acc.remainder = std::move(row);
    acc.combination = std::move(combo);
    return acc;
  }

  int add_row(Row row) {
    const int input_index = input_count_++;
    Reduced red = reduce(std::move(row));
    if (red.remainder.empty()) return input_index;
    // Normalize the leading entry to 1 and store as a pivot.
    const Value lead_inv = ops_.inv(red.remainder.front().second);
    for (auto& [c, v] : red.remainder) v = ops_.mul(v, lead_inv);
    Pivot pivot;
    pivot.row = std::move(red.remainder);
    if (track_) {
      // pivot = lead_inv * (input - reduction combination)
      Row self{{static_cast<std::int32_t>(input_index), lead_inv}};
      pivot.rep = merge_add(self, scale(red.combination, ops_.neg(lead_inv)));
    }
    pivot_by_col_.emplace(pivot.row.front().first,
                          static_cast<int>(pivots_.size()));
    pivots_.push_back(std::move(pivot));
    return input_index;
  }

  typename RowReducer::Probe probe_row(Row row, const Field& field) const {
    Reduced red = reduce(std::move(row));
    typename RowReducer::Probe out;
    out.in_span = red.remainder.empty();
    if (out.in_span && track_) {
      for (auto& [i, v] : red.combination) {
        out.combination.emplace_back(static_cast<int>(i),
                                     to_scalar(v, field));
      }
    }
    return out;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  int inputs() const { return input_count_; }

  static Value from_scalar(const Scalar& s, const Field& field) {
    if constexpr (std::is_same_v<Ops, PrimeOps>) {
      return field.residue(s);
    } else {
      return field.rational(s);
    }
  }

  static Scalar to_scalar(const Value& v, const Field& field) {
    if constexpr (std::is_same_v<Ops, PrimeOps>) {
      return field.from_int(v);
    } else {
      return field.from_rational(v);
    }
  }

 private:
  struct Pivot {
    Row row;  // leading value 1
    Row rep;  // expression over input indices
  };

  Row scale(const Row& r, const Value& factor) const {
    Row out;
    out.reserve(r.size());
    for (const auto& [c, v] : r) {
      Value scaled = ops_.mul(v, factor);
      if (!ops_.is_zero(scaled)) out.emplace_back(c, std::move(scaled));
    }
    return out;
  }

  Row merge_add(const Row& a, const Row& b) const {
    Row out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
        out.push_back(*ia++);
      } else if (ia == a.end() || ib->first < ia->first) {
        out.push_back(*ib++);
      } else {
        Value v = ops_.add(ia->second, ib->second);
        if (!ops_.is_zero(v)) out.emplace_back(ia->first, std::move(v));
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  Ops ops_;
  bool track_;
  int input_count_ = 0;
  std::vector<Pivot> pivots_;
  std::map<std::int32_t, int> pivot_by_col_;
};

}  // namespace

struct RowReducer::Impl {
  Field field;
  std::variant<Engine<PrimeOps>, Engine<RationalOps>> engine;

  Impl(const Field& f, bool track)
      : field(f),
        engine(f.is_prime()
                   ? std::variant<Engine<PrimeOps>, Engine<RationalOps>>(
                         std::in_place_index<0>,
                         PrimeOps{f.characteristic()}, track)
                   : std::variant<Engine<PrimeOps>, Engine<RationalOps>>(
                         std::in_place_index<1>, RationalOps{}, track)) {}

  template <class Fn>
  auto visit(Fn&& fn) {
    return std::visit(std::forward<Fn>(fn), engine);
  }
  template <class Fn>
  auto visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), engine);
  }
};

RowReducer::RowReducer(const Field& field, bool track_combinations)
    : impl_(std::make_unique<Impl>(field, track_combinations)) {}

RowReducer::~RowReducer() = default;
RowReducer::RowReducer(RowReducer&&) noexcept = default;
RowReducer& RowReducer::operator=(RowReducer&&) noexcept = default;

int RowReducer::add_row(const SparseRow& row) {
  return impl_->visit([&](auto& engine) {
    using E = std::decay_t<decltype(engine)>;
    typename E::Row converted;
    converted.reserve(row.size());
    for (const auto& [c, v] : row) {
      converted.emplace_back(c, E::from_scalar(v, impl_->field));
    }
    return engine.add_row(std::move(converted));
  });
}

int RowReducer::rank() const {
  return impl_->visit([](const auto& engine) { return engine.rank(); });
}

int RowReducer::input_count() const {
  return impl_->visit([](const auto& engine) { return engine.inputs(); });
}

RowReducer::Probe RowReducer::probe(const SparseRow& row) const {
  return impl_->visit([&](const auto& engine) {
    using E = std::decay_t<decltype(engine)>;
    typename E::Row converted;
    converted.reserve(row.size());
    for (const auto& [c, v] : row) {
      converted.emplace_back(c, E::from_scalar(v, impl_->field));
    }
    return engine.probe_row(std::move(converted), impl_->field);
  });
}

}  // namespace grstage

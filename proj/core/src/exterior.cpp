#include "grstage/exterior.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grstage {

std::int64_t mu(SignedIndex i) {
  if (i == 0) throw std::invalid_argument("signed index must be nonzero");
  const std::int64_t v = i;
  return v < 0 ? -2 * v : 2 * v - 1;
}

bool mu_less(SignedIndex a, SignedIndex b) { return mu(a) < mu(b); }

std::vector<SignedIndex> Stage::symbols() const {
  std::vector<SignedIndex> out;
  out.reserve(static_cast<std::size_t>(symbol_count()));
  for (SignedIndex i = 1; i <= positives; ++i) out.push_back(i);
  for (SignedIndex i = 1; i <= negatives; ++i) out.push_back(-i);
  std::sort(out.begin(), out.end(), mu_less);
  return out;
}

std::string Stage::to_string() const {
  return "(" + std::to_string(negatives) + "," + std::to_string(positives) + ")";
}

std::optional<CanonicalWedge> WedgeIndex::canonicalize(
    std::span<const SignedIndex> raw) {
  std::vector<SignedIndex> labels(raw.begin(), raw.end());
  // Insertion sort, counting inversions for the parity.
  int sign = 1;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    SignedIndex key = labels[i];
    std::size_t j = i;
    while (j > 0 && mu(labels[j - 1]) > mu(key)) {
      labels[j] = labels[j - 1];
      sign = -sign;
      --j;
    }
    labels[j] = key;
  }
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] == labels[i - 1]) return std::nullopt;
  }
  WedgeIndex w;
  w.labels_ = std::move(labels);
  return CanonicalWedge{std::move(w), sign};
}

WedgeIndex WedgeIndex::from_sorted(std::vector<SignedIndex> labels) {
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (mu(labels[i - 1]) >= mu(labels[i])) {
      throw std::invalid_argument("labels are not strictly mu-increasing");
    }
  }
  WedgeIndex w;
  w.labels_ = std::move(labels);
  return w;
}

WedgeIndex WedgeIndex::from_set(std::span<const SignedIndex> labels) {
  auto canonical = canonicalize(labels);
  if (!canonical) throw std::invalid_argument("repeated label in index set");
  return std::move(canonical->index);
}

bool WedgeIndex::contains(SignedIndex i) const { return position_of(i) >= 0; }

int WedgeIndex::position_of(SignedIndex i) const {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] == i) return static_cast<int>(k);
  }
  return -1;
}

bool WedgeIndex::valid_at(const Stage& stage) const {
  return std::all_of(labels_.begin(), labels_.end(),
                     [&](SignedIndex i) { return stage.contains(i); });
}

WedgeIndex WedgeIndex::without(SignedIndex i) const {
  const int pos = position_of(i);
  if (pos < 0) throw std::invalid_argument("label not present");
  WedgeIndex w;
  w.labels_ = labels_;
  w.labels_.erase(w.labels_.begin() + pos);
  return w;
}

int WedgeIndex::compare(const WedgeIndex& a, const WedgeIndex& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("wedge index comparison requires equal degree");
  }
  for (std::size_t k = 0; k < a.labels_.size(); ++k) {
    const std::int64_t ma = mu(a.labels_[k]);
    const std::int64_t mb = mu(b.labels_[k]);
    if (ma != mb) return ma < mb ? -1 : 1;
  }
  return 0;
}

std::string WedgeIndex::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (k > 0) out << ',';
    out << labels_[k];
  }
  out << '}';
  return out.str();
}

bool WedgeIndexLess::operator()(const WedgeIndex& a, const WedgeIndex& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return WedgeIndex::compare(a, b) < 0;
}

std::vector<WedgeIndex> basis_keys(const Stage& stage, int degree) {
  const std::vector<SignedIndex> symbols = stage.symbols();
  const int n = static_cast<int>(symbols.size());
  std::vector<WedgeIndex> out;
  if (degree < 0 || degree > n) return out;
  std::vector<int> pick(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; ++k) pick[static_cast<std::size_t>(k)] = k;
  while (true) {
    std::vector<SignedIndex> labels;
    labels.reserve(static_cast<std::size_t>(degree));
    for (int k : pick) labels.push_back(symbols[static_cast<std::size_t>(k)]);
    out.push_back(WedgeIndex::from_sorted(std::move(labels)));
    int i = degree - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - degree + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < degree; ++k) {
      pick[static_cast<std::size_t>(k)] = pick[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
  return out;
}

ExteriorElement::ExteriorElement(Stage stage, int degree, Side side, Field field)
    : stage_(stage), degree_(degree), side_(side), field_(std::move(field)) {
  if (!stage_.valid()) throw std::invalid_argument("invalid stage");
  if (degree_ < 0 || degree_ > stage_.symbol_count()) {
    throw std::invalid_argument("degree out of range for stage");
  }
}

ExteriorElement ExteriorElement::zero(Stage stage, int degree, Side side,
                                      Field field) {
  return ExteriorElement(stage, degree, side, std::move(field));
}

ExteriorElement ExteriorElement::basis(Stage stage, Side side,
                                       const WedgeIndex& key, Field field) {
  ExteriorElement e(stage, key.degree(), side, field);
  e.set_coefficient(key, field.one());
  return e;
}

ExteriorElement ExteriorElement::constant(Stage stage, Side side,
                                          const Scalar& value, Field field) {
  ExteriorElement e(stage, 0, side, std::move(field));
  e.set_coefficient(WedgeIndex{}, value);
  return e;
}

Scalar ExteriorElement::coefficient(const WedgeIndex& key) const {
  const auto it = coeffs_.find(key);
  return it == coeffs_.end() ? field_.zero() : it->second;
}

void ExteriorElement::accumulate(const WedgeIndex& key, const Scalar& value) {
  if (value.is_zero()) return;
  const auto it = coeffs_.find(key);
  if (it == coeffs_.end()) {
    set_coefficient(key, value);
    return;
  }
  it->second = field_.add(it->second, value);
  if (it->second.is_zero()) coeffs_.erase(it);
}

void ExteriorElement::set_coefficient(const WedgeIndex& key,
                                      const Scalar& value) {
  if (key.degree() != degree_) {
    throw std::invalid_argument("key degree does not match element degree");
  }
  if (!key.valid_at(stage_)) {
    throw std::invalid_argument("key " + key.to_string() +
                                " is not valid at stage " + stage_.to_string());
  }
  if (value.is_zero()) {
    coeffs_.erase(key);
  } else {
    coeffs_[key] = value;
  }
}

ExteriorElement ExteriorElement::plus(const ExteriorElement& other) const {
  if (stage_ != other.stage_ || degree_ != other.degree_ ||
      side_ != other.side_) {
    throw std::invalid_argument("element shape mismatch in addition");
  }
  ExteriorElement out = *this;
  for (const auto& [key, value] : other.coeffs_) out.accumulate(key, value);
  return out;
}

ExteriorElement ExteriorElement::minus(const ExteriorElement& other) const {
  return plus(other.scaled(field_.from_int(-1)));
}

ExteriorElement ExteriorElement::scaled(const Scalar& factor) const {
  ExteriorElement out(stage_, degree_, side_, field_);
  if (factor.is_zero()) return out;
  for (const auto& [key, value] : coeffs_) {
    out.coeffs_[key] = field_.mul(value, factor);
  }
  return out;
}

bool ExteriorElement::operator==(const ExteriorElement& other) const {
  return stage_ == other.stage_ && degree_ == other.degree_ &&
         side_ == other.side_ && field_.spec() == other.field_.spec() &&
         coeffs_ == other.coeffs_;
}

ExteriorElement wedge(const ExteriorElement& u, const ExteriorElement& v) {
  if (u.stage() != v.stage() || u.side() != v.side() ||
      !(u.field().spec() == v.field().spec())) {
    throw std::invalid_argument("wedge requires matching stage and side");
  }
  const Field& field = u.field();
  const int degree = std::min(u.degree() + v.degree(), u.stage().symbol_count());
  ExteriorElement out(u.stage(), degree, u.side(), field);
  if (u.degree() + v.degree() > u.stage().symbol_count()) return out;

  std::vector<SignedIndex> raw;
  for (const auto& [ku, cu] : u.coeffs()) {
    for (const auto& [kv, cv] : v.coeffs()) {
      raw.clear();
      raw.insert(raw.end(), ku.labels().begin(), ku.labels().end());
      raw.insert(raw.end(), kv.labels().begin(), kv.labels().end());
      const auto canonical = WedgeIndex::canonicalize(raw);
      if (!canonical) continue;
      Scalar term = field.mul(cu, cv);
      if (canonical->sign < 0) term = field.neg(term);
      out.accumulate(canonical->index, term);
    }
  }
  return out;
}

ExteriorElement wedge_of_covectors(std::span<const ExteriorElement> covectors) {
  if (covectors.empty()) {
    throw std::invalid_argument("need at least one covector");
  }
  for (const ExteriorElement& f : covectors) {
    if (f.side() != Side::Dual || f.degree() != 1) {
      throw std::invalid_argument("inputs must be degree-1 dual elements");
    }
  }
  ExteriorElement acc = ExteriorElement::constant(
      covectors[0].stage(), Side::Dual, covectors[0].field().one(),
      covectors[0].field());
  for (const ExteriorElement& f : covectors) acc = wedge(acc, f);
  return acc;
}

Scalar pairing(const ExteriorElement& functional, const ExteriorElement& vec) {
  if (functional.side() != Side::Dual || vec.side() != Side::Primal) {
    throw std::invalid_argument("pairing takes a dual and a primal element");
  }
  if (functional.stage() != vec.stage() ||
      functional.degree() != vec.degree()) {
    throw std::invalid_argument("pairing requires equal stage and degree");
  }
  const Field& field = functional.field();
  Scalar acc = field.zero();
  const auto& small = functional.coeffs().size() <= vec.coeffs().size()
                          ? functional.coeffs()
                          : vec.coeffs();
  const ExteriorElement& other =
      functional.coeffs().size() <= vec.coeffs().size() ? vec : functional;
  for (const auto& [key, value] : small) {
    acc = field.add(acc, field.mul(value, other.coefficient(key)));
  }
  return acc;
}

ExteriorElement interior(SignedIndex i, const ExteriorElement& omega) {
  if (omega.side() != Side::Dual || omega.degree() < 1) {
    throw std::invalid_argument("interior product needs a dual element of degree >= 1");
  }
  const Field& field = omega.field();
  ExteriorElement out(omega.stage(), omega.degree() - 1, Side::Dual, field);
  for (const auto& [key, value] : omega.coeffs()) {
    const int pos = key.position_of(i);
    if (pos < 0) continue;
    out.accumulate(key.without(i), pos % 2 == 0 ? value : field.neg(value));
  }
  return out;
}

ExteriorElement map_eta(const ExteriorElement& u) {
  if (u.side() != Side::Primal) {
    throw std::invalid_argument("map_eta acts on primal elements");
  }
  Stage target{u.stage().negatives + 1, u.stage().positives};
  ExteriorElement out(target, u.degree(), Side::Primal, u.field());
  for (const auto& [key, value] : u.coeffs()) out.set_coefficient(key, value);
  return out;
}

ExteriorElement map_beta(const ExteriorElement& u) {
  if (u.side() != Side::Primal) {
    throw std::invalid_argument("map_beta acts on primal elements");
  }
  const Stage target{u.stage().negatives, u.stage().positives + 1};
  const SignedIndex appended = static_cast<SignedIndex>(target.positives);
  const Field& field = u.field();
  ExteriorElement out(target, u.degree() + 1, Side::Primal, field);
  std::vector<SignedIndex> raw;
  for (const auto& [key, value] : u.coeffs()) {
    raw.assign(key.labels().begin(), key.labels().end());
    raw.push_back(appended);
    const auto canonical = WedgeIndex::canonicalize(raw);
    if (!canonical) continue;
    out.accumulate(canonical->index,
                   canonical->sign < 0 ? field.neg(value) : value);
  }
  return out;
}

ExteriorElement map_xi(const ExteriorElement& omega) {
  if (omega.side() != Side::Dual) {
    throw std::invalid_argument("map_xi acts on dual elements");
  }
  if (omega.stage().negatives < 2) {
    throw std::invalid_argument("map_xi needs at least two negative labels");
  }
  const SignedIndex dropped =
      static_cast<SignedIndex>(-omega.stage().negatives);
  const Stage target{omega.stage().negatives - 1, omega.stage().positives};
  ExteriorElement out(target, omega.degree(), Side::Dual, omega.field());
  for (const auto& [key, value] : omega.coeffs()) {
    if (key.contains(dropped)) continue;
    out.set_coefficient(key, value);
  }
  return out;
}

ExteriorElement map_theta(const ExteriorElement& omega) {
  if (omega.side() != Side::Dual) {
    throw std::invalid_argument("map_theta acts on dual elements");
  }
  if (omega.stage().positives < 2 || omega.degree() < 1) {
    throw std::invalid_argument("map_theta needs positives >= 2 and degree >= 1");
  }
  const SignedIndex contracted =
      static_cast<SignedIndex>(omega.stage().positives);
  const ExteriorElement inner = interior(contracted, omega);
  const Stage target{omega.stage().negatives, omega.stage().positives - 1};
  ExteriorElement out(target, inner.degree(), Side::Dual, omega.field());
  for (const auto& [key, value] : inner.coeffs()) out.set_coefficient(key, value);
  return out;
}

}  // namespace grstage

#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace htc {

/// Z-linear combination of labels. Zero coefficients are never stored, so
/// two sums are equal iff their maps are equal.
template <typename Key>
class FormalSum {
 public:
  using Coefficient = std::int64_t;
  using Map = std::map<Key, Coefficient>;

  FormalSum() = default;
  explicit FormalSum(const Key& key, Coefficient c = 1) { add(key, c); }

  FormalSum& add(const Key& key, Coefficient c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  Coefficient coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool all_nonnegative() const {
    for (const auto& [key, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  Coefficient total() const {
    Coefficient t = 0;
    for (const auto& [key, c] : terms_) t += c;
    return t;
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [key, c] : o.terms_) add(key, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [key, c] : o.terms_) add(key, -c);
    return *this;
  }
  FormalSum& operator*=(Coefficient k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [key, c] : terms_) c *= k;
    }
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(Coefficient k, FormalSum a) { return a *= k; }
  friend FormalSum operator-(FormalSum a) { return a *= -1; }
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

  /// Needs `std::string to_string(const Key&)` or a member `to_string()`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      const Coefficient a = c < 0 ? -c : c;
      if (a != 1) os << a << "·";
      os << "[" << key.to_string() << "]";
    }
    return os.str();
  }

 private:
  Map terms_;
};

}  // namespace htc

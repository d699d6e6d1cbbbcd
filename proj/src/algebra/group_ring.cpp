#include "qf/algebra/group_ring.hpp"

#include <numeric>
#include <sstream>

#include "qf/algebra/modular.hpp"
#include "qf/error.hpp"

namespace qf {

GroupRingValue::GroupRingValue(std::uint64_t q) : q_(q) {
  if (q == 0) fail(ErrorCode::InvalidArgument, "group order must be positive");
  c_.assign(q, 0);
}

GroupRingValue GroupRingValue::constant(std::uint64_t q, std::uint64_t count) {
  GroupRingValue v(q);
  v.c_[0] = count;
  return v;
}

std::uint64_t GroupRingValue::total() const { return std::accumulate(c_.begin(), c_.end(), std::uint64_t{0}); }

void GroupRingValue::add_term(std::int64_t exponent, std::uint64_t count) { c_[mod_reduce(exponent, q_)] += count; }

GroupRingValue& GroupRingValue::operator+=(const GroupRingValue& other) {
  if (other.q_ != q_) fail(ErrorCode::InvalidArgument, "group ring values over different groups");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

GroupRingValue operator*(const GroupRingValue& a, const GroupRingValue& b) {
  if (a.q_ != b.q_) fail(ErrorCode::InvalidArgument, "group ring values over different groups");
  GroupRingValue r(a.q_);
  for (std::size_t i = 0; i < a.q_; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < a.q_; ++j) r.c_[(i + j) % a.q_] += a.c_[i] * b.c_[j];
  }
  return r;
}

std::string GroupRingValue::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < c_.size(); ++n) {
    if (c_[n] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (n == 0) {
      os << c_[n];
      continue;
    }
    if (c_[n] != 1) os << c_[n];
    os << "t";
    if (n > 1) os << "^" << n;
  }
  return first ? "0" : os.str();
}

std::string to_string(const std::vector<GroupRingValue>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace qf

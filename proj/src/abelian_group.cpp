#include "rmac/abelian_group.hpp"

#include <algorithm>
#include <map>

#include "rmac/errors.hpp"

namespace rmac {
namespace {

// Adds Z/c to a divisibility chain using Z/a ⊕ Z/b ≅ Z/gcd ⊕ Z/lcm.
void insert_cyclic(std::vector<Integer>& chain, Integer c) {
  for (std::size_t i = chain.size(); i-- > 0 && c != Integer(1);) {
    Integer g = gcd(chain[i], c);
    chain[i] = lcm(chain[i], c);
    c = std::move(g);
  }
  if (c != Integer(1)) chain.insert(chain.begin(), c);
}

std::vector<std::pair<Integer, unsigned>> factor_small(const Integer& v) {
  std::vector<std::pair<Integer, unsigned>> out;
  if (!v.fits_int64() || v.to_int64() > (std::int64_t{1} << 40)) {
    out.emplace_back(v, 1);
    return out;
  }
  std::int64_t x = v.to_int64();
  for (std::int64_t p = 2; p * p <= x; ++p) {
    unsigned e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e) out.emplace_back(Integer(p), e);
  }
  if (x > 1) out.emplace_back(Integer(x), 1);
  return out;
}

}  // namespace

FGAbelianGroup::FGAbelianGroup(std::size_t rank, const std::vector<Integer>& cyclic_orders)
    : rank_(rank) {
  for (const auto& c : cyclic_orders) {
    if (c.sign() <= 0) throw InvalidArgument("cyclic order must be positive, got " + c.to_string());
    insert_cyclic(factors_, c);
  }
}

FGAbelianGroup FGAbelianGroup::cyclic(const Integer& order) {
  if (order.is_zero()) return free(1);
  return FGAbelianGroup(0, {order});
}

Integer FGAbelianGroup::torsion_order() const {
  Integer t(1);
  for (const auto& f : factors_) t *= f;
  return t;
}

std::vector<std::pair<Integer, std::size_t>> FGAbelianGroup::primary_summands() const {
  std::map<Integer, std::size_t> counts;
  for (const auto& f : factors_)
    for (const auto& [p, e] : factor_small(f)) counts[Integer::pow(p, e)]++;
  return {counts.begin(), counts.end()};
}

FGAbelianGroup operator+(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  FGAbelianGroup s = a;
  s.rank_ += b.rank_;
  for (const auto& f : b.factors_) insert_cyclic(s.factors_, f);
  return s;
}

FGAbelianGroup multiple(const FGAbelianGroup& g, std::size_t copies) {
  FGAbelianGroup s;
  for (std::size_t i = 0; i < copies; ++i) s += g;
  return s;
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (rank_ == 1) parts.push_back("Z");
  if (rank_ > 1) parts.push_back("Z^" + std::to_string(rank_));
  for (const auto& f : factors_) parts.push_back("Z/" + f.to_string());
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " ⊕ " + parts[i];
  return s;
}

std::string FGAbelianGroup::to_primary_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (rank_ == 1) parts.push_back("Z");
  if (rank_ > 1) parts.push_back("Z^" + std::to_string(rank_));
  for (const auto& [q, m] : primary_summands()) {
    std::string z = "Z_" + q.to_string();
    parts.push_back(m == 1 ? z : "(" + z + ")^" + std::to_string(m));
  }
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " ⊕ " + parts[i];
  return s;
}

std::string FGAbelianGroup::to_sage_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (rank_ > 4) {
    parts.push_back("Z^" + std::to_string(rank_));
  } else {
    for (std::size_t i = 0; i < rank_; ++i) parts.push_back("Z");
  }
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (j - i > 4) {
      parts.push_back("C" + factors_[i].to_string() + "^" + std::to_string(j - i));
    } else {
      for (std::size_t k = i; k < j; ++k) parts.push_back("C" + factors_[i].to_string());
    }
    i = j;
  }
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
  return s;
}

}  // namespace rmac

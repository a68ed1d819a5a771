#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tjurina {

/// Upper bound on the number of variables of a ring (local x's plus the
/// auxiliary alphas of the mixed ring).
inline constexpr std::size_t kMaxVars = 32;

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense exponent vector. Entries past the ring size are always zero, so the
/// arithmetic below never needs to know the ring.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() { exps_.fill(0); }

  static Monomial variable(std::size_t index, Exponent power = 1) {
    Monomial m;
    m.exps_.at(index) = power;
    return m;
  }

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e) { exps_.at(i) = e; }

  int degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
  }
  int degree(std::size_t begin, std::size_t end) const {
    int d = 0;
    for (std::size_t i = begin; i < end; ++i) d += exps_[i];
    return d;
  }
  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(exps_[i]) + other.exps_[i];
      if (s > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
      r.exps_[i] = Exponent(s);
    }
    return r;
  }

  // Caller guarantees other | *this.
  Monomial operator/(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = Exponent(exps_[i] - other.exps_[i]);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }
  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  bool operator==(const Monomial&) const = default;

 private:
  std::array<Exponent, kMaxVars> exps_;
};

enum class VarMode { Local, Global };

struct Variable {
  std::string name;
  VarMode mode = VarMode::Local;
  bool operator==(const Variable&) const = default;
};

/// Variable roster plus the block monomial order it induces. A Local block is
/// ordered by negative degree reverse lexicographic order (every variable is
/// smaller than 1), a Global block by degree reverse lexicographic order.
/// Blocks are maximal runs of equal mode and are compared left to right.
class RingContext {
 public:
  struct Block {
    std::size_t begin;
    std::size_t end;
    VarMode mode;
  };

  explicit RingContext(std::vector<Variable> vars) : vars_(std::move(vars)) {
    if (vars_.size() > kMaxVars)
      throw std::invalid_argument("too many variables (limit " + std::to_string(kMaxVars) + ")");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto& name = vars_[i].name;
      if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
        throw std::invalid_argument("invalid variable name '" + name + "'");
      for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw std::invalid_argument("invalid variable name '" + name + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[j].name == name) throw std::invalid_argument("duplicate variable name '" + name + "'");
      if (blocks_.empty() || blocks_.back().mode != vars_[i].mode)
        blocks_.push_back({i, i + 1, vars_[i].mode});
      else
        blocks_.back().end = i + 1;
    }
  }

  static std::shared_ptr<const RingContext> local(const std::vector<std::string>& names) {
    std::vector<Variable> vars;
    for (const auto& n : names) vars.push_back({n, VarMode::Local});
    return std::make_shared<const RingContext>(std::move(vars));
  }

  /// Global alphas first, then the local variables.
  static std::shared_ptr<const RingContext> mixed(const std::vector<std::string>& alphas,
                                                  const std::vector<std::string>& locals) {
    std::vector<Variable> vars;
    for (const auto& n : alphas) vars.push_back({n, VarMode::Global});
    for (const auto& n : locals) vars.push_back({n, VarMode::Local});
    return std::make_shared<const RingContext>(std::move(vars));
  }

  std::size_t size() const { return vars_.size(); }
  const Variable& var(std::size_t i) const { return vars_.at(i); }
  const std::vector<Variable>& vars() const { return vars_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::string& name(std::size_t i) const { return vars_.at(i).name; }
  VarMode mode(std::size_t i) const { return vars_.at(i).mode; }

  bool is_pure_local() const {
    return std::all_of(vars_.begin(), vars_.end(), [](const Variable& v) { return v.mode == VarMode::Local; });
  }
  bool is_mixed() const { return blocks_.size() > 1; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    return std::nullopt;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& v : vars_) out.push_back(v.name);
    return out;
  }

  /// Sum of exponents over the Global (resp. Local) variables.
  int global_degree(const Monomial& m) const { return mode_degree(m, VarMode::Global); }
  int local_degree(const Monomial& m) const { return mode_degree(m, VarMode::Local); }

  /// Three-way comparison under the block order: 1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    for (const auto& blk : blocks_) {
      int da = a.degree(blk.begin, blk.end);
      int db = b.degree(blk.begin, blk.end);
      if (da != db) {
        bool a_bigger = blk.mode == VarMode::Global ? da > db : da < db;
        return a_bigger ? 1 : -1;
      }
      for (std::size_t i = blk.end; i-- > blk.begin;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  bool operator==(const RingContext& other) const { return vars_ == other.vars_; }

 private:
  int mode_degree(const Monomial& m, VarMode mode) const {
    int d = 0;
    for (const auto& blk : blocks_)
      if (blk.mode == mode) d += m.degree(blk.begin, blk.end);
    return d;
  }

  std::vector<Variable> vars_;
  std::vector<Block> blocks_;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
  if (!same_ring(a, b)) throw ContextMismatch(std::string(what) + ": ring context mismatch");
}

}  // namespace tjurina

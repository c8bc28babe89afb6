#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opuc/errors.hpp"
#include "opuc/scalar.hpp"

namespace opuc {

// j -> alpha_j with the convention alpha_{-1} = -1. Values are produced by
// a deterministic rule and memoised; the cache is shared between copies and
// is safe for concurrent readers.
template <Scalar T>
class VerblunskySequence {
 public:
  using Rule = std::function<T(int)>;

  VerblunskySequence(std::string source, Rule rule)
      : source_(std::move(source)), state_(std::make_shared<State>(std::move(rule))) {}

  // Symbols a_j, ab_j kept free; only meaningful in symbolic mode.
  static VerblunskySequence generic()
    requires std::same_as<T, Expr>
  {
    return VerblunskySequence("generic", [](int j) { return Expr::alpha(j); });
  }

  static VerblunskySequence from_table(std::vector<T> table) {
    auto shared = std::make_shared<const std::vector<T>>(std::move(table));
    return VerblunskySequence("table", [shared](int j) -> T {
      if (j >= static_cast<int>(shared->size()))
        throw std::out_of_range("alpha_" + std::to_string(j) +
                                " requested beyond the explicit table of " +
                                std::to_string(shared->size()));
      return (*shared)[j];
    });
  }

  const std::string& source() const { return source_; }

  T alpha(int j) const {
    if (j < -1) throw std::out_of_range("alpha index below -1");
    if (j == -1) return T(-1);
    return entry(j).alpha;
  }
  T alpha_bar(int j) const {
    if (j == -1) return T(-1);
    return entry(j).alpha_bar;
  }
  // 1 - |alpha_j|^2
  T rho(int j) const {
    if (j == -1) return T(0);
    return entry(j).rho;
  }
  bool is_zero_at(int j) const { return j >= 0 && opuc::is_zero(entry(j).alpha); }

 private:
  struct Entry {
    T alpha, alpha_bar, rho;
  };
  struct State {
    explicit State(Rule r) : rule(std::move(r)) {}
    Rule rule;
    std::shared_mutex mutex;
    std::map<int, Entry> cache;
  };

  Entry entry(int j) const {
    {
      std::shared_lock lock(state_->mutex);
      auto it = state_->cache.find(j);
      if (it != state_->cache.end()) return it->second;
    }
    T a = state_->rule(j);
    if constexpr (ScalarTraits<T>::mode == Mode::numeric) {
      if (!(std::abs(a) < 1.0)) throw OutsideDisk(j);
    }
    T ab = conjugate(a);
    Entry e{a, ab, T(1) - a * ab};
    std::unique_lock lock(state_->mutex);
    return state_->cache.try_emplace(j, std::move(e)).first->second;
  }

  std::string source_;
  std::shared_ptr<State> state_;
};

}  // namespace opuc

/*
 * Copyright 2026 The pqcalc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PQCALC_SRC_TAIL_MONITOR_HPP
#define PQCALC_SRC_TAIL_MONITOR_HPP

#include <optional>

#include "pqcalc/scalar.hpp"

namespace pqcalc::detail {

// Stop rule shared by the term loops.  Tracks a short window of observed
// |t_n / t_{n-1}| values together with the analytic limit of that ratio
// (when the caller knows it); the tail estimate is the geometric bound at
// the max of the two, which covers ratios approaching their limit from
// either side.  Persistently non-contracting ratios raise DivergenceError.
class TailMonitor {
 public:
  TailMonitor(const Scalar& tail_target, std::optional<Scalar> limit_ratio)
      : target_(tail_target),
        limit_(limit_ratio ? abs(*limit_ratio) : Scalar(0)) {}

  void observe(const Scalar& ratio) {
    Scalar r = abs(ratio);
    if (Scalar::cmp(r, Scalar(1)) >= 0) {
      if (++non_contracting_ > kPatience) {
        throw DivergenceError("series terms stopped contracting");
      }
    } else {
      non_contracting_ = 0;
    }
    window_[seen_ % kWindow] = std::move(r);
    ++seen_;
  }

  // True once the geometric tail bound at the current ratio estimate
  // drops below target * (|sum| + |term|); the bound is then available
  // from bound().
  bool can_stop(const Scalar& term, const Scalar& sum) {
    if (seen_ < kWindow) return false;
    Scalar r = limit_;
    for (const Scalar& w : window_) {
      if (Scalar::cmp(w, r) > 0) r = w;
    }
    if (Scalar::cmp(r, Scalar(1)) >= 0) return false;
    bound_ = geometric_tail_bound(term, r);
    return Scalar::cmp(bound_, target_ * (abs(sum) + abs(term))) <= 0;
  }

  const Scalar& bound() const { return bound_; }

 private:
  static constexpr int kWindow = 3;
  static constexpr int kPatience = 25;

  Scalar target_;
  Scalar limit_;
  Scalar window_[kWindow] = {Scalar(0), Scalar(0), Scalar(0)};
  long seen_ = 0;
  int non_contracting_ = 0;
  Scalar bound_ = Scalar(0);
};

}  // namespace pqcalc::detail

#endif  // PQCALC_SRC_TAIL_MONITOR_HPP

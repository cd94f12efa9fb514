#pragma once

// Prefix partitioned generation in RGC order, constant amortized time.
//
// One recursive call per prefix extension; the call owning position k writes
// s_k on entry and covers the defining set of the shorter prefix in the
// direction given by its parity parameter. The shared buffer is allocated
// once per run.

#include <concepts>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rgs/sequence.hpp"

namespace rgs {

// Recursive-call accounting for a generator run.
struct CatMetrics {
  std::uint64_t total_calls = 0;
  std::uint64_t outputs = 0;
  // calls that initiated exactly one recursive call
  std::uint64_t degree_one_calls = 0;
  // recursive calls initiated by the main call
  std::uint64_t root_degree = 0;
  int max_depth = 0;
};

// Invoked with a read-only view of the shared buffer for every completed
// sequence. The buffer is reused across emissions; copy before retaining.
// A visitor returning bool can stop the run early by returning false.
template <class V>
concept SequenceVisitor = std::invocable<V&, SeqView>;

// Call-tree hook: enter() receives the buffer slice owned by the call (the
// current prefix here, the current suffix in gen_corgc), leave() unwinds.
template <class O>
concept CallObserver = requires(O& o, int k, SeqView v) {
  o.enter(k, v);
  o.leave();
};

struct NullObserver {
  void enter(int, SeqView) {}
  void leave() {}
};

namespace detail {

template <class V>
bool invoke_visitor(V& v, SeqView s) {
  if constexpr (std::convertible_to<std::invoke_result_t<V&, SeqView>, bool>) {
    return static_cast<bool>(std::invoke(v, s));
  } else {
    std::invoke(v, s);
    return true;
  }
}

template <ClassId C, class Visitor, class Observer>
class PrefixGen {
 public:
  PrefixGen(int n, Visitor& visit, Observer& observe)
      : n_(n), buf_(static_cast<std::size_t>(n) + 1), visit_(visit), observe_(observe) {}

  CatMetrics run() {
    metrics_.root_degree = call(1, 0, 0, 0);
    return metrics_;
  }

 private:
  // omega of the prefix s_1..s_p, from w = stat(s_1..s_{p-1}).
  int omega(int w, int p) const {
    if constexpr (C == ClassId::Subexcedant) {
      return p;
    } else if constexpr (C == ClassId::Ascent) {
      return p > 1 && buf_[p] > buf_[p - 1] ? w + 2 : w + 1;
    } else if constexpr (C == ClassId::Rgf) {
      return p > 1 && buf_[p] > w ? w + 2 : w + 1;
    } else {
      return buf_[p] + 1;
    }
  }

  // Returns the number of recursive calls this call initiated.
  std::uint64_t call(int k, Digit x, int dir, int v) {
    ++metrics_.total_calls;
    if (k > metrics_.max_depth) metrics_.max_depth = k;
    buf_[k] = x;
    observe_.enter(k, SeqView(buf_.data() + 1, static_cast<std::size_t>(k)));
    std::uint64_t degree = 0;
    if (k == n_) {
      ++metrics_.outputs;
      if (!invoke_visitor(visit_, SeqView(buf_.data() + 1, static_cast<std::size_t>(n_))))
        stopped_ = true;
    } else {
      const int u = omega(v, k);
      if (dir % 2 == 0) {
        for (int i = 0; i <= u && !stopped_; ++i) {
          ++degree;
          call(k + 1, i, i, u - 1);
        }
      } else {
        for (int i = u; i >= 0 && !stopped_; --i) {
          ++degree;
          call(k + 1, i, i + 1, u - 1);
        }
      }
      if (degree == 1) ++metrics_.degree_one_calls;
    }
    observe_.leave();
    return degree;
  }

  int n_;
  std::vector<Digit> buf_;  // 1-indexed; buf_[0] unused
  Visitor& visit_;
  Observer& observe_;
  CatMetrics metrics_;
  bool stopped_ = false;
};

}  // namespace detail

// Generates every length-n member of the class in strictly increasing RGC
// order and returns the call metrics.
template <SequenceVisitor Visitor, CallObserver Observer>
CatMetrics gen_rgc(ClassId cls, int n, Visitor&& visit, Observer&& observe) {
  if (n < 1) throw std::invalid_argument("gen_rgc: n must be >= 1");
  using V = std::remove_reference_t<Visitor>;
  using O = std::remove_reference_t<Observer>;
  switch (cls) {
    case ClassId::Subexcedant:
      return detail::PrefixGen<ClassId::Subexcedant, V, O>(n, visit, observe).run();
    case ClassId::Ascent:
      return detail::PrefixGen<ClassId::Ascent, V, O>(n, visit, observe).run();
    case ClassId::Rgf:
      return detail::PrefixGen<ClassId::Rgf, V, O>(n, visit, observe).run();
    case ClassId::Staircase:
      return detail::PrefixGen<ClassId::Staircase, V, O>(n, visit, observe).run();
    case ClassId::Descent:
      break;
  }
  throw std::invalid_argument("gen_rgc: descent sequences are not supported");
}

template <SequenceVisitor Visitor>
CatMetrics gen_rgc(ClassId cls, int n, Visitor&& visit) {
  NullObserver observe;
  return gen_rgc(cls, n, visit, observe);
}

}  // namespace rgs

#pragma once

#include <stdexcept>
#include <string>

namespace cig {

enum class Errc {
  CycleDetected,
  InvalidVertexId,
  DuplicateEdge,
  DeadVertex,
  CapacityExceeded,
  MemoLimitExceeded,
  InvalidComponentCount,
  CapExceeded,
  EmptyState,
  IllegalStrategyMove,
  LayoutMismatch,
  NotToMove,
  ConservationViolated,
  PreconditionUnmet,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace cig

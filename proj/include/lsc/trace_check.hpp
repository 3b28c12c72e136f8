#pragma once

#include <string>

#include "lsc/rewrite.hpp"

namespace lsc {

// Replays a trace from scratch: re-applies every step with a direct
// transcription of the rewrite rules (independent of the engine's matchers),
// checks the side conditions, the chain joints, and both endpoints, all
// modulo alpha. Backward steps are replayed by applying the rule to the
// step's "after" term and expecting its "before".
//
// Returns false and fills *why (if given) on the first defect.
bool validate_trace(const Term& from, const Term& to, const Trace& trace,
                    std::string* why = nullptr);

}  // namespace lsc

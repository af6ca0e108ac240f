#ifndef ILX_VALIDATE_HPP
#define ILX_VALIDATE_HPP

#include <vector>

#include "ilx/diagnostic.hpp"
#include "ilx/graph.hpp"
#include "ilx/model.hpp"

namespace ilx {

// All conformance findings for a built lexicon, sorted. Never fails fast.
std::vector<Diagnostic> validate_lexicon(const LexiconModel& model);

enum class GraphCheckMode { Lenient, Strict };

// Closed-world checks over a saturated graph: missing obligatory fillers
// (E110), filler typing in strict mode (E111), and leftover duplicate
// fillers of max-1 slots (E199, a reasoner bug).
std::vector<Diagnostic> validate_graph(const LexiconModel& model, const SemGraph& saturated,
                                       GraphCheckMode mode);

}  // namespace ilx

#endif  // ILX_VALIDATE_HPP

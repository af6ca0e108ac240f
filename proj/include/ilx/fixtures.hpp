#ifndef ILX_FIXTURES_HPP
#define ILX_FIXTURES_HPP

#include <string_view>
#include <vector>

#include "ilx/graph.hpp"
#include "ilx/model.hpp"

namespace ilx {

// Bundled copies of fixtures/ilexicon.ilx and fixtures/graphs.ilx.
std::string_view fixture_lexicon_text();
std::string_view fixture_graphs_text();

LexiconModel fixture_lexicon();
// Graphs in file order (JohnKillsMary first).
std::vector<SemGraph> fixture_graphs();

}  // namespace ilx

#endif  // ILX_FIXTURES_HPP

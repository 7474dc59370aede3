#ifndef BPGLAB_JSON_IO_HPP
#define BPGLAB_JSON_IO_HPP

#include <string>

#include "bpglab/letters.hpp"
#include "bpglab/parameters.hpp"

namespace bpglab {

/// JSON forms:
///   LetterSystem: {"alphabet":[...], "decoder":[["x","y"],...], "word":[...]}
///                 plus "vertex_map":[...] when tracked
///   KGraph:       {"k":..., "edges":[[i,j],...]} with loops as [i,i]
///   WordSource:   {"alphabet":[...], "prefix":"..", "period":".."}
/// Word-source letters must be single characters so prefix/period read as
/// plain strings.

std::string letter_system_to_json(const LetterSystem& sys);
LetterSystem letter_system_from_json(const std::string& text);

std::string kgraph_to_json(const KGraph& k);
KGraph kgraph_from_json(const std::string& text);

std::string word_source_to_json(const WordSource& src);
WordSource word_source_from_json(const std::string& text);

}  // namespace bpglab

#endif

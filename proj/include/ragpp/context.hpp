#pragma once
// Deterministic assembly of retrieved documents into the prompt's doc block.

#include <string>
#include <vector>

#include "ragpp/types.hpp"

namespace ragpp {

struct ContextOptions {
    // Per-document character cap applied to the folded text; 0 = unlimited.
    size_t per_doc_char_cap = 0;
    // Whether titles are folded in as a leading sentence.
    bool include_titles = true;
};

// Builds "Doc 1: {text}\n\nDoc 2: {text}..." over the first min(k, |docs|)
// documents. Throws DataError when docs is empty.
ContextBundle assemble_context(const std::string& qid, const std::vector<Document>& docs,
                               uint32_t k, const ContextOptions& opts = {});

}  // namespace ragpp

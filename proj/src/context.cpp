#include "ragpp/context.hpp"

#include <algorithm>

#include "ragpp/errors.hpp"

namespace ragpp {

ContextBundle assemble_context(const std::string& qid, const std::vector<Document>& docs,
                               uint32_t k, const ContextOptions& opts) {
    if (docs.empty()) throw DataError("assemble_context: no documents for qid '" + qid + "'");
    if (k == 0) throw DataError("assemble_context: k must be positive");

    ContextBundle bundle;
    bundle.qid = qid;
    bundle.k = k;
    size_t n = std::min<size_t>(k, docs.size());
    bundle.docs.assign(docs.begin(), docs.begin() + n);

    std::string out;
    for (size_t i = 0; i < n; ++i) {
        Document d = bundle.docs[i];
        if (!opts.include_titles) d.title.reset();
        std::string text = d.folded_text();
        if (opts.per_doc_char_cap > 0 && text.size() > opts.per_doc_char_cap) {
            text.resize(opts.per_doc_char_cap);
        }
        if (i > 0) out += "\n\n";
        out += "Doc " + std::to_string(i + 1) + ": " + text;
    }
    bundle.concatenated = std::move(out);
    return bundle;
}

}  // namespace ragpp

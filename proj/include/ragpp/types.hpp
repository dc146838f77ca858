#pragma once
// Domain types shared across the toolkit: queries, documents, ranked lists,
// embeddings, gold answers and externally produced per-query scores.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ragpp {

struct Query {
    std::string qid;   // non-empty, unique within a collection
    std::string text;  // non-empty
};

struct Document {
    std::string docno;  // non-empty, unique
    std::optional<std::string> title;
    std::string body;  // may be empty (flagged at load, not rejected)

    // Body with the title folded in as a leading sentence, as used for
    // context assembly and readability scoring.
    std::string folded_text() const {
        if (title && !title->empty()) return *title + ". " + body;
        return body;
    }
};

struct ScoredDoc {
    std::string docno;
    uint32_t rank = 0;  // 1-based, consecutive after normalization
    double score = 0.0;
};

// Per-query retrieval results. Entries are kept sorted by score descending
// with ties broken by docno ascending; ranks are rewritten 1..n.
struct RankedList {
    std::string qid;
    std::vector<ScoredDoc> entries;
};

struct EmbeddingRecord {
    std::string id;  // qid or docno
    std::vector<float> vector;
};

// Immutable store of embeddings sharing one dimension.
struct EmbeddingStore {
    size_t dimension = 0;
    std::map<std::string, std::vector<float>> by_id;

    const std::vector<float>* find(const std::string& id) const {
        auto it = by_id.find(id);
        return it == by_id.end() ? nullptr : &it->second;
    }
};

struct GoldAnswers {
    std::string qid;
    std::vector<std::string> answers;  // non-empty, each non-empty after trimming
};

// Carrier for per-query scores produced outside the toolkit (e.g. learned
// QPP or document-quality models).
struct ExternalScore {
    std::string qid;
    std::string feature_name;
    double value = 0.0;
};

struct ExternalScoreStore {
    // (feature_name, qid) -> value
    std::map<std::string, std::map<std::string, double>> values;

    const double* find(const std::string& qid, const std::string& feature) const {
        auto f = values.find(feature);
        if (f == values.end()) return nullptr;
        auto q = f->second.find(qid);
        return q == f->second.end() ? nullptr : &q->second;
    }
};

// The top-min(k, available) documents for a query plus their deterministic
// concatenation used as the prompt's doc block.
struct ContextBundle {
    std::string qid;
    uint32_t k = 0;
    std::vector<Document> docs;
    std::string concatenated;  // "Doc 1: ...\n\nDoc 2: ..." over docs
};

}  // namespace ragpp

#pragma once
// JSONL loaders for the corpus-side input files. One object per line; every
// violation is reported with the file name and line number. Duplicate ids
// are validation errors, empty files load as empty collections with a
// warning.

#include <map>
#include <string>
#include <vector>

#include "ragpp/types.hpp"

namespace ragpp {

using WarningSink = std::vector<std::string>;

// queries.jsonl: {"qid": ..., "text": ...}
std::map<std::string, Query> load_queries_jsonl(const std::string& path,
                                                WarningSink* warnings = nullptr);

// docs.jsonl: {"docno": ..., "title"?: ..., "text": ...}; empty bodies are
// flagged via warnings, not rejected.
std::map<std::string, Document> load_docs_jsonl(const std::string& path,
                                                WarningSink* warnings = nullptr);

// gold.jsonl: {"qid": ..., "answers": [...]}
std::map<std::string, GoldAnswers> load_gold_jsonl(const std::string& path,
                                                   WarningSink* warnings = nullptr);

// external_scores.jsonl: {"qid": ..., "feature_name": ..., "value": ...}
ExternalScoreStore load_external_scores_jsonl(const std::string& path,
                                              WarningSink* warnings = nullptr);

// embeddings.jsonl: {"id": ..., "vector": [...]}; all vectors must share one
// dimension and contain only finite components.
EmbeddingStore load_embeddings_jsonl(const std::string& path, WarningSink* warnings = nullptr);

// embeddings.bin: magic "EMB1", u32 dimension, u32 count, then per record
// u16 id length, id bytes, dimension little-endian 32-bit floats.
EmbeddingStore load_embeddings_bin(const std::string& path);
void write_embeddings_bin(const std::string& path, const EmbeddingStore& store);

// Dispatches on the file's magic bytes, so either encoding works for any
// configured embeddings path.
EmbeddingStore load_embeddings(const std::string& path, WarningSink* warnings = nullptr);

// dev_qids.txt / test_qids.txt: one qid per line, '#' comments allowed.
std::vector<std::string> load_qid_list(const std::string& path);

}  // namespace ragpp

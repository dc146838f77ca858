#pragma once
// TREC run format: "qid Q0 docno rank score tag", whitespace separated.
// Parsed lists are re-sorted by (score desc, docno asc) and ranks rewritten
// 1..n; the rank/score fields on disk may be out of order.

#include <map>
#include <string>
#include <vector>

#include "ragpp/types.hpp"

namespace ragpp {

// Parses run-format text. `source_name` is used in error messages.
// Throws ParseError on malformed lines, DataError on duplicate (qid, docno).
std::map<std::string, RankedList> parse_run_file(const std::string& text,
                                                 const std::string& source_name = "<run>");

// Reads and parses a run file from disk.
std::map<std::string, RankedList> load_run_file(const std::string& path);

// Serializes lists back to run format (round-trips through parse_run_file).
std::string serialize_run_file(const std::map<std::string, RankedList>& runs,
                               const std::string& tag = "ragpp");

// First min(k, n) entries in rank order. Throws DataError on an empty list.
std::vector<ScoredDoc> topk(const RankedList& list, uint32_t k);

// Re-sorts entries by (score desc, docno asc) and rewrites ranks 1..n.
void normalize_ranked_list(RankedList& list);

}  // namespace ragpp

#include "ragpp/run_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "ragpp/errors.hpp"
#include "ragpp/strings.hpp"

namespace ragpp {

namespace {

bool parse_double(const std::string& s, double& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_rank(const std::string& s, long& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

void normalize_ranked_list(RankedList& list) {
    std::sort(list.entries.begin(), list.entries.end(), [](const ScoredDoc& a, const ScoredDoc& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.docno < b.docno;
    });
    for (size_t i = 0; i < list.entries.size(); ++i) {
        list.entries[i].rank = static_cast<uint32_t>(i + 1);
    }
}

std::map<std::string, RankedList> parse_run_file(const std::string& text,
                                                 const std::string& source_name) {
    std::map<std::string, RankedList> runs;
    std::map<std::string, std::set<std::string>> seen_docnos;

    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> fields = split_ws(line);
        if (fields.empty()) continue;  // blank lines tolerated
        if (fields.size() != 6) {
            throw ParseError(source_name, line_no,
                             "expected 6 whitespace-separated fields (qid Q0 docno rank score "
                             "tag), got " +
                                 std::to_string(fields.size()));
        }
        const std::string& qid = fields[0];
        const std::string& docno = fields[2];
        long rank = 0;
        if (!parse_rank(fields[3], rank)) {
            throw ParseError(source_name, line_no, "non-numeric rank field '" + fields[3] + "'");
        }
        double score = 0.0;
        if (!parse_double(fields[4], score)) {
            throw ParseError(source_name, line_no, "non-numeric score field '" + fields[4] + "'");
        }
        if (!std::isfinite(score)) {
            throw ParseError(source_name, line_no, "non-finite score for docno '" + docno + "'");
        }
        if (!seen_docnos[qid].insert(docno).second) {
            throw DataError(source_name + ": duplicate docno '" + docno + "' for qid '" + qid +
                            "' (line " + std::to_string(line_no) + ")");
        }
        auto& list = runs[qid];
        list.qid = qid;
        list.entries.push_back(ScoredDoc{docno, static_cast<uint32_t>(std::max(1L, rank)), score});
    }

    for (auto& [qid, list] : runs) normalize_ranked_list(list);
    return runs;
}

std::map<std::string, RankedList> load_run_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open run file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_run_file(buf.str(), path);
}

std::string serialize_run_file(const std::map<std::string, RankedList>& runs,
                               const std::string& tag) {
    std::string out;
    for (const auto& [qid, list] : runs) {
        for (const auto& e : list.entries) {
            out += qid;
            out += " Q0 ";
            out += e.docno;
            out += ' ';
            out += std::to_string(e.rank);
            out += ' ';
            out += format_double(e.score);
            out += ' ';
            out += tag;
            out += '\n';
        }
    }
    return out;
}

std::vector<ScoredDoc> topk(const RankedList& list, uint32_t k) {
    if (list.entries.empty()) {
        throw DataError("query '" + list.qid + "' has no retrieval results");
    }
    size_t n = std::min<size_t>(k, list.entries.size());
    return std::vector<ScoredDoc>(list.entries.begin(), list.entries.begin() + n);
}

}  // namespace ragpp

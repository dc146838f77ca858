#include "ragpp/jsonl.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <json.hpp>
#include <set>

#include "ragpp/errors.hpp"
#include "ragpp/strings.hpp"

namespace ragpp {

using nlohmann::json;

namespace {

// Calls fn(line_no, parsed_object) for every non-blank line.
template <typename Fn>
void for_each_jsonl(const std::string& path, WarningSink* warnings, Fn&& fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::string line;
    size_t line_no = 0;
    size_t records = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(path, line_no, std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object()) throw ParseError(path, line_no, "line is not a JSON object");
        fn(line_no, obj);
        ++records;
    }
    if (records == 0 && warnings) warnings->push_back(path + ": file is empty");
}

std::string require_string(const json& obj, const char* field, const std::string& path,
                           size_t line_no) {
    auto it = obj.find(field);
    if (it == obj.end())
        throw ParseError(path, line_no, std::string("missing field '") + field + "'");
    if (!it->is_string())
        throw ParseError(path, line_no, std::string("field '") + field + "' must be a string");
    return it->get<std::string>();
}

double require_number(const json& obj, const char* field, const std::string& path,
                      size_t line_no) {
    auto it = obj.find(field);
    if (it == obj.end())
        throw ParseError(path, line_no, std::string("missing field '") + field + "'");
    if (!it->is_number())
        throw ParseError(path, line_no, std::string("field '") + field + "' must be a number");
    return it->get<double>();
}

}  // namespace

std::map<std::string, Query> load_queries_jsonl(const std::string& path, WarningSink* warnings) {
    std::map<std::string, Query> out;
    for_each_jsonl(path, warnings, [&](size_t line_no, const json& obj) {
        Query q;
        q.qid = require_string(obj, "qid", path, line_no);
        q.text = require_string(obj, "text", path, line_no);
        if (q.qid.empty()) throw ParseError(path, line_no, "qid must be non-empty");
        if (q.text.empty()) throw ParseError(path, line_no, "query text must be non-empty");
        if (!out.emplace(q.qid, q).second)
            throw DataError(path + ": duplicate qid '" + q.qid + "' (line " +
                            std::to_string(line_no) + ")");
    });
    return out;
}

std::map<std::string, Document> load_docs_jsonl(const std::string& path, WarningSink* warnings) {
    std::map<std::string, Document> out;
    for_each_jsonl(path, warnings, [&](size_t line_no, const json& obj) {
        Document d;
        d.docno = require_string(obj, "docno", path, line_no);
        if (d.docno.empty()) throw ParseError(path, line_no, "docno must be non-empty");
        if (auto it = obj.find("title"); it != obj.end() && !it->is_null()) {
            if (!it->is_string()) throw ParseError(path, line_no, "field 'title' must be a string");
            d.title = it->get<std::string>();
        }
        d.body = require_string(obj, "text", path, line_no);
        if (d.body.empty() && warnings)
            warnings->push_back(path + ":" + std::to_string(line_no) + ": docno '" + d.docno +
                                "' has an empty body");
        if (!out.emplace(d.docno, d).second)
            throw DataError(path + ": duplicate docno '" + d.docno + "' (line " +
                            std::to_string(line_no) + ")");
    });
    return out;
}

std::map<std::string, GoldAnswers> load_gold_jsonl(const std::string& path,
                                                   WarningSink* warnings) {
    std::map<std::string, GoldAnswers> out;
    for_each_jsonl(path, warnings, [&](size_t line_no, const json& obj) {
        GoldAnswers g;
        g.qid = require_string(obj, "qid", path, line_no);
        auto it = obj.find("answers");
        if (it == obj.end() || !it->is_array() || it->empty())
            throw ParseError(path, line_no, "field 'answers' must be a non-empty array");
        for (const auto& a : *it) {
            if (!a.is_string()) throw ParseError(path, line_no, "answers must be strings");
            std::string trimmed = trim(a.get<std::string>());
            if (trimmed.empty())
                throw ParseError(path, line_no, "answers must be non-empty after trimming");
            g.answers.push_back(trimmed);
        }
        if (!out.emplace(g.qid, g).second)
            throw DataError(path + ": duplicate qid '" + g.qid + "' (line " +
                            std::to_string(line_no) + ")");
    });
    return out;
}

ExternalScoreStore load_external_scores_jsonl(const std::string& path, WarningSink* warnings) {
    ExternalScoreStore store;
    for_each_jsonl(path, warnings, [&](size_t line_no, const json& obj) {
        std::string qid = require_string(obj, "qid", path, line_no);
        std::string feature = require_string(obj, "feature_name", path, line_no);
        double value = require_number(obj, "value", path, line_no);
        if (!std::isfinite(value))
            throw ParseError(path, line_no, "value must be finite for qid '" + qid + "'");
        if (!store.values[feature].emplace(qid, value).second)
            throw DataError(path + ": duplicate (qid, feature_name) = ('" + qid + "', '" +
                            feature + "') (line " + std::to_string(line_no) + ")");
    });
    return store;
}

EmbeddingStore load_embeddings_jsonl(const std::string& path, WarningSink* warnings) {
    EmbeddingStore store;
    for_each_jsonl(path, warnings, [&](size_t line_no, const json& obj) {
        std::string id = require_string(obj, "id", path, line_no);
        auto it = obj.find("vector");
        if (it == obj.end() || !it->is_array() || it->empty())
            throw ParseError(path, line_no, "field 'vector' must be a non-empty array");
        std::vector<float> vec;
        vec.reserve(it->size());
        for (const auto& v : *it) {
            if (!v.is_number()) throw ParseError(path, line_no, "vector components must be numbers");
            double d = v.get<double>();
            if (!std::isfinite(d))
                throw ParseError(path, line_no, "vector component is not finite for id '" + id + "'");
            vec.push_back(static_cast<float>(d));
        }
        if (store.dimension == 0) {
            store.dimension = vec.size();
        } else if (vec.size() != store.dimension) {
            throw DataError(path + ":" + std::to_string(line_no) + ": dimension mismatch for id '" +
                            id + "': got " + std::to_string(vec.size()) + ", store has " +
                            std::to_string(store.dimension));
        }
        if (!store.by_id.emplace(id, std::move(vec)).second)
            throw DataError(path + ": duplicate embedding id '" + id + "' (line " +
                            std::to_string(line_no) + ")");
    });
    return store;
}

namespace {

constexpr char kEmbMagic[4] = {'E', 'M', 'B', '1'};

uint32_t read_u32_le(const unsigned char* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t read_u16_le(const unsigned char* p) {
    return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

float read_f32_le(const unsigned char* p) {
    uint32_t bits = read_u32_le(p);
    float f;
    std::memcpy(&f, &bits, sizeof(f));
    return f;
}

void write_u32_le(std::string& out, uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void write_u16_le(std::string& out, uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void write_f32_le(std::string& out, float f) {
    uint32_t bits;
    std::memcpy(&bits, &f, sizeof(bits));
    write_u32_le(out, bits);
}

}  // namespace

EmbeddingStore load_embeddings_bin(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
    size_t n = bytes.size();
    if (n < 12 || std::memcmp(p, kEmbMagic, 4) != 0)
        throw DataError(path + ": not an EMB1 embeddings file");
    uint32_t dim = read_u32_le(p + 4);
    uint32_t count = read_u32_le(p + 8);
    if (dim == 0) throw DataError(path + ": zero dimension in header");

    EmbeddingStore store;
    store.dimension = dim;
    size_t off = 12;
    for (uint32_t r = 0; r < count; ++r) {
        if (off + 2 > n) throw DataError(path + ": truncated record header at record " +
                                         std::to_string(r));
        uint16_t id_len = read_u16_le(p + off);
        off += 2;
        if (off + id_len + size_t(dim) * 4 > n)
            throw DataError(path + ": truncated record body at record " + std::to_string(r));
        std::string id(bytes.data() + off, id_len);
        off += id_len;
        std::vector<float> vec(dim);
        for (uint32_t i = 0; i < dim; ++i) {
            vec[i] = read_f32_le(p + off);
            if (!std::isfinite(vec[i]))
                throw DataError(path + ": non-finite component in record '" + id + "'");
            off += 4;
        }
        if (!store.by_id.emplace(std::move(id), std::move(vec)).second)
            throw DataError(path + ": duplicate embedding id at record " + std::to_string(r));
    }
    return store;
}

void write_embeddings_bin(const std::string& path, const EmbeddingStore& store) {
    std::string out;
    out.append(kEmbMagic, 4);
    write_u32_le(out, static_cast<uint32_t>(store.dimension));
    write_u32_le(out, static_cast<uint32_t>(store.by_id.size()));
    for (const auto& [id, vec] : store.by_id) {
        if (id.size() > 0xffff) throw DataError("embedding id too long for binary format: " + id);
        write_u16_le(out, static_cast<uint16_t>(id.size()));
        out += id;
        for (float f : vec) write_f32_le(out, f);
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw DataError("cannot write file: " + path);
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
}

EmbeddingStore load_embeddings(const std::string& path, WarningSink* warnings) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw DataError("cannot open file: " + path);
    char magic[4] = {0, 0, 0, 0};
    probe.read(magic, 4);
    probe.close();
    if (std::memcmp(magic, kEmbMagic, 4) == 0) return load_embeddings_bin(path);
    return load_embeddings_jsonl(path, warnings);
}

std::vector<std::string> load_qid_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open file: " + path);
    std::vector<std::string> out;
    std::set<std::string> seen;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!seen.insert(t).second)
            throw DataError(path + ": duplicate qid '" + t + "' (line " + std::to_string(line_no) +
                            ")");
        out.push_back(t);
    }
    return out;
}

}  // namespace ragpp

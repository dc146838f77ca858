#pragma once
// Client for an OpenAI-compatible completion endpoint: k-shot and zero-shot
// answer generation with logprobs, and echo-scoring of a supplied
// continuation. A deterministic fixture mode replays stored records so the
// whole pipeline runs offline.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ragpp/types.hpp"

namespace ragpp {

enum class Segment { context, answer };

std::string segment_name(Segment s);
Segment parse_segment(const std::string& name);

struct TokenLp {
    std::string text;
    double logprob = 0.0;  // finite, <= 0

    bool operator==(const TokenLp&) const = default;
};

struct TokenTrace {
    std::string qid;
    Segment segment = Segment::answer;
    std::vector<TokenLp> tokens;
    std::string model_name;
    // Set when echo-scoring had to widen the token span because a token
    // crossed the prefix/continuation split.
    bool boundary_realigned = false;
};

struct GenerationRecord {
    std::string qid;
    uint32_t k = 0;  // 0 = zero-shot
    std::string raw_output;
    std::string extracted_answer;
    TokenTrace answer_trace;  // may be empty when only the stop sequence was emitted
    std::string model_name;
};

enum class GatewayMode { live, fixture };

struct GatewayConfig {
    std::string base_url;  // falls back to env RAGPP_BASE_URL
    std::string api_key;   // falls back to env RAGPP_API_KEY
    std::string model_name = "llama-3-8b-instruct-q8";
    uint32_t max_answer_tokens = 64;
    double temperature = 0.0;  // deterministic decoding
    uint32_t request_timeout_ms = 30000;
    uint32_t max_in_flight = 4;
    uint32_t retries = 2;
    uint32_t initial_backoff_ms = 1000;
    uint32_t max_backoff_ms = 30000;
    GatewayMode mode = GatewayMode::fixture;

    // Fills base_url/api_key from the environment when unset.
    void resolve_env();
};

// Delay before the n-th retry (1-based): initial * 2^(n-1), capped.
uint32_t backoff_delay_ms(uint32_t retry_index, uint32_t initial_ms = 1000,
                          uint32_t cap_ms = 30000);

// Prompt template used for every generation request. Pass ctx = nullptr for
// the zero-shot variant, which drops the doc block and the context phrases
// from the instruction.
std::string build_prompt(const Query& query, const ContextBundle* ctx);

// Text between the last "<answer>" and the following "</answer>"; without an
// opening marker, everything before the first "</answer>"; without any
// marker, the whole output. Always trimmed.
std::string extract_answer(const std::string& raw_output);

// Stop sequence sent with every request.
inline constexpr const char* kStopSequence = "</answer>";

struct FixtureStore {
    struct TraceRecord {
        std::vector<TokenLp> tokens;
        std::string model_name;  // empty = unspecified
        bool realigned = false;
    };
    // (qid, k) -> generation
    std::map<std::pair<std::string, uint32_t>, GenerationRecord> generations;
    // (qid, segment index, k) -> trace; k-less records use no_k as key
    static constexpr uint32_t no_k = 0xffffffffu;
    std::map<std::tuple<std::string, int, uint32_t>, TraceRecord> traces;

    bool empty() const { return generations.empty() && traces.empty(); }
};

// generations.jsonl: {qid, k, raw_output, model?}
// logprobs.jsonl:    {qid, segment, k?, model?, tokens: [{t, lp}, ...]}
// Either path may be empty to skip that file.
FixtureStore load_fixtures(const std::string& generations_path, const std::string& logprobs_path);

void write_generations_jsonl(const std::string& path,
                             const std::vector<GenerationRecord>& records);
// Each trace is written with its context size k (FixtureStore::no_k omits
// the field). Records are sorted for byte-stable output.
void write_logprobs_jsonl(const std::string& path,
                          const std::vector<std::pair<TokenTrace, uint32_t>>& traces);

// Identifies which stored trace a scoring call refers to.
struct TraceKey {
    std::string qid;
    Segment segment = Segment::context;
    uint32_t k = 0;
};

class Gateway {
public:
    explicit Gateway(GatewayConfig cfg, FixtureStore fixtures = {});
    ~Gateway();

    Gateway(const Gateway&) = delete;
    Gateway& operator=(const Gateway&) = delete;

    // Generates an answer for the query, k-shot when ctx is present. The
    // returned trace covers generated tokens before the stop sequence.
    GenerationRecord generate_answer(const Query& query, const ContextBundle* ctx,
                                     uint32_t k) const;

    // Log-probabilities of exactly the continuation tokens conditioned on
    // prefix, sliced from an echo-scored request by character offset.
    TokenTrace score_continuation(const std::string& prefix, const std::string& continuation,
                                  const TraceKey& key) const;

    const GatewayConfig& config() const { return cfg_; }

private:
    struct Impl;
    GatewayConfig cfg_;
    FixtureStore fixtures_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace ragpp

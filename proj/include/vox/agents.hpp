#pragma once

#include <deque>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vox/actlang.hpp"
#include "vox/perception.hpp"
#include "vox/skills.hpp"
#include "vox/world.hpp"

namespace vox::agents {

enum class Role { system, user, assistant };
enum class AgentRole { curriculum, action, critic };
enum class PromptVariant { voyager, voyager_gpt4o, voyagervision };

std::string to_string(AgentRole role);
std::string to_string(PromptVariant variant);
std::optional<PromptVariant> variant_from(const std::string& name);

struct Part {
    std::string text;            // when image is empty
    std::optional<Image> image;  // image parts appear only in user messages
};

struct Message {
    Role role;
    std::vector<Part> parts;

    static Message text(Role role, std::string body) { return {role, {{std::move(body), {}}}}; }
};

// Pure request/response contract; backends never touch world state.
class Backend {
public:
    virtual ~Backend() = default;
    virtual std::string complete(const std::vector<Message>& messages) = 0;
    virtual std::string identity() const = 0;
};

struct BackendUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MalformedProposal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MalformedVerdict : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoCodeFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scripted backend: a JSON file mapping agent role to a response list;
// each role's calls consume the list in order and repeat the last entry
// once exhausted.
class ScriptSet {
public:
    static ScriptSet from_json(const std::string& text);
    static ScriptSet from_file(const std::string& path);

    Backend& for_role(AgentRole role);

private:
    class ScriptedBackend;
    std::vector<std::shared_ptr<Backend>> backends_;
};

struct HttpConfig {
    std::string base_url;  // e.g. http://localhost:8000/v1
    std::string model = "gpt-4o";
    double temperature = 0.0;
    int timeout_seconds = 120;
};

// POST {base_url}/chat/completions with OpenAI-style multimodal content
// arrays; images travel as data:image/png;base64 URLs. The API key comes
// from VOXBENCH_API_KEY or OPENAI_API_KEY.
class HttpBackend : public Backend {
public:
    explicit HttpBackend(HttpConfig config);
    std::string complete(const std::vector<Message>& messages) override;
    std::string identity() const override { return "http:" + config_.model; }

    // Request body construction, exposed for wire-format tests.
    static std::string request_body_json(const HttpConfig& config,
                                         const std::vector<Message>& messages);

private:
    HttpConfig config_;
};

// ---- Observations ---------------------------------------------------------

struct Observation {
    std::string biome;
    std::string time_label;
    std::vector<std::string> nearby;
    std::vector<std::string> other_seen;
    std::string position;   // rendered "x=..., y=..., z=..."
    std::string equipment;  // rendered "[]" or "['name']"
    std::string inventory;  // rendered "{'item': n, ...}"
    int inventory_slots = 0;
    std::vector<std::string> completed;
    std::vector<std::string> failed;
    std::string task;
    std::string context;
    std::string critique;
    std::string last_code;
    std::string last_error;
    std::string chat_log;
};

// Cross-iteration loop state.
struct LoopHistory {
    std::vector<std::string> completed;
    std::vector<std::string> failed;
    std::deque<std::vector<std::string>> recent_nearby;  // last 5 iterations
};

Observation build_observation(const VoxelWorld& world, const AgentState& agent,
                              const LoopHistory& history);

// Field order exactly matches the prompt templates for each agent.
std::string render_observation(AgentRole role, const Observation& obs);

// ---- Prompt templates -------------------------------------------------------

std::string load_template(AgentRole role, PromptVariant variant);
std::string dsl_response_format();

// Substitutes the {programs} and {response_format} slots (action templates
// only); everything outside the slots is preserved byte for byte.
std::string render_system_prompt(AgentRole role, PromptVariant variant,
                                 const std::string& programs);

// ---- Response parsing ----------------------------------------------------------

struct TaskProposal {
    std::string reasoning;
    std::string task;
    std::string context;
};

struct Verdict {
    std::string reasoning;
    bool success = false;
    std::string critique;
};

// "Reasoning:"/"Task:" lines, case-insensitive. Throws MalformedProposal.
TaskProposal parse_proposal(const std::string& reply);

// JSON object with exactly {reasoning, success, critique}; markdown fences
// and prose outside the outermost braces are stripped. A failure verdict
// must carry a non-empty critique. Throws MalformedVerdict.
Verdict parse_verdict(const std::string& reply);

// ---- The loop ------------------------------------------------------------------

struct AgentConfig {
    int max_retries = 3;
    int skill_top_k = 5;
    int dirt_scaffold_target = 16;  // prompt guidance only, never enforced
    PromptVariant variant = PromptVariant::voyagervision;
    int image_width = 320;
    int image_height = 240;
    actlang::ExecLimits limits;
};

// Sink for transcript events and screenshots; null recorder = no output.
class Recorder {
public:
    virtual ~Recorder() = default;
    virtual void record_event(const std::string& json_line) = 0;
    virtual std::string save_screenshot(int iteration, int round, const std::string& tag,
                                        const Image& image) = 0;
};

struct RoundRecord {
    int round = 1;
    std::string source;        // extracted program, empty when none was found
    std::string agent_error;   // NoCodeFound / MalformedVerdict details
    bool executed = false;
    bool exec_ok = false;
    std::string exec_error;
    std::vector<std::string> chat_log;
    int steps_used = 0;
    std::optional<Verdict> verdict;
    std::string pre_image_path;
    std::string post_image_path;
};

struct IterationRecord {
    int iteration = 1;
    TaskProposal proposal;
    bool manual_task = false;
    std::vector<RoundRecord> rounds;
    bool success = false;
    std::string skill_name;  // set when a skill was stored
};

struct ManualTask {
    std::string task;
    std::string context;
};

struct LoopContext {
    VoxelWorld* world = nullptr;
    AgentState* agent = nullptr;
    AgentConfig config;
    Backend* curriculum = nullptr;
    Backend* action = nullptr;
    Backend* critic = nullptr;
    skills::SkillLibrary* library = nullptr;
    LoopHistory* history = nullptr;
    Recorder* recorder = nullptr;
};

// One curriculum iteration: propose (or take the manual task; iteration 1 is
// hardcoded), then up to max_retries action/critic rounds. Agent-level
// failures are recorded, not thrown; backend transport errors propagate.
IterationRecord run_iteration(LoopContext& ctx, int iteration,
                              const std::optional<ManualTask>& manual = std::nullopt);

// The paper's fixed opening task.
extern const char* kFirstTask;

}  // namespace vox::agents

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vox/agents.hpp"
#include "vox/verify.hpp"
#include "vox/world.hpp"

namespace vox::harness {

// The ten shipped unit-test seeds (5 flat, 5 regular), reset and reused for
// each task. Reference scripts are tuned against exactly these.
extern const std::vector<std::uint64_t> kFlatSeeds;
extern const std::vector<std::uint64_t> kRegularSeeds;
// Shipped open-ended seeds the reference policies are tuned for.
extern const std::uint64_t kResourceSeedRegular;
extern const std::uint64_t kResourceSeedFlat;

struct BackendSpec {
    std::string kind = "scripted";  // "scripted" | "http"
    std::string script_path;        // file, or directory of unit_<t>_<kind>.json
    agents::HttpConfig http;
};

struct Config {
    std::string experiment = "unit_tests";  // unit_tests | resources | building
    BackendSpec backend;
    agents::PromptVariant variant = agents::PromptVariant::voyagervision;
    std::vector<std::uint64_t> flat_seeds = kFlatSeeds;
    std::vector<std::uint64_t> regular_seeds = kRegularSeeds;
    std::vector<std::string> templates;  // unit-test subset; empty = all five
    std::uint64_t seed = kResourceSeedRegular;  // open-ended world seed
    WorldKind world_kind = WorldKind::regular;  // open-ended world kind
    int max_iterations = 0;  // 0 = experiment default (30 resources / 50 building)
    int max_retries = 3;
    int parallelism = 1;
    std::string out_dir = "out";
};

Config config_from_json(const std::string& text);
std::string config_to_json(const Config& config);

struct ManualTaskSpec {
    std::string task;
    std::string context;
    std::vector<std::pair<std::string, int>> provisioned;
};

// App-defined (task, context, provisioning) triple for one template.
ManualTaskSpec unit_task(verify::StructureKind kind);

// ---- Reports -----------------------------------------------------------------

struct UnitTrialRow {
    std::string template_name;
    std::string kind;
    std::uint64_t seed = 0;
    bool reported = false;
    bool oracle_true = false;
    std::string oracle_reason;
};

struct UnitTestReport {
    std::vector<UnitTrialRow> rows;
    bool complete = true;
    std::string abort_reason;

    int reported_count(const std::string& template_name, const std::string& kind) const;
    int oracle_count(const std::string& template_name, const std::string& kind) const;
    int attempts(const std::string& template_name, const std::string& kind) const;
    // Table-style cell "3(2)/5"; the parenthetical appears when the oracle
    // and reported counts differ.
    std::string cell(const std::string& template_name, const std::string& kind) const;

    std::string to_json() const;
    std::string to_csv() const;
};

struct ResourceReport {
    std::optional<int> wooden_pickaxe_iteration;
    std::optional<int> stone_pickaxe_iteration;
    std::optional<int> iron_pickaxe_iteration;
    int unique_items = 0;
    int iterations_run = 0;
    bool complete = true;
    std::string abort_reason;

    std::string to_json() const;
    std::string to_csv() const;
};

struct BuildingReport {
    int building_attempts = 0;
    int building_successes = 0;
    int unique_structures = 0;
    int iterations_run = 0;
    std::string world_kind;
    bool complete = true;
    std::string abort_reason;

    // "n/a" when no building task was ever proposed.
    std::string success_rate() const;

    std::string to_json() const;
    std::string to_csv() const;
};

// First word of the proposed task decides the class; create/build/construct
// count as building, everything else as gathering.
bool is_building_task(const std::string& task);

// ---- Runners -----------------------------------------------------------------

UnitTestReport run_unit_tests(const Config& config);
ResourceReport run_open_ended_resources(const Config& config);
BuildingReport run_open_ended_building(const Config& config);

// Re-runs every recorded program of a past run against its recorded seeds,
// without any backend, and recomputes oracle verdicts.
struct ReplayRow {
    std::string trial;
    std::string detail;
    bool ok = false;
};
std::vector<ReplayRow> replay_run(const std::string& run_dir);

// Transcript + screenshot sink for one trial directory.
class RunRecorder : public agents::Recorder {
public:
    explicit RunRecorder(std::string trial_dir);
    void record_event(const std::string& json_line) override;
    std::string save_screenshot(int iteration, int round, const std::string& tag,
                                const Image& image) override;
    void flush();

private:
    std::string dir_;
    std::vector<std::string> lines_;
};

}  // namespace vox::harness

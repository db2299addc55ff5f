#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mtwsc {

/// Raised when an input file cannot be parsed at all (malformed JSON,
/// missing fields, wrong types). The message carries the offending
/// location as reported by the JSON parser plus the field path.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a file parses but violates a model invariant. The message
/// names the offending service or concept.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Single-inheritance concept taxonomy with one root. Immutable after
/// construction; concept ids are dense ints assigned in discovery order
/// (root first, then edge endpoints in file order).
class Ontology {
public:
    Ontology(std::string root,
             const std::vector<std::pair<std::string, std::string>>& edges);

    int id(const std::string& name) const;  // throws ValidationError if unknown
    std::optional<int> find(const std::string& name) const noexcept;
    bool contains(const std::string& name) const noexcept { return find(name).has_value(); }

    const std::string& name(int id) const { return names_.at(static_cast<size_t>(id)); }
    int parent(int id) const { return parent_.at(static_cast<size_t>(id)); }  // -1 for root
    int depth(int id) const { return depth_.at(static_cast<size_t>(id)); }    // root depth = 1
    int root() const { return root_; }
    int size() const { return static_cast<int>(names_.size()); }

    /// Parent->child pairs in canonical (sorted by name) order, for saving.
    std::vector<std::pair<std::string, std::string>> sorted_edges() const;

    bool operator==(const Ontology& other) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> ids_;
    std::vector<int> parent_;
    std::vector<int> depth_;
    int root_ = 0;
};

struct QoS {
    double availability = 1.0;   // in (0,1]
    double reliability = 1.0;    // in (0,1]
    double response_time = 1.0;  // > 0, milliseconds
    double cost = 0.0;           // >= 0, currency units

    bool operator==(const QoS&) const = default;
};

struct Service {
    std::string id;
    std::vector<std::string> inputs;   // concept names, kept sorted + unique
    std::vector<std::string> outputs;  // concept names, kept sorted + unique
    QoS qos;

    bool operator==(const Service&) const = default;
};

/// Ontology plus an ordered service list. List order is canonical: the
/// permutation alphabet is the index range [0, size()).
class ServiceRepository {
public:
    ServiceRepository(Ontology ontology, std::vector<Service> services);

    const Ontology& ontology() const { return ontology_; }
    const std::vector<Service>& services() const { return services_; }
    const Service& service(int index) const { return services_.at(static_cast<size_t>(index)); }
    int size() const { return static_cast<int>(services_.size()); }

    /// Concept-id views of service I/O, used by the decoder hot path.
    const std::vector<int>& inputs_of(int index) const { return in_ids_.at(static_cast<size_t>(index)); }
    const std::vector<int>& outputs_of(int index) const { return out_ids_.at(static_cast<size_t>(index)); }

    bool operator==(const ServiceRepository& other) const;

private:
    Ontology ontology_;
    std::vector<Service> services_;
    std::vector<std::vector<int>> in_ids_;
    std::vector<std::vector<int>> out_ids_;
};

/// One composition request: turn inputs into outputs with the solution's
/// QoSM inside the half-open interval (qosm_lo, qosm_hi].
struct CompositionTask {
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    double qosm_lo = 0.0;
    double qosm_hi = 1.0;

    bool contains_qosm(double q) const { return q > qosm_lo && q <= qosm_hi; }
    bool operator==(const CompositionTask&) const = default;
};

/// K tasks sharing inputs/outputs, sorted ascending by qosm_lo. Index
/// adjacency in this order is the neighborhood structure used by the
/// engine's neighbor-task strategy.
struct TaskSet {
    std::vector<CompositionTask> tasks;

    int size() const { return static_cast<int>(tasks.size()); }
    const CompositionTask& operator[](int j) const { return tasks.at(static_cast<size_t>(j)); }

    /// Validates K >= 1, shared I/O, sorted non-degenerate intervals.
    static TaskSet create(std::vector<CompositionTask> tasks);
};

/// Task I/O resolved to concept ids against a repository's ontology.
struct CompiledTask {
    std::vector<int> inputs;
    std::vector<int> outputs;
};

CompiledTask compile_task(const ServiceRepository& repo, const CompositionTask& task);

ServiceRepository load_repository(const std::filesystem::path& path);
ServiceRepository parse_repository(const std::string& text, const std::string& origin = "<string>");
void save_repository(const ServiceRepository& repo, const std::filesystem::path& path);
std::string repository_to_json(const ServiceRepository& repo);

TaskSet load_taskset(const std::filesystem::path& path);
TaskSet parse_taskset(const std::string& text, const std::string& origin = "<string>");
void save_taskset(const TaskSet& tasks, const std::filesystem::path& path);
std::string taskset_to_json(const TaskSet& tasks);

/// True iff the iterated forward closure of the task inputs over the whole
/// repository (exact or plugin matches) eventually covers every task output.
bool validate_task(const ServiceRepository& repo, const CompositionTask& task);

struct GeneratorParams {
    int n_services = 20;
    int taxonomy_depth = 4;  // levels including the root
    int branching = 3;
    int segments = 4;        // K
    std::uint64_t seed = 1;
    bool duplicate = false;  // clone every service with perturbed QoS
};

/// Seeded synthetic instance: a repository guaranteed to solve the generated
/// task set (a backbone chain from inputs to outputs is planted first,
/// distractor and alternative-provider services are added around it), plus
/// K tasks whose intervals partition (0,1] evenly.
std::pair<ServiceRepository, TaskSet> generate_synthetic(const GeneratorParams& params);

}  // namespace mtwsc
